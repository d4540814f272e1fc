#ifndef VPOL_PARALLEL_HPP
#define VPOL_PARALLEL_HPP

#include <future>
#include <thread>
#include <vector>

namespace vpol::util {

// Ordered parallel map: fn(i) for i in [0, n), results returned in index
// order regardless of scheduling.  threads <= 1 runs inline.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, int threads, Fn&& fn) {
    std::vector<T> out(n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = fn(i);
        return out;
    }
    const std::size_t nw = std::min<std::size_t>(threads, n);
    std::vector<std::future<void>> futs;
    futs.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += nw)
                out[i] = fn(i);
        }));
    }
    for (auto& f : futs)
        f.get();
    return out;
}

} // namespace vpol::util

#endif
