#ifndef VPOL_QUADRATURE_HPP
#define VPOL_QUADRATURE_HPP

// Double-exponential (tanh-sinh / exp-sinh) rules for finite and
// semi-infinite intervals, a recursive Gauss-Legendre rule for smooth
// panels, and an accelerated partition sine transform for oscillatory
// radial integrals.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "vpol/accuracy.hpp"
#include "vpol/errors.hpp"

namespace vpol::quad {

struct Result {
    double value = 0.0;
    double error_estimate = std::numeric_limits<double>::infinity();
    int levels = 0;
    bool converged = false;
};

namespace detail {

inline constexpr double pi = 3.141592653589793238462643383279503;
inline constexpr double pi_half = 1.5707963267948966;

// Kahan-compensated accumulator.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace detail

// tanh-sinh rule on (a, b).  The callable receives the abscissa plus its
// offsets from both endpoints, computed without cancellation, so integrands
// with endpoint singularities (log, algebraic) evaluate accurately:
//   f(x, x - a, b - x).
template <class F3>
Result tanh_sinh_full(F3&& f, double a, double b, const EvalAccuracy& acc = {}) {
    acc.validate();
    if (!(b > a))
        throw DomainError("tanh_sinh: requires b > a");

    const double width = b - a;
    const double half_width = 0.5 * width;
    const double center = 0.5 * (a + b);
    const double t_max = std::asinh(680.0 / detail::pi_half / 2.0);

    // Weighted pair of samples at transformed nodes +-t, t > 0.
    auto sample_pair = [&](double t) -> double {
        const double u = detail::pi_half * std::sinh(t);
        const double e = std::exp(-2.0 * u); // u > 0
        const double sigma = e / (1.0 + e);  // endpoint offset fraction
        const double w =
            detail::pi_half * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (w == 0.0 || sigma == 0.0)
            return 0.0;
        const double off = width * sigma;
        double out = 0.0;
        const double v_hi = f(b - off, width - off, off); // node near b
        if (std::isfinite(v_hi))
            out += w * v_hi;
        const double v_lo = f(a + off, off, width - off); // node near a
        if (std::isfinite(v_lo))
            out += w * v_lo;
        return out;
    };

    detail::Kahan sum;
    double h = 1.0;
    sum.add(detail::pi_half * f(center, half_width, half_width)); // t = 0
    for (double t = h; t <= t_max; t += h)
        sum.add(sample_pair(t));
    double i_prev = sum.value() * h;

    Result res;
    for (int lev = 1; lev <= acc.max_subdivisions; ++lev) {
        h *= 0.5;
        detail::Kahan add;
        for (double t = h; t <= t_max; t += 2.0 * h)
            add.add(sample_pair(t));
        sum.add(add.value());
        const double i_new = sum.value() * h;
        const double err = std::abs(i_new - i_prev);
        res.levels = lev;
        res.value = half_width * i_new;
        res.error_estimate = half_width * err;
        const double goal =
            std::max(acc.rel_tol * std::abs(res.value), acc.abs_tol);
        if (lev >= 2 && res.error_estimate <= goal) {
            res.converged = true;
            return res;
        }
        i_prev = i_new;
    }
    return res;
}

template <class F>
Result tanh_sinh(F&& f, double a, double b, const EvalAccuracy& acc = {}) {
    return tanh_sinh_full([&](double x, double, double) { return f(x); }, a, b,
                          acc);
}

// exp-sinh rule on (a, infinity) for integrands decaying at infinity and
// possibly (integrably) singular at a.  The callable receives (x, x - a).
template <class F2>
Result exp_sinh_full(F2&& f, double a, const EvalAccuracy& acc = {}) {
    acc.validate();
    const double t_max = std::asinh(680.0 / detail::pi_half / 2.0);

    auto sample = [&](double t) -> double {
        const double u = detail::pi_half * std::sinh(t);
        if (std::abs(u) > 690.0)
            return 0.0;
        const double dx = std::exp(u); // offset from a
        const double w = detail::pi_half * std::cosh(t) * dx;
        if (!std::isfinite(w) || w == 0.0)
            return 0.0;
        const double v = f(a + dx, dx);
        return std::isfinite(v) ? w * v : 0.0;
    };

    detail::Kahan sum;
    double h = 1.0;
    sum.add(sample(0.0));
    for (double t = h; t <= t_max; t += h) {
        sum.add(sample(t));
        sum.add(sample(-t));
    }
    double i_prev = sum.value() * h;

    Result res;
    for (int lev = 1; lev <= acc.max_subdivisions; ++lev) {
        h *= 0.5;
        detail::Kahan add;
        for (double t = h; t <= t_max; t += 2.0 * h) {
            add.add(sample(t));
            add.add(sample(-t));
        }
        sum.add(add.value());
        const double i_new = sum.value() * h;
        const double err = std::abs(i_new - i_prev);
        res.levels = lev;
        res.value = i_new;
        res.error_estimate = err;
        const double goal =
            std::max(acc.rel_tol * std::abs(res.value), acc.abs_tol);
        if (lev >= 2 && err <= goal) {
            res.converged = true;
            return res;
        }
        i_prev = i_new;
    }
    return res;
}

template <class F>
Result exp_sinh(F&& f, double a, const EvalAccuracy& acc = {}) {
    return exp_sinh_full([&](double x, double) { return f(x); }, a, acc);
}

template <class F>
double tanh_sinh_or_throw(F&& f, double a, double b, const EvalAccuracy& acc = {}) {
    const Result r = tanh_sinh(std::forward<F>(f), a, b, acc);
    if (!r.converged)
        throw ConvergenceError("tanh_sinh quadrature did not converge",
                               r.error_estimate /
                                   std::max(std::abs(r.value), 1e-300));
    return r.value;
}

template <class F>
double exp_sinh_or_throw(F&& f, double a, const EvalAccuracy& acc = {}) {
    const Result r = exp_sinh(std::forward<F>(f), a, acc);
    if (!r.converged)
        throw ConvergenceError("exp_sinh quadrature did not converge",
                               r.error_estimate /
                                   std::max(std::abs(r.value), 1e-300));
    return r.value;
}

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], generated once by Newton iteration
// on the Legendre recurrence.
template <int N>
struct GaussLegendre {
    std::array<double, N> x{}, w{};
    GaussLegendre() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            double z = std::cos(pi * (i + 0.75) / (N + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < N; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = N * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-16)
                    break;
            }
            x[i] = -z;
            x[N - 1 - i] = z;
            w[i] = w[N - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const GaussLegendre<15>& gl15() {
    static const GaussLegendre<15> g;
    return g;
}

template <class F>
double gl15_panel(F&& f, double a, double b) {
    const auto& g = gl15();
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    Kahan s;
    for (int i = 0; i < 15; ++i)
        s.add(g.w[i] * f(c + hw * g.x[i]));
    return s.value() * hw;
}

} // namespace detail

// Adaptive bisection with a 15-point Gauss panel; a panel is accepted when
// its two-half refinement agrees with it.
template <class F>
double adaptive(F&& f, double a, double b, double tol, int max_depth = 48) {
    struct Frame {
        double a, b, whole;
        int depth;
    };
    std::vector<Frame> stack{{a, b, detail::gl15_panel(f, a, b), 0}};
    detail::Kahan total;
    while (!stack.empty()) {
        const Frame fr = stack.back();
        stack.pop_back();
        const double m = 0.5 * (fr.a + fr.b);
        const double left = detail::gl15_panel(f, fr.a, m);
        const double right = detail::gl15_panel(f, m, fr.b);
        const double err = std::abs(left + right - fr.whole);
        if (err <= tol * std::max(1.0, std::abs(left + right)) * 0.1 ||
            fr.depth >= max_depth) {
            total.add(left);
            total.add(right);
        } else {
            stack.push_back({fr.a, m, left, fr.depth + 1});
            stack.push_back({m, fr.b, right, fr.depth + 1});
        }
    }
    return total.value();
}

// I = int_0^infty f(r) sin(k r) dr for smooth f decaying at infinity
// (exponentially or like a power), possibly with an integrable singularity
// at r = 0.  Partition at the zeros of sin(kr); the first panel uses
// tanh-sinh, later panels the adaptive Gauss rule.  Once panel magnitudes
// decrease, the alternating tail is summed by iterated averaging of the
// partial sums (Euler transformation).
struct OscillatoryOptions {
    double rel_tol = 1e-11;
    std::size_t max_panels = 100000;
    int tail_depth = 24;
};

template <class F>
double sin_transform(F&& f, double k, const OscillatoryOptions& opt = {}) {
    if (!(k > 0.0))
        throw DomainError("sin_transform: requires k > 0");
    const double h = detail::pi / k;

    auto g = [&](double r) { return f(r) * std::sin(k * r); };

    EvalAccuracy panel_acc;
    panel_acc.rel_tol = 1e-13;
    panel_acc.max_subdivisions = 11;

    detail::Kahan partial;
    partial.add(tanh_sinh_full(
                    [&](double x, double da, double) {
                        (void)da;
                        return g(x);
                    },
                    0.0, h, panel_acc)
                    .value);

    double scale = std::abs(partial.value());
    double prev_mag = std::numeric_limits<double>::infinity();
    bool tail_mode = false;
    std::vector<double> tail_sums;

    double best = partial.value();
    double best_err = std::numeric_limits<double>::infinity();

    for (std::size_t j = 1; j < opt.max_panels; ++j) {
        const double pj = adaptive(g, j * h, (j + 1) * h, 1e-13);
        partial.add(pj);
        const double mag = std::abs(pj);
        scale = std::max(scale, std::abs(partial.value()));

        if (!tail_mode) {
            if (mag <= 1e-16 * scale && j > 3)
                return partial.value();
            if (mag < prev_mag && j >= 3) {
                tail_mode = true;
                tail_sums.assign(1, partial.value());
            }
            prev_mag = mag;
            continue;
        }

        tail_sums.push_back(partial.value());

        if (tail_sums.size() >= 4) {
            std::vector<double> row = tail_sums;
            if ((int)row.size() > opt.tail_depth)
                row.erase(row.begin(), row.end() - opt.tail_depth);
            while (row.size() > 1) {
                for (std::size_t i = 0; i + 1 < row.size(); ++i)
                    row[i] = 0.5 * (row[i] + row[i + 1]);
                row.pop_back();
            }
            const double extrap = row.front();
            const double err = std::abs(extrap - best);
            best = extrap;
            best_err = err;
            if (tail_sums.size() >= 8 &&
                err <= opt.rel_tol * std::max(std::abs(extrap), 1e-300))
                return extrap;
        }
        if (mag <= 1e-17 * std::max(scale, 1e-300) && j > 8)
            return partial.value();
    }
    throw ConvergenceError(
        "sin_transform: panel cap reached before the accelerated tail settled",
        best_err / std::max(std::abs(best), 1e-300));
}

} // namespace vpol::quad

#endif
