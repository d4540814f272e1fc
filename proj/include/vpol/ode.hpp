#ifndef VPOL_ODE_HPP
#define VPOL_ODE_HPP

// Adaptive embedded Dormand-Prince 5(4) integrator for small dense systems.
// Supports integration in either direction and an accepted-step callback for
// building interpolation tables.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "vpol/errors.hpp"

namespace vpol::ode {

struct Options {
    double rtol = 1e-12;
    double atol = 1e-16;
    double h_init = 0.0; // 0 = automatic
    double h_max = std::numeric_limits<double>::infinity();
    long max_steps = 4000000;
};

template <std::size_t N>
using State = std::array<double, N>;

namespace detail {
// Dormand-Prince coefficients.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                        c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                        a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                        e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640,
                        e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
} // namespace detail

// Integrates y' = rhs(t, y) from t0 to t1.  `on_step(t_prev, y_prev, t, y)`
// is invoked after every accepted step.
template <std::size_t N, class Rhs, class StepCb>
State<N> integrate(Rhs&& rhs, double t0, State<N> y, double t1,
                   const Options& opt, StepCb&& on_step) {
    using namespace detail;
    if (t0 == t1)
        return y;
    const double dir = (t1 > t0) ? 1.0 : -1.0;

    State<N> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
    rhs(t0, y, k1);

    // initial step from the scale of y and y'
    double h = opt.h_init;
    if (h == 0.0) {
        double ynorm = 0.0, fnorm = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            fnorm = std::max(fnorm, std::abs(k1[i]));
        }
        h = (fnorm > 0.0) ? 0.01 * std::max(ynorm, opt.atol) / fnorm
                          : std::abs(t1 - t0) / 1000.0;
        h = std::min(h, std::abs(t1 - t0));
        if (h <= 0.0 || !std::isfinite(h))
            h = std::abs(t1 - t0) / 1000.0;
    }
    h = std::min(h, opt.h_max) * dir;

    double t = t0;
    for (long step = 0; step < opt.max_steps; ++step) {
        if ((t - t1) * dir >= 0.0)
            return y;
        if ((t + h - t1) * dir > 0.0)
            h = t1 - t;
        if (std::abs(h) < 1e-14 * (std::abs(t) + 1.0) && step > 0) {
            // step underflow: advance by the minimal representable step
            throw ConvergenceError("ode: step size underflow", std::abs(h));
        }

        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                  a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                   e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc =
                opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err = std::max(err, std::abs(ei) / sc);
        }

        if (err <= 1.0) {
            on_step(t, y, t + h, ynew);
            t += h;
            y = ynew;
            k1 = k7; // FSAL
        }
        const double fac =
            (err > 0.0) ? 0.9 * std::pow(err, -0.2)
                        : 5.0;
        h *= std::min(5.0, std::max(0.2, fac));
        if (std::abs(h) > opt.h_max)
            h = opt.h_max * dir;
    }
    throw ConvergenceError("ode: max step count exceeded", 0.0);
}

template <std::size_t N, class Rhs>
State<N> integrate(Rhs&& rhs, double t0, State<N> y0, double t1,
                   const Options& opt = {}) {
    return integrate<N>(rhs, t0, y0, t1, opt,
                        [](double, const State<N>&, double, const State<N>&) {});
}

} // namespace vpol::ode

#endif
