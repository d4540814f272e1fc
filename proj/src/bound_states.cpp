#include "vpol/bound_states.hpp"

#include <algorithm>
#include <cmath>

#include "vpol/potentials.hpp"
#include "vpol/quadrature.hpp"
#include "vpol/special_functions.hpp"

namespace vpol::bound {

namespace {

constexpr double pi = 3.141592653589793238462643383279503;

// Generalized Laguerre L^{(a)}_m(x) by upward recurrence.
double laguerre(int m, int a, double x) {
    if (m == 0)
        return 1.0;
    double lkm1 = 1.0, lk = 1.0 + a - x;
    for (int j = 1; j < m; ++j) {
        const double lkp1 = ((2.0 * j + a + 1.0 - x) * lk - (j + a) * lkm1) /
                            (j + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double radial_norm(int n, int ell, double Q) {
    // (2Q/n)^{3/2} sqrt((n-l-1)! / (2n (n+l)!))
    double lf = 0.0; // ln[(n+l)!/(n-l-1)!]
    for (int j = n - ell; j <= n + ell; ++j)
        lf += std::log(double(j));
    return std::pow(2.0 * Q / n, 1.5) *
           std::exp(-0.5 * (std::log(2.0 * double(n)) + lf));
}

// Electron-nucleus pair context for the vacuum-polarization addition:
// linear charge -Q, cubic charge -Q^3.
PhysicalContext electron_nucleus_ctx(double Q, const PhysicalContext& ctx) {
    return PhysicalContext::pair(-1.0, Q, ctx.alpha);
}

double vp_addition(double r, Shift which, const PhysicalContext& en_ctx) {
    double v = 0.0;
    if (which == Shift::uehling || which == Shift::both)
        v += pot::uehling_closed(r, en_ctx);
    if (which == Shift::wichmann_kroll || which == Shift::both)
        v += pot::wichmann_kroll_regularized(r, en_ctx);
    return v;
}

} // namespace

double HydrogenicState::radial(double r) const {
    if (r < 0.0)
        throw DomainError("HydrogenicState::radial: requires r >= 0");
    const double x = 2.0 * Q * r / n;
    return radial_norm(n, ell, Q) * std::exp(-0.5 * x) * std::pow(x, ell) *
           laguerre(n - ell - 1, 2 * ell + 1, x);
}

double HydrogenicState::radial_deriv(double r) const {
    if (r < 0.0)
        throw DomainError("HydrogenicState::radial_deriv: requires r >= 0");
    const double x = 2.0 * Q * r / n;
    const int m = n - ell - 1;
    const double L = laguerre(m, 2 * ell + 1, x);
    const double Lp = (m == 0) ? 0.0 : -laguerre(m - 1, 2 * ell + 2, x);
    const double xl = std::pow(x, ell);
    const double poly =
        -0.5 * xl * L + (ell > 0 ? ell * std::pow(x, ell - 1) * L : 0.0) +
        xl * Lp;
    return radial_norm(n, ell, Q) * std::exp(-0.5 * x) * poly * 2.0 * Q / n;
}

HydrogenicState hydrogenic_state(int n, int ell, double Q) {
    if (n < 1 || ell < 0 || ell >= n)
        throw DomainError("hydrogenic_state: requires 1 <= n, 0 <= ell < n");
    if (!(Q > 0.0))
        throw DomainError("hydrogenic_state: requires Q > 0");
    HydrogenicState s;
    s.n = n;
    s.ell = ell;
    s.Q = Q;
    s.energy = -Q * Q / (2.0 * double(n) * double(n));
    return s;
}

double perturbative_shift(const HydrogenicState& state, Shift which,
                          const PhysicalContext& ctx, const EvalAccuracy& acc) {
    acc.validate();
    const PhysicalContext en = electron_nucleus_ctx(state.Q, ctx);
    auto integrand = [&](double r) {
        const double R = state.radial(r);
        return vp_addition(r, which, en) * R * R * r * r;
    };

    // [0, alpha]: log-aware rule for the Uehling short-range singularity
    EvalAccuracy head_acc = acc;
    head_acc.abs_tol = std::max(acc.abs_tol, 1e-300);
    double total = quad::tanh_sinh_full(
                       [&](double r, double dr, double) {
                           const double rr = (r == 0.0) ? dr : r;
                           return integrand(rr);
                       },
                       0.0, ctx.alpha, head_acc)
                       .value;

    // [alpha, out]: doubling segments until the exponential density kills it
    const double r_far = 90.0 * state.n / state.Q + 20.0;
    double a = ctx.alpha;
    while (a < r_far) {
        const double b = std::min(2.0 * a, r_far);
        total += quad::adaptive(integrand, a, b, 1e-13);
        a = b;
    }
    return total;
}

EigenResult numerov_eigensolve(int n, int ell, double Q, PotentialMode mode,
                               const NumerovGrid& grid,
                               const PhysicalContext& ctx) {
    if (n < 1 || ell < 0 || ell >= n)
        throw DomainError("numerov_eigensolve: requires 1 <= n, 0 <= ell < n");
    if (!(Q > 0.0))
        throw DomainError("numerov_eigensolve: requires Q > 0");
    const double r_min = grid.r_min > 0.0 ? grid.r_min : 1e-5 / Q;
    const double r_max = grid.r_max > 0.0 ? grid.r_max : 50.0 * n * n / Q;
    const int N = grid.count;
    if (N < 100)
        throw DomainError("numerov_eigensolve: grid too coarse (< 100 points)");
    if (!(r_min < r_max))
        throw DomainError("numerov_eigensolve: requires r_min < r_max");

    const double x0 = std::log(r_min), x1 = std::log(r_max);
    const double h = (x1 - x0) / (N - 1);

    std::vector<double> r(N), pot_tab(N);
    const PhysicalContext en = electron_nucleus_ctx(Q, ctx);
    for (int i = 0; i < N; ++i) {
        r[i] = std::exp(x0 + i * h);
        pot_tab[i] = -Q / r[i];
        if (mode == PotentialMode::total)
            pot_tab[i] += vp_addition(r[i], Shift::both, en);
    }

    // v'' = W v with W = 1/4 + l(l+1) + 2 r^2 (V - E); u = v e^{x/2}
    std::vector<double> W(N), vout(N), vin(N);
    auto fill_w = [&](double E) {
        for (int i = 0; i < N; ++i)
            W[i] = 0.25 + ell * (ell + 1.0) +
                   2.0 * r[i] * r[i] * (pot_tab[i] - E);
    };

    struct ShootResult {
        double mismatch;
        int nodes;
        int im;
    };

    auto shoot = [&](double E) -> ShootResult {
        fill_w(E);
        // outer classical turning point
        int im = -1;
        for (int i = N - 2; i >= 1; --i) {
            if (W[i] <= 0.0) {
                im = i;
                break;
            }
        }
        if (im < 2 || im > N - 3)
            return {std::nan(""), -1, im};

        const double h2 = h * h;
        auto step = [&](int i, int dir, const std::vector<double>& v) {
            // Numerov three-term step
            return (2.0 * (1.0 + 5.0 * h2 / 12.0 * W[i]) * v[i] -
                    (1.0 - h2 / 12.0 * W[i - dir]) * v[i - dir]) /
                   (1.0 - h2 / 12.0 * W[i + dir]);
        };

        // outward: u ~ r^{l+1}, v ~ e^{(l+1/2)x}
        vout[0] = 1e-280;
        vout[1] = vout[0] * std::exp((ell + 0.5) * h);
        int nodes = 0;
        for (int i = 1; i <= im; ++i) {
            vout[i + 1] = step(i, +1, vout);
            if (vout[i] != 0.0 && vout[i + 1] / vout[i] < 0.0 && i + 1 <= im)
                ++nodes;
            // renormalize to avoid overflow
            if (std::abs(vout[i + 1]) > 1e250) {
                const double s = 1.0 / std::abs(vout[i + 1]);
                for (int j = 0; j <= i + 1; ++j)
                    vout[j] *= s;
            }
        }
        // inward: u ~ e^{-kappa r}, v ~ e^{-kappa r + x/2}
        const double kappa = std::sqrt(std::max(-2.0 * E, 1e-30));
        vin[N - 1] = 1e-280;
        vin[N - 2] = vin[N - 1] * std::exp(kappa * (r[N - 1] - r[N - 2]) -
                                           0.5 * h);
        for (int i = N - 2; i >= im; --i) {
            vin[i - 1] = step(i, -1, vin);
            if (std::abs(vin[i - 1]) > 1e250) {
                const double s = 1.0 / std::abs(vin[i - 1]);
                for (int j = N - 1; j >= i - 1; --j)
                    vin[j] *= s;
            }
        }
        // log-derivative mismatch at im (centered differences)
        const double dout = (vout[im + 1] - vout[im - 1]) / (2.0 * h);
        const double din = (vin[im + 1] - vin[im - 1]) / (2.0 * h);
        const double mism =
            dout / vout[im] - din / vin[im];
        return {mism, nodes, im};
    };

    const double e_hydro = -Q * Q / (2.0 * double(n) * double(n));
    double E_lo = 1.45 * e_hydro, E_hi = 0.62 * e_hydro;
    const int target = n - ell - 1;

    // -1: energy below the target eigenvalue, +1: above.  The matching
    // mismatch decreases through zero as E rises past the eigenvalue.
    auto classify = [&](double E) -> int {
        const auto s = shoot(E);
        if (s.nodes < 0)
            return 0;
        if (s.nodes > target)
            return +1;
        if (s.nodes < target)
            return -1;
        return s.mismatch > 0.0 ? -1 : +1;
    };

    // widen the bracket until it straddles the target level
    for (int tries = 0; tries < 60 && classify(E_lo) != -1; ++tries)
        E_lo *= 1.3;
    for (int tries = 0; tries < 60 && classify(E_hi) != +1; ++tries)
        E_hi *= 0.77;

    int c_lo = classify(E_lo), c_hi = classify(E_hi);
    if (c_lo == c_hi)
        throw ConvergenceError(
            "numerov_eigensolve: failed to bracket the eigenvalue (no sign "
            "change)",
            0.0);

    double a = E_lo, b = E_hi;
    for (int it = 0; it < 90; ++it) {
        const double m = 0.5 * (a + b);
        const int cm = classify(m);
        if (cm == c_lo)
            a = m;
        else
            b = m;
        if (std::abs(b - a) < 1e-14 * std::abs(a))
            break;
    }
    const double E = 0.5 * (a + b);

    // assemble the normalized eigenfunction from the final sweeps
    const auto fin = shoot(E);
    EigenResult res;
    res.energy = E;
    res.nodes = fin.nodes;
    res.converged = std::isfinite(fin.mismatch);
    res.r = r;
    res.u.assign(N, 0.0);
    const double scale = vout[fin.im] / vin[fin.im];
    for (int i = 0; i <= fin.im; ++i)
        res.u[i] = vout[i];
    for (int i = fin.im + 1; i < N; ++i)
        res.u[i] = vin[i] * scale;
    // u = v e^{x/2}; rescale by the peak before squaring, then normalize
    // int u^2 dr = int u^2 r dx
    double peak = 0.0;
    for (int i = 0; i < N; ++i) {
        res.u[i] *= std::sqrt(r[i]);
        peak = std::max(peak, std::abs(res.u[i]));
    }
    double norm = 0.0;
    for (int i = 0; i < N; ++i) {
        res.u[i] /= peak;
        norm += res.u[i] * res.u[i] * r[i] * (i == 0 || i == N - 1 ? 0.5 : 1.0);
    }
    norm = std::sqrt(norm * h);
    for (auto& ui : res.u)
        ui /= norm;
    return res;
}

double cusp_operator_value(const HydrogenicState& state) {
    if (state.ell != 0)
        throw DomainError("cusp_operator_value: states with ell > 0 vanish at "
                          "contact (no cusp)");
    // R ~ e^{-x/2} L^{(1)}_m(x), x = 2Qr/n:
    // R'/R(0) = (2Q/n) [-1/2 - L^{(2)}_{m-1}(0)/L^{(1)}_m(0)] = -Q
    const int m = state.n - 1;
    const double l1 = m + 1.0;                  // L^{(1)}_m(0)
    const double l2 = (m > 0) ? 0.5 * m * (m + 1.0) : 0.0; // L^{(2)}_{m-1}(0)
    return 2.0 * state.Q / state.n * (-0.5 - l2 / l1);
}

double minimal_distance(double Q, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(Q > 0.0))
        throw DomainError("minimal_distance: requires Q > 0");
    return ctx.alpha / Q;
}

CuspReport modified_cusp(double Q, double C_param, double f_param,
                         const PhysicalContext& ctx) {
    ctx.validate();
    if (!(C_param > 0.0))
        throw DomainError("modified_cusp: requires C > 0");
    const double a = ctx.alpha;
    CuspReport rep;
    rep.nu_coulomb = -Q;
    rep.C_param = C_param;
    rep.f_param = f_param;
    rep.uehling_rel_correction =
        a / (3.0 * pi) *
        (5.0 / 3.0 + 2.0 * sf::euler_gamma + 2.0 * std::log(C_param));
    rep.wk_abs_correction =
        2.0 * Q * Q * Q * a * a * a / (225.0 * pi * (1.0 + C_param * C_param));
    rep.nu_modified = -Q * (1.0 - rep.uehling_rel_correction) +
                      rep.wk_abs_correction;
    return rep;
}

double cusp_r_dependent(double r, double Q, double f_param,
                        const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("cusp_r_dependent: requires r > 0");
    const double a = ctx.alpha;
    return -Q * (1.0 - a / (3.0 * pi) *
                           (5.0 / 3.0 + 2.0 * sf::euler_gamma -
                            2.0 * std::log(a) + 2.0 * std::log(r))) +
           f_param * 2.0 * Q * Q * Q * a * a * a / (225.0 * pi);
}

} // namespace vpol::bound
