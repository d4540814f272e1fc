#include "vpol/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "vpol/coulomb_waves.hpp"
#include "vpol/ode.hpp"
#include "vpol/quadrature.hpp"
#include "vpol/special_functions.hpp"

namespace vpol::scatter {

namespace {

constexpr double pi = 3.141592653589793238462643383279503;
using cplx = std::complex<double>;

// Decay exponent p = -d ln|V| / d ln r estimated by a log-slope sample;
// used for the integral tail bound int_r^inf |V| ~ |V(r)| r / (p - 1).
double tail_integral_bound(const RadialPotential& V, double r) {
    const double v1 = std::abs(V(r));
    if (v1 == 0.0)
        return 0.0;
    const double v2 = std::abs(V(1.3 * r));
    if (v2 == 0.0)
        return v1 * r; // decays faster than any power
    const double p = std::log(v1 / v2) / std::log(1.3);
    if (p <= 1.5)
        return v1 * r * 2.0; // crude, flags non-decaying tails upstream
    return v1 * r / (p - 1.0);
}

} // namespace

double background_eta(const PhysicalContext& ctx, double k) {
    if (!(k > 0.0))
        throw DomainError("background_eta: requires k > 0");
    ctx.validate();
    const double q1q2 =
        ctx.mode == ChargeMode::nuclear ? -ctx.Q : ctx.q1 * ctx.q2;
    return q1q2 / k;
}

PhaseTrajectory integrate_phase(const RadialPotential& potential, int ell,
                                double k, const PhysicalContext& ctx,
                                const PhasePolicy& policy) {
    if (!(k > 0.0))
        throw DomainError("integrate_phase: requires k > 0");
    const double eta = background_eta(ctx, k);

    PhaseTrajectory out;
    out.ell = ell;
    out.k = k;

    const double r_start = policy.r_start_over_k / k;
    const double rho_hi = k * policy.r_max * 1.0000001;
    coulomb::FgTable table(ell, eta, k * r_start * 0.999, rho_hi);

    // analytic small-r start: first-order increment with the regular
    // function only (G-term suppressed by delta ~ 0); F ~ C_l (kr)^{l+1}
    const double cl = coulomb::cl_normalization(ell, eta);
    EvalAccuracy start_acc;
    start_acc.rel_tol = 1e-10;
    start_acc.abs_tol = 1e-270;
    const double head = quad::tanh_sinh_full(
                            [&](double r, double dr, double) {
                                const double rr = (r == 0.0) ? dr : r;
                                const double f =
                                    cl * std::pow(k * rr, ell + 1);
                                return potential(rr) * f * f;
                            },
                            0.0, r_start, start_acc)
                            .value;
    double delta = -2.0 / k * head;

    out.samples.emplace_back(r_start, delta);

    auto rhs = [&](double r, const ode::State<1>& y, ode::State<1>& d) {
        const auto fg = table.eval(k * r);
        const double s = std::cos(y[0]) * fg.F + std::sin(y[0]) * fg.G;
        d[0] = -2.0 * potential(r) / k * s * s;
    };

    ode::Options opt;
    opt.rtol = policy.rel_tol;
    opt.atol = policy.abs_tol;

    // march in geometric stages, checking the remaining-tail bound
    double r_lo = r_start;
    double r_hi = std::max(4.0 * r_start, 0.5 * ctx.alpha);
    ode::State<1> y{delta};
    bool converged = false;
    double tail = 0.0;
    while (r_lo < policy.r_max) {
        r_hi = std::min(r_hi, policy.r_max);
        y = ode::integrate<1>(
            rhs, r_lo, y, r_hi, opt,
            [&](double, const ode::State<1>&, double t,
                const ode::State<1>& yn) {
                out.samples.emplace_back(t, yn[0]);
            });
        r_lo = r_hi;
        r_hi *= 2.0;

        const auto fg = table.eval(std::min(k * r_lo, rho_hi));
        const double env = fg.F * fg.F + fg.G * fg.G;
        tail = 2.0 / k * env * tail_integral_bound(potential, r_lo);
        const double scale = std::max(std::abs(y[0]), policy.abs_tol);
        if (tail < policy.tail_tol * scale) {
            converged = true;
            break;
        }
    }

    out.delta_inf = y[0];
    out.converged = converged;
    out.tail_estimate = tail;
    if (!converged)
        throw ConvergenceError(
            "integrate_phase: potential tail not negligible at r_max "
            "(non-decaying potential?)",
            tail);
    return out;
}

double born_phase(const RadialPotential& potential, int ell, double k,
                  const PhysicalContext& ctx) {
    if (!(k > 0.0))
        throw DomainError("born_phase: requires k > 0");
    const double eta = background_eta(ctx, k);
    const double r_cap = 50.0;
    coulomb::FgTable table(ell, eta, 1e-9, k * r_cap * 1.0000001);

    // log-singular head plus adaptive panels, doubling until negligible
    EvalAccuracy acc;
    acc.rel_tol = 1e-11;
    acc.abs_tol = 1e-270;
    const double r0 = std::min(0.5 * ctx.alpha, 1.0 / k);
    const double cl = coulomb::cl_normalization(ell, eta);
    double total = quad::tanh_sinh_full(
                       [&](double r, double dr, double) {
                           const double rr = (r == 0.0) ? dr : r;
                           const double f =
                               rr * k < 1e-9
                                   ? cl * std::pow(k * rr, ell + 1)
                                   : table.eval(k * rr).F;
                           return potential(rr) * f * f;
                       },
                       0.0, r0, acc)
                       .value;
    double a = r0;
    for (int seg = 0; seg < 60 && a < r_cap; ++seg) {
        const double b = std::min(2.0 * a, r_cap);
        const double part = quad::adaptive(
            [&](double r) {
                const double f = table.eval(k * r).F;
                return potential(r) * f * f;
            },
            a, b, 1e-13);
        total += part;
        a = b;
        if (std::abs(part) < 1e-16 * std::abs(total))
            break;
    }
    return -2.0 / k * total;
}

std::complex<double> coulomb_amplitude(double theta, double k, double eta) {
    if (!(theta > 0.0) || theta > pi)
        throw DomainError("coulomb_amplitude: requires 0 < theta <= pi "
                          "(forward direction diverges)");
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double sigma0 = coulomb::coulomb_sigma(0, eta);
    const double phase = -eta * std::log(s2) + 2.0 * sigma0;
    return -eta / (2.0 * k * s2) * cplx(std::cos(phase), std::sin(phase));
}

std::complex<double> total_amplitude(double theta, double k, double delta0,
                                     double sigma0,
                                     const PhysicalContext& ctx) {
    if (!(theta > 0.0) || theta > pi)
        throw DomainError("total_amplitude: requires 0 < theta <= pi");
    if (!(k > 0.0))
        throw DomainError("total_amplitude: requires k > 0");
    const double eta = background_eta(ctx, k);
    const cplx fc = coulomb_amplitude(theta, k, eta);
    const cplx two_i_delta(0.0, 2.0 * delta0);
    const cplx two_i_sigma(0.0, 2.0 * sigma0);
    const cplx add = (std::exp(two_i_delta) - 1.0) / cplx(0.0, 2.0 * k) *
                     std::exp(two_i_sigma);
    return fc + add;
}

CrossSectionPoint differential_cross_section(double theta, double k,
                                             double delta0, double a_C,
                                             const PhysicalContext& ctx) {
    if (!(theta > 0.0) || theta > pi)
        throw DomainError(
            "differential_cross_section: requires 0 < theta <= pi");
    if (!(k > 0.0))
        throw DomainError("differential_cross_section: requires k > 0");
    ctx.validate();

    CrossSectionPoint p;
    p.theta = theta;

    const double q = std::abs(ctx.linear_charge());
    const double v = k; // unit reduced mass
    const double pref = q * q / (2.0 * v * v);
    const double s = std::sin(0.5 * theta);
    const double s2 = s * s;
    const double ka = k * a_C;
    const double sd = std::sin(delta0);

    p.coulomb_part = pref / (s2 * s2);
    p.interference_part =
        -pref * 4.0 * ka / s2 * sd *
        std::cos(2.0 / ka * std::log(s) + delta0);
    p.vp_part = pref * 4.0 * ka * ka * sd * sd;
    p.dsigma = p.coulomb_part + p.interference_part + p.vp_part;

    const double eta = background_eta(ctx, k);
    const double sigma0 = coulomb::coulomb_sigma(0, eta);
    const cplx f = total_amplitude(theta, k, delta0, sigma0, ctx);
    p.dsigma_amplitude = std::norm(f);
    p.dual_discrepancy =
        (p.dsigma - p.dsigma_amplitude) /
        std::max(std::abs(p.dsigma_amplitude), 1e-300);
    return p;
}

double cot_delta_relation(double k, double a_C, double kappa) {
    if (!(k > 0.0) || !(a_C > 0.0))
        throw DomainError("cot_delta_relation: requires k > 0, a_C > 0");
    const double x = k * a_C;
    if (2.0 * pi / x > 700.0)
        throw RangeError("cot_delta_relation: exp(2 pi / (k a_C)) overflows "
                         "for this k a_C");
    const double bracket1 = std::expm1(2.0 * pi / x);
    const double re_psi = sf::digamma(std::complex<double>(0.0, -1.0 / x)).real();
    const double bracket2 = re_psi + std::log(x) + 0.5 * kappa * a_C;
    const double cot = -(bracket1 * bracket2) / pi;
    return std::atan2(1.0, cot); // principal branch in (0, pi)
}

} // namespace vpol::scatter
