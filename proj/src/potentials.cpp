#include "vpol/potentials.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "vpol/quadrature.hpp"
#include "vpol/special_functions.hpp"

namespace vpol::pot {

namespace {

constexpr double pi = 3.141592653589793238462643383279503;

// Taylor coefficients of h(s) = sqrt(1 + s/2) (1 + (1+s)^-2 / 2) (1+s)^-2,
// the regular factor of the dispersion integrand after substituting
// xi = 1 + s and peeling off sqrt(2s).  Used by the Laplace expansion
//   U(z) = (4 sqrt(2) Q / 3 pi) e^-z z^-5/2 sum_m h_m Gamma(m+3/2) z^-m.
constexpr int watson_terms = 60;

const std::array<double, watson_terms>& watson_h() {
    static const auto h = [] {
        std::array<double, watson_terms> sq{}, p{}, out{};
        // sqrt(1+s/2): binomial series
        sq[0] = 1.0;
        for (int m = 1; m < watson_terms; ++m)
            sq[m] = sq[m - 1] * (1.5 - m) / (2.0 * m);
        // (1+s)^-2 + (1+s)^-4 / 2
        double sign = 1.0;
        for (int m = 0; m < watson_terms; ++m) {
            const double c2 = m + 1.0;
            const double c4 =
                (m + 1.0) * (m + 2.0) * (m + 3.0) / 6.0; // C(m+3,3)
            p[m] = sign * (c2 + 0.5 * c4);
            sign = -sign;
        }
        for (int m = 0; m < watson_terms; ++m) {
            double s = 0.0;
            for (int j = 0; j <= m; ++j)
                s += sq[j] * p[m - j];
            out[m] = s;
        }
        return out;
    }();
    return h;
}

const std::array<double, watson_terms>& gamma_half() {
    static const auto g = [] {
        std::array<double, watson_terms> out{};
        out[0] = 0.88622692545275801365; // Gamma(3/2)
        for (int m = 1; m < watson_terms; ++m)
            out[m] = out[m - 1] * (m + 0.5);
        return out;
    }();
    return g;
}

} // namespace

namespace detail {

double uehling_unit_watson(double z) {
    const auto& h = watson_h();
    const auto& g = gamma_half();
    double sum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    double zp = 1.0;
    for (int m = 0; m < watson_terms; ++m) {
        const double term = h[m] * g[m] / zp;
        if (std::abs(term) >= prev)
            break;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
        zp *= z;
    }
    const double log_pref = -z - 2.5 * std::log(z);
    if (log_pref < -742.0)
        return 0.0;
    return 4.0 * std::sqrt(2.0) / (3.0 * pi) * std::exp(log_pref) * sum;
}

double uehling_unit_bessel_route(double z) {
    const double k0 = sf::bessel_k0(z);
    const double ki1 = sf::bickley_cosh_integral(1, z, 2e-15);
    const double ki2 = sf::bickley_cosh_integral(2, z, 2e-15);
    const double bracket = (1.0 + z * z / 12.0) * k0 - (z / 12.0) * ki1 -
                           (5.0 / 6.0 + z * z / 12.0) * ki2;
    return 4.0 / (3.0 * pi * z) * bracket;
}

} // namespace detail

double uehling_integral(double r, const PhysicalContext& ctx,
                        const EvalAccuracy& acc) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("uehling_integral: requires r > 0");
    const double q = ctx.linear_charge();
    if (q == 0.0)
        return 0.0;
    const double z = 2.0 * r / ctx.alpha;
    if (z > 742.0)
        return 0.0;

    // xi = 1 + x; integrand has a sqrt singularity at x = 0 and decays like
    // exp(-z x): both ends are handled by the exp-sinh transform.
    const auto res = quad::exp_sinh_full(
        [&](double xi, double x) {
            const double xi2 = xi * xi;
            return std::exp(-z * xi) * (1.0 + 0.5 / xi2) *
                   std::sqrt(x * (x + 2.0)) / xi2;
        },
        1.0, acc);
    if (!res.converged)
        throw ConvergenceError(
            "uehling_integral: dispersion quadrature did not converge",
            res.error_estimate / std::max(std::abs(res.value), 1e-300));
    return 2.0 * ctx.alpha * q / (3.0 * pi * r) * res.value;
}

double uehling_closed(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("uehling_closed: requires r > 0");
    const double q = ctx.linear_charge();
    if (q == 0.0)
        return 0.0;
    const double z = 2.0 * r / ctx.alpha;
    if (z > detail::watson_switch_z)
        return q * detail::uehling_unit_watson(z);
    return q * detail::uehling_unit_bessel_route(z);
}

double uehling_tridiagonal(double z, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(z > 0.0))
        throw DomainError("uehling_tridiagonal: requires z > 0");
    const double q = ctx.linear_charge();
    if (q == 0.0)
        return 0.0;
    if (z > detail::watson_switch_z)
        return q * detail::uehling_unit_watson(z);
    const double k0 = sf::bessel_k0(z);
    const double ki1 = sf::bickley_cosh_integral(1, z, 2e-15);
    const double ki2 = sf::bickley_cosh_integral(2, z, 2e-15);
    const double qz = z * z + 11.0;
    return q / (9.0 * pi * z) *
           ((qz + 1.0) * k0 - z * ki1 - (qz - 1.0) * ki2);
}

double uehling_asymptote_small_r(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("uehling_asymptote_small_r: requires r > 0");
    const double q = ctx.linear_charge();
    return q / r * ctx.alpha / (3.0 * pi) *
           (-5.0 / 3.0 - 2.0 * sf::euler_gamma + 2.0 * std::log(ctx.alpha) -
            2.0 * std::log(r));
}

double uehling_asymptote_large_r(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("uehling_asymptote_large_r: requires r > 0");
    const double q = ctx.linear_charge();
    const double a = ctx.alpha;
    const double log_val = 2.5 * std::log(a) - 1.5 * std::log(r) - 2.0 * r / a;
    if (log_val < -742.0)
        return 0.0;
    return q / r * std::exp(log_val) / (4.0 * std::sqrt(pi));
}

double wichmann_kroll_raw(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("wichmann_kroll_raw: requires r > 0");
    const double q3 = ctx.cubic_charge();
    const double a = ctx.alpha;
    const double a7 = a * a * a * a * a * a * a;
    return -2.0 * q3 * a7 / (225.0 * pi * std::pow(r, 5));
}

double wichmann_kroll_regularized(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("wichmann_kroll_regularized: requires r > 0");
    const double q3 = ctx.cubic_charge();
    const double a = ctx.alpha;
    const double a7 = a * a * a * a * a * a * a;
    const double d = r * r + a * a;
    return -2.0 * q3 * a7 / (225.0 * pi * r * d * d);
}

PotentialSample total_potential(double r12, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r12 > 0.0))
        throw DomainError("total_potential: requires r12 > 0");
    PotentialSample s;
    s.r = r12;
    s.coulomb = ctx.linear_charge() / r12;
    s.uehling = uehling_closed(r12, ctx);
    s.wichmann_kroll = wichmann_kroll_regularized(r12, ctx);
    s.total = s.coulomb + s.uehling + s.wichmann_kroll;
    return s;
}

} // namespace vpol::pot
