#include "vpol/field_equation.hpp"

#include <cmath>
#include <vector>

#include "vpol/errors.hpp"

namespace vpol::field {

namespace {
constexpr double pi = 3.141592653589793238462643383279503;

void check(const CubicCoefficients& c) {
    if (!(c.p > 0.0))
        throw DomainError("cardano: requires p > 0 (single real root)");
    if (!(c.r > 0.0))
        throw DomainError("cardano: requires r > 0");
}
} // namespace

CubicCoefficients appendix_coefficients(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("appendix_coefficients: requires r > 0");
    const double a = ctx.alpha;
    const double a7 = a * a * a * a * a * a * a;
    CubicCoefficients c;
    c.p = 45.0 * pi / (2.0 * a7);
    c.q = c.p * ctx.linear_charge();
    c.r = r;
    return c;
}

double cardano_real_root(const CubicCoefficients& coef) {
    check(coef);
    const double c = coef.q / (coef.r * coef.r);
    if (c == 0.0)
        return 0.0;
    const double ac = std::abs(c);
    const double p3 = coef.p / 3.0;
    const double disc = std::sqrt(0.25 * ac * ac + p3 * p3 * p3);
    const double big = disc + 0.5 * ac;
    const double a = std::cbrt(p3 * p3 * p3 / big);
    const double b = std::cbrt(big);
    double y = -c / (a * a + a * b + b * b);
    // one Newton polish on the defining cubic
    const double f = (y * y + coef.p) * y + c;
    y -= f / (3.0 * y * y + coef.p);
    return y;
}

double cardano_residual(const CubicCoefficients& coef, double y) {
    check(coef);
    const double c = coef.q / (coef.r * coef.r);
    const double res = (y * y + coef.p) * y + c;
    const double scale = std::max(std::abs(coef.p * y), std::abs(c));
    return scale > 0.0 ? std::abs(res) / scale : std::abs(res);
}

double cardano_vp_slope(const CubicCoefficients& coef) {
    check(coef);
    const double c = coef.q / (coef.r * coef.r);
    const double y = cardano_real_root(coef);
    return c * y * y / (coef.p * (coef.p + y * y));
}

double field_correction_psi(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("field_correction_psi: requires r > 0");
    // kappa = 2 alpha^7 / (45 pi); psi = -kappa Q^3 / (5 r^5)
    const double a = ctx.alpha;
    const double kappa = 2.0 * std::pow(a, 7) / (45.0 * pi);
    return -kappa * ctx.cubic_charge() / (5.0 * std::pow(r, 5));
}

double field_correction_psi_prime(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("field_correction_psi_prime: requires r > 0");
    const double a = ctx.alpha;
    const double kappa = 2.0 * std::pow(a, 7) / (45.0 * pi);
    return kappa * ctx.cubic_charge() / std::pow(r, 6);
}

AsymptoteReport appendix_asymptotes(Regime regime, double p, double q) {
    if (!(p > 0.0))
        throw DomainError("appendix_asymptotes: requires p > 0");
    AsymptoteReport rep;
    if (regime == Regime::small_r) {
        // log-log regression of |y| over r in [1e-8, 1e-6]
        std::vector<double> lx, ly;
        for (double r = 1e-8; r <= 1.0000001e-6; r *= std::pow(10.0, 0.25)) {
            const double y = cardano_real_root({p, q, r});
            lx.push_back(std::log(r));
            ly.push_back(std::log(std::abs(y)));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = double(lx.size());
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        rep.fitted = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        rep.expected = -2.0 / 3.0;
        rep.description =
            "small-r slope of ln|y| vs ln r; y ~ -q^{1/3} r^{-2/3}, so the "
            "potential integrates to -3 q^{1/3} r^{1/3} + c";
    } else {
        const double r = 1e4;
        rep.fitted = cardano_real_root({p, q, r}) * r * r;
        rep.expected = -q / p;
        rep.description =
            "large-r limit of y r^2; the cube roots cancel to y ~ -q/(p r^2), "
            "unlike the as-published linear form phi ~ 2 sqrt(p/3) r";
    }
    return rep;
}

} // namespace vpol::field
