#include "vpol/fourier.hpp"

#include <cmath>

#include "vpol/errors.hpp"
#include "vpol/potentials.hpp"

namespace vpol::fourier {

namespace {

constexpr double pi = 3.141592653589793238462643383279503;

// I(a) = int_1^inf (1 + 1/(2 t^2)) sqrt(t^2-1) / (t^2 (t^2 + a^2)) dt.
// Closed form via moments M_p = int_1^inf sqrt(t^2-1) t^{-2p} dt for the
// small-a series; logarithmic form beyond.
double spectral_integral(double a) {
    if (a < 0.6) {
        // I(a) = sum_m (-1)^m (M_{m+2} + M_{m+3}/2) a^{2m};
        // M_2 = 1/3, M_{p+1} = M_p (p-1)/(p+1/2).
        double mp = 1.0 / 3.0; // M_{m+2} at m = 0
        double mnext = mp * 1.0 / 2.5;
        double a2m = 1.0, sum = 0.0, sign = 1.0;
        for (int m = 0; m < 60; ++m) {
            const double c = mp + 0.5 * mnext;
            const double term = sign * c * a2m;
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum))
                break;
            const int p = m + 3;
            mp = mnext;
            mnext = mp * (p - 1.0) / (p + 0.5);
            a2m *= a * a;
            sign = -sign;
        }
        return sum;
    }
    const double c = std::sqrt(1.0 + a * a);
    const double L = c * std::asinh(a) / a;
    const double ia2 = 1.0 / (a * a);
    return (-5.0 / 6.0 + 0.5 * ia2 + (1.0 - 0.5 * ia2) * L) * ia2;
}

} // namespace

const char* source_name(Source s) {
    switch (s) {
    case Source::closed_form:
        return "closed_form";
    case Source::quadrature_oracle:
        return "quadrature_oracle";
    case Source::corrected_closed_form:
        return "corrected_closed_form";
    }
    return "unknown";
}

double spectral_oracle(const std::function<double(double)>& potential,
                       double k, const quad::OscillatoryOptions& opt) {
    if (!(k > 0.0))
        throw DomainError("spectral_oracle: requires k > 0");
    // 4pi int j0(kr) V r^2 dr = (4pi/k) int sin(kr) V(r) r dr
    const double s =
        quad::sin_transform([&](double r) { return potential(r) * r; }, k, opt);
    return 4.0 * pi / k * s;
}

double uehling_spectral_closed_form(double k, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(k > 0.0))
        throw DomainError("uehling_spectral_closed_form: requires k > 0");
    const double q = ctx.linear_charge();
    if (q == 0.0)
        return 0.0;
    const double a = ctx.alpha, ak = a * k;
    const double root = std::sqrt(ak * ak + 4.0);
    const double lg = std::log((root + ak) / (root - ak));
    return 8.0 * a * q / (3.0 * k * k) *
           (-5.0 / 6.0 + 2.0 / (ak * ak) -
            root / ak * (1.0 - 2.0 / (ak * ak)) * lg);
}

double uehling_spectral_corrected(double k, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(k > 0.0))
        throw DomainError("uehling_spectral_corrected: requires k > 0");
    const double q = ctx.linear_charge();
    if (q == 0.0)
        return 0.0;
    const double a = 0.5 * k * ctx.alpha;
    const double a3 = ctx.alpha * ctx.alpha * ctx.alpha;
    return 2.0 * a3 * q / 3.0 * spectral_integral(a);
}

double uehling_spectral_oracle(double k, const PhysicalContext& ctx,
                               const quad::OscillatoryOptions& opt) {
    ctx.validate();
    return spectral_oracle(
        [&](double r) { return pot::uehling_closed(r, ctx); }, k, opt);
}

double uehling_field_factor(double k, const PhysicalContext& ctx) {
    return k * k * uehling_spectral_corrected(k, ctx) / (4.0 * pi);
}

double uehling_screening_constant(const PhysicalContext& ctx) {
    ctx.validate();
    return -5.0 * ctx.alpha * ctx.linear_charge() / (9.0 * pi);
}

double screening_factor(const PhysicalContext& ctx) {
    ctx.validate();
    return 1.0 - 5.0 * ctx.alpha / (9.0 * pi);
}

double wk_spectral_closed(double k, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(k > 0.0))
        throw DomainError("wk_spectral_closed: requires k > 0");
    const double a = ctx.alpha;
    const double a6 = a * a * a * a * a * a;
    return -2.0 * pi * ctx.cubic_charge() * a6 / 225.0 * std::exp(-k * a);
}

double wk_field_factor(double k, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(k > 0.0))
        throw DomainError("wk_field_factor: requires k > 0");
    const double a = ctx.alpha;
    const double a6 = a * a * a * a * a * a;
    return -ctx.cubic_charge() * a6 / 450.0 * k * k * std::exp(-k * a);
}

double wk_transform_density(double r, const PhysicalContext& ctx) {
    ctx.validate();
    if (!(r > 0.0))
        throw DomainError("wk_transform_density: requires r > 0");
    const double a = ctx.alpha;
    const double a7 = a * a * a * a * a * a * a;
    const double d = r * r + a * a;
    return -2.0 * ctx.cubic_charge() * a7 / (225.0 * pi * d * d);
}

double wk_spectral_oracle(double k, const PhysicalContext& ctx,
                          const quad::OscillatoryOptions& opt) {
    ctx.validate();
    return spectral_oracle(
        [&](double r) { return pot::wichmann_kroll_regularized(r, ctx); }, k,
        opt);
}

SpectralSample sample(double k, const PhysicalContext& ctx, Source src) {
    SpectralSample s;
    s.k = k;
    s.source = src;
    switch (src) {
    case Source::closed_form:
        s.u_k = uehling_spectral_closed_form(k, ctx);
        break;
    case Source::quadrature_oracle:
        s.u_k = uehling_spectral_oracle(k, ctx);
        break;
    case Source::corrected_closed_form:
        s.u_k = uehling_spectral_corrected(k, ctx);
        break;
    }
    s.u_tilde_k = k * k * s.u_k / (4.0 * pi);
    s.w_k = wk_spectral_closed(k, ctx);
    s.W_k_field = k * k * s.w_k / (4.0 * pi);
    return s;
}

} // namespace vpol::fourier
