#ifndef VPOL_FOURIER_HPP
#define VPOL_FOURIER_HPP

#include <functional>

#include "vpol/accuracy.hpp"
#include "vpol/quadrature.hpp"
#include "vpol/units.hpp"

namespace vpol::fourier {

// Provenance tag carried by every spectral value.
enum class Source { closed_form, quadrature_oracle, corrected_closed_form };

const char* source_name(Source s);

struct SpectralSample {
    double k = 0.0;
    double u_k = 0.0;        // Uehling spectral function
    double u_tilde_k = 0.0;  // dimensionless field factor k^2 u / 4pi
    double w_k = 0.0;        // Wichmann-Kroll spectral function
    double W_k_field = 0.0;  // k^2 w_K / 4pi
    Source source = Source::corrected_closed_form;
};

// Radial (spherical j0) transform 4pi int_0^inf j0(kr) V(r) r^2 dr of a
// decaying central potential, by oscillatory-aware quadrature: panels
// between consecutive zeros of sin(kr), alternating tail summed by iterated
// averaging.
double spectral_oracle(const std::function<double(double)>& potential,
                       double k, const quad::OscillatoryOptions& opt = {});

// The published closed form of the Uehling spectral function, evaluated
// exactly as written.  Its log term carries the wrong coefficient (it goes
// negative and diverges as k -> 0 while the defining transform is positive
// and finite); it is kept verbatim for the typo ledger.
double uehling_spectral_closed_form(double k, const PhysicalContext& ctx);

// Re-derived closed form of the same elementary integral, validated against
// spectral_oracle.  u(k) = (2 alpha^3 Q / 3) I(a), a = k alpha / 2, with
//   I(a) = [ -5/6 + 1/(2a^2) + (1 - 1/(2a^2)) L(a) ] / a^2,
//   L(a) = sqrt(1+a^2) asinh(a) / a,
// and a Maclaurin branch below a = 0.6 (I(0) = 2/5).
double uehling_spectral_corrected(double k, const PhysicalContext& ctx);

// Quadrature-oracle value for the Uehling potential itself.
double uehling_spectral_oracle(double k, const PhysicalContext& ctx,
                               const quad::OscillatoryOptions& opt = {});

// Field factor U~(k) = k^2 u(k) / 4pi built on the oracle-validated u(k).
double uehling_field_factor(double k, const PhysicalContext& ctx);

// Charge screening: the k-independent part of U~(k) is -5 alpha Q / 9 pi,
// i.e. an effective charge Q (1 - 5 alpha / 9 pi).
double uehling_screening_constant(const PhysicalContext& ctx);
double screening_factor(const PhysicalContext& ctx);

// Wichmann-Kroll spectral function as published,
//   w_K(k) = -(2 pi Q^3 alpha^6 / 225) e^{-k alpha},
// and its field factor W_K(k) = k^2 w_K(k) / 4pi.
//
// Oracle adjudication: this closed form is the exact j0 transform of the
// density -2 Q^3 alpha^7 / (225 pi (r^2+alpha^2)^2), i.e. the regularized
// potential WITHOUT its 1/r factor (the published inner integral keeps an
// extra r).  The transform of the 1/r-regularized potential itself has the
// small-k limit -4 Q^3 alpha^5 / 225 and no elementary closed form; it is
// available through wk_spectral_oracle.  The typo ledger carries the
// sampled comparison.
double wk_spectral_closed(double k, const PhysicalContext& ctx);
double wk_field_factor(double k, const PhysicalContext& ctx);

// The radial density whose transform the published closed form is (exactly).
double wk_transform_density(double r, const PhysicalContext& ctx);

// Quadrature transform of the regularized Wichmann-Kroll potential itself.
double wk_spectral_oracle(double k, const PhysicalContext& ctx,
                          const quad::OscillatoryOptions& opt = {});

// Assemble one tagged sample; u_k provenance follows `src`, w_k is always
// closed-form (oracle-verified separately).
SpectralSample sample(double k, const PhysicalContext& ctx, Source src);

} // namespace vpol::fourier

#endif
