#ifndef VPOL_POTENTIALS_HPP
#define VPOL_POTENTIALS_HPP

#include "vpol/accuracy.hpp"
#include "vpol/units.hpp"

namespace vpol::pot {

// One radial sample of the two-charge interaction with its component
// breakdown; total = coulomb + uehling + wichmann_kroll by construction.
struct PotentialSample {
    double r = 0.0;
    double coulomb = 0.0;
    double uehling = 0.0;
    double wichmann_kroll = 0.0;
    double total = 0.0;
};

// Uehling potential by direct quadrature of the defining dispersion
// integral.  This is the oracle form the closed expressions are checked
// against.
double uehling_integral(double r, const PhysicalContext& ctx,
                        const EvalAccuracy& acc = {});

// Closed form in terms of K_0, Ki_1, Ki_2.  Beyond z = 2r/alpha ~ 45 the
// Bessel combination cancels catastrophically and the evaluation switches to
// a Laplace (Watson) expansion of the defining integral; the two branches
// agree in an overlap window.
double uehling_closed(double r, const PhysicalContext& ctx);

// The same expression regrouped around q(z) = z^2 + 11, taking the scaled
// argument z = 2r/alpha directly.  Identical to uehling_closed up to
// floating-point regrouping noise.
double uehling_tridiagonal(double z, const PhysicalContext& ctx);

// Leading short- and long-range behaviour (vacuum-polarization part only,
// no Coulomb term).
double uehling_asymptote_small_r(double r, const PhysicalContext& ctx);
double uehling_asymptote_large_r(double r, const PhysicalContext& ctx);

// Wichmann-Kroll correction: the bare r^-5 form and the regularized form
// used in applications.
double wichmann_kroll_raw(double r, const PhysicalContext& ctx);
double wichmann_kroll_regularized(double r, const PhysicalContext& ctx);

// Total two-charge interaction: Coulomb + Uehling (closed form) +
// regularized Wichmann-Kroll, with pair-mode charge factors q1 q2 and
// (q1 q2)^3 when the context is in pair mode.
PotentialSample total_potential(double r12, const PhysicalContext& ctx);

namespace detail {
// Closed-form bracket evaluated through the Bessel route (any z > 0; loses
// accuracy like z^3 beyond the switch point) and through the Laplace
// expansion (accurate for z >~ 40).  Both return the potential value for
// unit linear charge.
double uehling_unit_bessel_route(double z);
double uehling_unit_watson(double z);
inline constexpr double watson_switch_z = 45.0;
} // namespace detail

} // namespace vpol::pot

#endif
