#ifndef VPOL_FIELD_EQUATION_HPP
#define VPOL_FIELD_EQUATION_HPP

#include <string>

#include "vpol/units.hpp"

namespace vpol::field {

// Cubic y^3 + p y + q / r^2 = 0 for the radial field slope y = d phi / dr;
// p > 0 guarantees a single real root.
struct CubicCoefficients {
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
};

// Coefficients in atomic units (Gaussian convention folded in):
// p = 45 pi / (2 alpha^7), q = p Q.
CubicCoefficients appendix_coefficients(double r, const PhysicalContext& ctx);

// The single real root, evaluated without subtractive cancellation:
// with c = q/r^2, D = sqrt(c^2/4 + (p/3)^3),
//   y = -c / (a^2 + a b + b^2),  a = cbrt((p/3)^3/(D + |c|/2)),
//                                b = cbrt(D + |c|/2),
// which is exact algebra for a^3 - b^3 = -|c| (odd in q), finished with one
// Newton step on the defining cubic.
double cardano_real_root(const CubicCoefficients& c);

// |y^3 + p y + q/r^2| relative to max(|p y|, |q/r^2|).
double cardano_residual(const CubicCoefficients& c, double y);

// The vacuum-polarization part of the slope, y + (q/p)/r^2, computed through
// the stable identity y (y^2 + p) = -q/r^2:
//   y + (q/p)/r^2 = (q/r^2) y^2 / (p (p + y^2)),
// free of the cancellation that the naive difference suffers at large r.
double cardano_vp_slope(const CubicCoefficients& c);

// Perturbative correction psi(r) = -2 Q^3 alpha^7 / (225 pi r^5), in atomic
// units; identical to the bare Wichmann-Kroll potential.
double field_correction_psi(double r, const PhysicalContext& ctx);
double field_correction_psi_prime(double r, const PhysicalContext& ctx);

enum class Regime { small_r, large_r };

struct AsymptoteReport {
    std::string description;
    double fitted = 0.0;   // measured slope / limit
    double expected = 0.0; // -2/3 exponent or -q/p limit
};

// Small r: y ~ -(q/r^2)^{1/3}, i.e. log-log slope -2/3 (so the potential
// behaves like -3 q^{1/3} r^{1/3} + c).  Large r: y r^2 -> -q/p.  Both fitted
// numerically from cardano_real_root; the as-published large-r solution
// (phi ~ 2 sqrt(p/3) r) disagrees with the cancellation of the cube roots
// and is recorded in the typo ledger.
AsymptoteReport appendix_asymptotes(Regime regime, double p, double q);

} // namespace vpol::field

#endif
