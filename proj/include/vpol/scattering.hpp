#ifndef VPOL_SCATTERING_HPP
#define VPOL_SCATTERING_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "vpol/accuracy.hpp"
#include "vpol/units.hpp"

namespace vpol::scatter {

using RadialPotential = std::function<double(double)>;

// Sommerfeld parameter of the Coulomb background for the supported
// configuration (infinitely heavy nucleus, unit reduced mass):
// -Q/k in nuclear mode, q1 q2 / k in pair mode.
double background_eta(const PhysicalContext& ctx, double k);

struct PhasePolicy {
    double r_start_over_k = 1e-6; // integration starts at r = this / k
    double rel_tol = 1e-10;
    double abs_tol = 1e-24; // delta can be arbitrarily small
    double tail_tol = 1e-12; // convergence: tail bound below tail_tol*|delta|
    double r_max = 50.0;     // give up beyond this radius
};

struct PhaseTrajectory {
    int ell = 0;
    double k = 0.0;
    std::vector<std::pair<double, double>> samples; // (r, delta(r))
    double delta_inf = 0.0;
    bool converged = false;
    double tail_estimate = 0.0;
};

// Variable-phase equation for a short-range addition V on the Coulomb
// background,
//   d delta/dr = -(2 V(r)/k) [cos(delta) F_l(kr) + sin(delta) G_l(kr)]^2,
// integrated outward from an analytic small-r start (delta(0) = 0; G_l is
// singular there, so the first interval uses the first-order F-only Born
// increment).  Integration stops when the remaining-tail bound drops below
// tail_tol relative to the accumulated phase.
PhaseTrajectory integrate_phase(const RadialPotential& potential, int ell,
                                double k, const PhysicalContext& ctx,
                                const PhasePolicy& policy = {});

// First Born approximation -(2/k) int_0^inf V F_l^2 dr, used as the
// weak-coupling oracle for the phase equation.
double born_phase(const RadialPotential& potential, int ell, double k,
                  const PhysicalContext& ctx);

// Closed-form Coulomb amplitude (atomic units).
std::complex<double> coulomb_amplitude(double theta, double k, double eta);

// f(theta) = f_C(theta) + (1/2ik)[e^{2 i delta0} - 1] e^{2 i sigma0}.
std::complex<double> total_amplitude(double theta, double k, double delta0,
                                     double sigma0,
                                     const PhysicalContext& ctx);

struct CrossSectionPoint {
    double theta = 0.0;
    double dsigma = 0.0;          // printed-form total (Q^2/2v^2 prefactor)
    double coulomb_part = 0.0;    // printed-form component breakdown
    double interference_part = 0.0;
    double vp_part = 0.0;
    double dsigma_amplitude = 0.0; // |f(theta)|^2 assembled independently
    double dual_discrepancy = 0.0; // relative difference of the two routes
};

// Differential cross-section with both assemblies: the printed closed form
// (verbatim prefactor Q^2 / 2 v^2 with v = k) and |f|^2 from
// total_amplitude; their relative discrepancy is reported, not resolved.
CrossSectionPoint differential_cross_section(double theta, double k,
                                             double delta0, double a_C,
                                             const PhysicalContext& ctx);

// delta0 from cot(delta0) = -(1/pi)[e^{2 pi/(k a_C)} - 1]
//   [Re psi(-i/(k a_C)) + ln(k a_C) + kappa a_C / 2],
// principal branch delta0 in (0, pi); kappa is caller-supplied.
double cot_delta_relation(double k, double a_C, double kappa);

} // namespace vpol::scatter

#endif
