#ifndef VPOL_BOUND_STATES_HPP
#define VPOL_BOUND_STATES_HPP

#include <vector>

#include "vpol/accuracy.hpp"
#include "vpol/units.hpp"

namespace vpol::bound {

// Analytic hydrogenic state: E_n = -Q^2/(2n^2), radial function
// R_nl(r) = (2Q/n)^{3/2} sqrt((n-l-1)!/(2n (n+l)!)) e^{-x/2} x^l
//           L^{(2l+1)}_{n-l-1}(x),   x = 2Q r / n.
struct HydrogenicState {
    int n = 1;
    int ell = 0;
    double Q = 1.0;
    double energy = -0.5;

    double radial(double r) const;
    double radial_deriv(double r) const;
};

HydrogenicState hydrogenic_state(int n, int ell, double Q);

enum class Shift { uehling, wichmann_kroll, both };

// First-order vacuum-polarization shift <nl| V |nl> for the electron-nucleus
// system (charge factors -Q and (-Q)^3): the Uehling part deepens the level,
// the Wichmann-Kroll part raises it slightly.  The log-singular Uehling
// integrand is split at r = alpha.
double perturbative_shift(const HydrogenicState& state, Shift which,
                          const PhysicalContext& ctx,
                          const EvalAccuracy& acc = {});

enum class PotentialMode { coulomb, total };

struct NumerovGrid {
    double r_min = 0.0; // 0 = default 1e-5/Q
    double r_max = 0.0; // 0 = default 50 n^2 / Q
    int count = 20000;
};

struct EigenResult {
    double energy = 0.0;
    int nodes = 0;
    bool converged = false;
    std::vector<double> r; // grid
    std::vector<double> u; // normalized reduced radial function u = r R
};

// Lowest eigenvalue with n-l-1 radial nodes by Numerov integration on a
// log-spaced grid (x = ln r, v = u e^{-x/2}) and bisection shooting on the
// energy, matching at the outer classical turning point.
EigenResult numerov_eigensolve(int n, int ell, double Q, PotentialMode mode,
                               const NumerovGrid& grid,
                               const PhysicalContext& ctx);

// Contact-cusp value (dR/dr)/R at r -> 0 for s states; equals -Q for the
// electron-nucleus pair, any n.  States with ell > 0 have no contact cusp.
double cusp_operator_value(const HydrogenicState& state);

// Reference electron-electron coalescence value.
inline constexpr double electron_electron_cusp = 0.5;

// Shortest distance resolved by the nonrelativistic density, Lambda_e / Q.
double minimal_distance(double Q, const PhysicalContext& ctx);

struct CuspReport {
    double nu_coulomb = 0.0;  // -Q
    double nu_modified = 0.0; // regularized vacuum-polarization cusp
    double C_param = 1.0;
    double f_param = 0.5;
    double uehling_rel_correction = 0.0; // relative to the Coulomb cusp
    double wk_abs_correction = 0.0;      // atomic units
};

// Regularized cusp
//   nu = -Q { 1 - (alpha/3pi) [5/3 + 2 gamma + 2 ln C] }
//        + 2 Q^3 alpha^3 / (225 pi (1 + C^2)),
// with the cutoff C supplied by the caller (default C = 1; the default
// f folds into 1/(1+C^2) and enters only the r-dependent diagnostic form).
CuspReport modified_cusp(double Q, double C_param, double f_param,
                         const PhysicalContext& ctx);

// r-dependent (unregularized) cusp diagnostic
//   nu(r) = -Q { 1 - (alpha/3pi) [5/3 + 2 gamma - 2 ln alpha + 2 ln r] }
//           + f 2 Q^3 alpha^3 / (225 pi).
double cusp_r_dependent(double r, double Q, double f_param,
                        const PhysicalContext& ctx);

} // namespace vpol::bound

#endif
