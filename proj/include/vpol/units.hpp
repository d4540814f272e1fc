#ifndef VPOL_UNITS_HPP
#define VPOL_UNITS_HPP

#include <cmath>

#include "vpol/errors.hpp"

namespace vpol {

enum class UnitSystem { atomic, relativistic, si_factors };

// Whether charge factors come from a single nuclear charge Q (potentials
// scale as Q and Q^3) or from a particle pair (q1*q2 and (q1*q2)^3).
enum class ChargeMode { nuclear, pair };

// Physical inputs threaded through every evaluation.  All internal math is
// done in atomic units (hbar = m_e = e = 1, lengths in Bohr radii, energies
// in Hartree); the conversion helpers translate at the boundary.
struct PhysicalContext {
    double alpha = 1.0 / 137.035999; // fine-structure constant
    double Q = 1.0;                  // nuclear charge number
    double q1 = 0.0, q2 = 0.0;       // pair-mode charge numbers
    ChargeMode mode = ChargeMode::nuclear;
    UnitSystem units = UnitSystem::atomic;

    void validate() const {
        if (!(alpha > 0.0))
            throw DomainError("PhysicalContext: alpha must be > 0");
    }

    // Charge factor multiplying the Coulomb and Uehling terms.
    double linear_charge() const {
        return mode == ChargeMode::nuclear ? Q : q1 * q2;
    }
    // Charge factor multiplying the Wichmann-Kroll term.
    double cubic_charge() const {
        const double c = linear_charge();
        return c * c * c;
    }

    static PhysicalContext nuclear(double Q_, double alpha_ = 1.0 / 137.035999) {
        PhysicalContext ctx;
        ctx.Q = Q_;
        ctx.alpha = alpha_;
        ctx.mode = ChargeMode::nuclear;
        return ctx;
    }
    static PhysicalContext pair(double q1_, double q2_,
                                double alpha_ = 1.0 / 137.035999) {
        PhysicalContext ctx;
        ctx.q1 = q1_;
        ctx.q2 = q2_;
        ctx.alpha = alpha_;
        ctx.mode = ChargeMode::pair;
        return ctx;
    }

    // Atomic <-> relativistic (hbar = c = 1, scales set by m_e) unit maps.
    // Lengths: one Bohr radius equals 1/alpha electron Compton wavelengths.
    double length_to_relativistic(double r_au) const { return r_au / alpha; }
    double length_to_atomic(double r_rel) const { return r_rel * alpha; }
    // Energies: one Hartree equals alpha^2 electron rest energies.
    double energy_to_relativistic(double e_au) const { return e_au * alpha * alpha; }
    double energy_to_atomic(double e_rel) const { return e_rel / (alpha * alpha); }
};

// SI factors exposed for the si_factors unit tag (CODATA 2018).
namespace si {
inline constexpr double bohr_radius_m = 5.29177210903e-11;
inline constexpr double hartree_J = 4.3597447222071e-18;
inline constexpr double hartree_eV = 27.211386245988;
} // namespace si

} // namespace vpol

#endif
