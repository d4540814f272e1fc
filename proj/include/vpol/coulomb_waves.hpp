#ifndef VPOL_COULOMB_WAVES_HPP
#define VPOL_COULOMB_WAVES_HPP

#include <complex>
#include <vector>

#include "vpol/accuracy.hpp"

namespace vpol::coulomb {

// Declared working range; outside it operations raise RangeError rather
// than return degraded values.
inline constexpr int ell_max = 10;
inline constexpr double eta_max = 20.0;
inline constexpr double rho_max = 200.0;

struct CoulombParams {
    int ell = 0;
    double eta = 0.0;
    double rho = 0.0;
};

// The conventional Sommerfeld parameter is eta = mu q1 q2 / k (negative for
// attraction).  The as-published variant takes a square root of that
// combination and is undefined for attractive pairs; it is kept behind the
// flag for the typo ledger, not silently merged.
enum class EtaConvention { conventional, as_published };

double sommerfeld_eta(double q1q2, double m1, double m2, double k,
                      EtaConvention conv = EtaConvention::conventional);
// Electron on an infinitely heavy nucleus of charge Q (atomic units):
// conventional -Q/k, as-published sqrt(Q/k).
double sommerfeld_eta_infinite_mass(double Q, double k,
                                    EtaConvention conv = EtaConvention::conventional);

// Coulomb phase sigma_ell = arg Gamma(ell + 1 + i eta).
double coulomb_sigma(int ell, double eta);

// Normalisation C_ell(eta); the standard factor carries exp(-pi eta / 2).
// The as-published variant carries exp(-i eta / 2) instead, making the
// "normalisation" complex; exposed for the ledger only.
double cl_normalization(int ell, double eta);
std::complex<double> cl_normalization_as_published(int ell, double eta);

struct FG {
    double F = 0.0, Fp = 0.0, G = 0.0, Gp = 0.0;
    double wronskian() const { return Fp * G - F * Gp; }
};

// Regular and irregular Coulomb functions with derivatives (with respect to
// rho).  Strategy: evaluate H+ = G + iF from the asymptotic expansion at an
// anchor point where it converges below truncation tolerance, integrate the
// pair inward; below the classical turning point only G is propagated (the
// stable direction) and F is restored from the regular power series, or from
// the logarithmic-derivative continued fraction plus the Wronskian where the
// series would cancel badly.
FG coulomb_fg(const CoulombParams& p);

double coulomb_f(const CoulombParams& p);
double coulomb_f_prime(const CoulombParams& p);
double coulomb_g(const CoulombParams& p);
double coulomb_g_prime(const CoulombParams& p);

// Literal product C_ell(eta) rho^{ell+1} e^{-i rho} 1F1(ell+1-i eta;
// 2 ell + 2; 2 i rho): real up to roundoff, exposed for cross-checks
// against the independent series evaluation.
std::complex<double> coulomb_f_hyp1f1(const CoulombParams& p,
                                      const EvalAccuracy& acc = {});

// Logarithmic derivative F'/F by continued fraction (Lentz).
double coulomb_f_logderiv(const CoulombParams& p);

// Dense table of (F, F', G, G') over [rho_min, rho_max_t] for one (ell,
// eta), built from a single inward pass; quintic Hermite interpolation
// between stored nodes (second derivatives supplied by the ODE).
class FgTable {
public:
    FgTable(int ell, double eta, double rho_min, double rho_max_t);
    FG eval(double rho) const;
    double rho_min() const { return rho_lo_; }
    double rho_max() const { return rho_hi_; }

private:
    int ell_;
    double eta_;
    double rho_lo_, rho_hi_;
    struct Node {
        double rho, F, Fp, G, Gp;
    };
    std::vector<Node> nodes_; // ascending in rho
};

} // namespace vpol::coulomb

#endif
