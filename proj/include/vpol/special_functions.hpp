#ifndef VPOL_SPECIAL_FUNCTIONS_HPP
#define VPOL_SPECIAL_FUNCTIONS_HPP

#include <complex>

#include "vpol/accuracy.hpp"

namespace vpol::sf {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

// Modified Bessel function K_0(z), z > 0.  Three branches: the psi-function
// power series for z <= 2, the Bickley integral representation in the middle
// range, and the standard asymptotic expansion for large z.  Adjacent
// branches agree in an overlap window (asserted in tests).
double bessel_k0(double z, const EvalAccuracy& acc = {});

// Bickley function Ki_n(z) = int_z^inf Ki_{n-1}(t) dt with Ki_0 = K_0,
// n in {1, 2}, z >= 0.  Evaluated through the single-integral form
//   Ki_n(z) = int_0^inf exp(-z cosh t) sech^n t dt,
// not by nested integration of the defining recursion (which is kept as a
// test oracle).
double bickley_ki(int n, double z, const EvalAccuracy& acc = {});

// The shared Bickley kernel, exposed for modules that need tighter control
// of the tolerance than the default accuracy bundle.
double bickley_cosh_integral(int n, double z, double rel_tol = 5e-15);

// Digamma function for real x (poles at 0, -1, -2, ... raise DomainError)
// and for complex z away from the poles.
double digamma(double x);
std::complex<double> digamma(std::complex<double> z);

// Kummer confluent hypergeometric 1F1(a; b; z) by Kahan-compensated power
// series; throws ConvergenceError when |z| exceeds the series budget.
std::complex<double> hyp1f1(std::complex<double> a, std::complex<double> b,
                            std::complex<double> z,
                            const EvalAccuracy& acc = {});

// Principal-branch log Gamma for Re z > 0 (Lanczos; arguments with
// Re z < 0.5 are lifted by one recurrence step).
std::complex<double> log_gamma(std::complex<double> z);

} // namespace vpol::sf

#endif
