#ifndef VPOL_O21_ALGEBRA_HPP
#define VPOL_O21_ALGEBRA_HPP

#include <complex>
#include <string>
#include <vector>

#include "vpol/units.hpp"

namespace vpol::so21 {

// Minimal dense complex matrix, just enough for the generator algebra.
class CMat {
public:
    CMat() = default;
    explicit CMat(int n) : n_(n), a_(std::size_t(n) * n) {}
    static CMat identity(int n);

    int size() const { return n_; }
    std::complex<double>& operator()(int i, int j) {
        return a_[std::size_t(i) * n_ + j];
    }
    const std::complex<double>& operator()(int i, int j) const {
        return a_[std::size_t(i) * n_ + j];
    }

    CMat operator*(const CMat& o) const;
    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(std::complex<double> s) const;

private:
    int n_ = 0;
    std::vector<std::complex<double>> a_;
};

// exp(A) by scaling-and-squaring with a Taylor kernel.
CMat expm(const CMat& a);

// max |entry| over the leading `rows` x `rows` block
double max_abs_block(const CMat& a, int rows);

// Truncated lowest-weight representation of the radial algebra for angular
// momentum ell: S|n> = n|n>, n = ell+1 ... ell+N, ladder elements
// c_n = sqrt((n-ell)(n+ell+1)) distributed so that U is real symmetric and
// T is Hermitian with imaginary entries; [S,T] = -iU, [T,U] = iS,
// [U,S] = -iT hold exactly away from the truncation edge.
struct AlgebraRep {
    int ell = 0;
    int N = 0;
    CMat S, T, U;
};

AlgebraRep build_generators(int ell, int N);

struct CommutatorReport {
    double st_residual = 0.0;      // [S,T] + iU
    double tu_residual = 0.0;      // [T,U] - iS
    double us_residual = 0.0;      // [U,S] + iT
    double casimir_residual = 0.0; // S^2 - U^2 - T^2 - l(l+1) I
    int interior = 0;              // tested block size (N-1)
};

CommutatorReport verify_commutators(const AlgebraRep& rep);

// Bound energies from the algebra route: the scaled eigenvalue relation
// sqrt(-2E) n = Q gives E_n = -Q^2/(2 n^2).
double hydrogen_energy_from_algebra(double Q, int n);

// Residual of e^{-i beta T} (S +- U) e^{i beta T} = e^{+-beta} (S +- U) on
// the leading `interior_rows` block of the truncated representation.
double hausdorff_residual(const AlgebraRep& rep, double beta,
                          int interior_rows);

// Truncated expansion of r U(r) in powers of z = 2 r / alpha with the
// logarithm isolated:
//   r U(r) = sum_m [coef_const + coef_log * ln(z/2)] z^m,
// where z stands for the operator (2/alpha)(S + U).  All coefficients carry
// the overall 2 alpha Q / (3 pi) and vanish as alpha -> 0.
struct ExpansionTerm {
    int power = 0;
    double coef_const = 0.0;
    double coef_log = 0.0;
    std::string monomial; // "(S+U)^m" with the cut-off factor folded in
};

std::vector<ExpansionTerm> uehling_operator_expansion(int order,
                                                      const PhysicalContext& ctx);

// Leading-order screening: the vacuum polarization acts as the charge map
// Q -> Q (1 - 5 alpha / 9 pi).
double effective_charge_factor(const PhysicalContext& ctx);

} // namespace vpol::so21

#endif
