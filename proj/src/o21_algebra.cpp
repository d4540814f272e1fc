#include "vpol/o21_algebra.hpp"

#include <cmath>

#include "vpol/errors.hpp"
#include "vpol/fourier.hpp"
#include "vpol/special_functions.hpp"

namespace vpol::so21 {

namespace {
constexpr double pi = 3.141592653589793238462643383279503;
using cplx = std::complex<double>;
} // namespace

CMat CMat::identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMat CMat::operator*(const CMat& o) const {
    CMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == 0.0)
                continue;
            for (int j = 0; j < n_; ++j)
                out(i, j) += aik * o(k, j);
        }
    return out;
}

CMat CMat::operator+(const CMat& o) const {
    CMat out = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(i, j) += o(i, j);
    return out;
}

CMat CMat::operator-(const CMat& o) const {
    CMat out = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(i, j) -= o(i, j);
    return out;
}

CMat CMat::operator*(cplx s) const {
    CMat out = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(i, j) *= s;
    return out;
}

CMat expm(const CMat& a) {
    const int n = a.size();
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += std::abs(a(i, j));
        norm = std::max(norm, row);
    }
    int s = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++s;
    }
    const cplx scale(std::ldexp(1.0, -s), 0.0);
    const CMat t = a * scale;

    CMat sum = CMat::identity(n);
    CMat term = CMat::identity(n);
    for (int k = 1; k < 40; ++k) {
        term = term * t * cplx(1.0 / k, 0.0);
        sum = sum + term;
        double tn = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                tn = std::max(tn, std::abs(term(i, j)));
        if (tn < 1e-18)
            break;
    }
    for (int k = 0; k < s; ++k)
        sum = sum * sum;
    return sum;
}

double max_abs_block(const CMat& a, int rows) {
    double m = 0.0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
            m = std::max(m, std::abs(a(i, j)));
    return m;
}

AlgebraRep build_generators(int ell, int N) {
    if (N < 3)
        throw DomainError("build_generators: requires N >= 3");
    if (ell < 0)
        throw DomainError("build_generators: requires ell >= 0");
    AlgebraRep rep;
    rep.ell = ell;
    rep.N = N;
    rep.S = CMat(N);
    rep.T = CMat(N);
    rep.U = CMat(N);
    for (int i = 0; i < N; ++i) {
        const double n = ell + 1.0 + i;
        rep.S(i, i) = n;
        if (i + 1 < N) {
            // ladder element between |n> and |n+1>
            const double c = std::sqrt((n - ell) * (n + ell + 1.0));
            rep.U(i + 1, i) = 0.5 * c;
            rep.U(i, i + 1) = 0.5 * c;
            rep.T(i + 1, i) = cplx(0.0, -0.5 * c);
            rep.T(i, i + 1) = cplx(0.0, +0.5 * c);
        }
    }
    return rep;
}

CommutatorReport verify_commutators(const AlgebraRep& rep) {
    const int N = rep.N;
    const cplx i1(0.0, 1.0);
    CommutatorReport out;
    out.interior = N - 1;

    const CMat st = rep.S * rep.T - rep.T * rep.S + rep.U * i1;
    const CMat tu = rep.T * rep.U - rep.U * rep.T - rep.S * i1;
    const CMat us = rep.U * rep.S - rep.S * rep.U + rep.T * i1;
    out.st_residual = max_abs_block(st, N - 1);
    out.tu_residual = max_abs_block(tu, N - 1);
    out.us_residual = max_abs_block(us, N - 1);

    CMat cas = rep.S * rep.S - rep.U * rep.U - rep.T * rep.T;
    const double l2 = rep.ell * (rep.ell + 1.0);
    for (int i = 0; i < N; ++i)
        cas(i, i) -= l2;
    out.casimir_residual = max_abs_block(cas, N - 1);
    return out;
}

double hydrogen_energy_from_algebra(double Q, int n) {
    if (n < 1)
        throw DomainError("hydrogen_energy_from_algebra: requires n >= 1");
    if (!(Q > 0.0))
        throw DomainError("hydrogen_energy_from_algebra: requires Q > 0");
    // sqrt(-2E) n = Q with S-eigenvalue n, solved for E
    return -Q * Q / (2.0 * double(n) * double(n));
}

double hausdorff_residual(const AlgebraRep& rep, double beta,
                          int interior_rows) {
    if (interior_rows < 1 || interior_rows > rep.N)
        throw DomainError("hausdorff_residual: bad interior block size");
    const cplx i1(0.0, 1.0);
    const CMat right = expm(rep.T * (i1 * beta));
    const CMat left = expm(rep.T * (-i1 * beta));
    double worst = 0.0;
    for (int sign : {+1, -1}) {
        const CMat su =
            (sign > 0) ? rep.S + rep.U : rep.S - rep.U;
        const CMat lhs = left * su * right;
        const CMat rhs = su * cplx(std::exp(sign * beta), 0.0);
        worst = std::max(worst, max_abs_block(lhs - rhs, interior_rows));
    }
    return worst;
}

std::vector<ExpansionTerm> uehling_operator_expansion(int order,
                                                      const PhysicalContext& ctx) {
    ctx.validate();
    if (order < 0 || order > 4)
        throw DomainError("uehling_operator_expansion: order must be in [0, 4]");
    // Small-z expansion of the closed-form bracket
    //   (1 + z^2/12) K0 - (z/12) Ki1 - (5/6 + z^2/12) Ki2 =
    //     [-ln(z/2) - gamma - 5/6] + (3 pi/8) z - (3/8) z^2 + (pi/24) z^3
    //     + [(ln(z/2) + gamma)/64 - 7/192] z^4 + O(z^5 ln z).
    const double g = sf::euler_gamma;
    const double pref = 2.0 * ctx.alpha * ctx.linear_charge() / (3.0 * pi);
    struct Raw {
        double c, d;
    };
    const Raw raw[5] = {{-g - 5.0 / 6.0, -1.0},
                        {3.0 * pi / 8.0, 0.0},
                        {-3.0 / 8.0, 0.0},
                        {pi / 24.0, 0.0},
                        {g / 64.0 - 7.0 / 192.0, 1.0 / 64.0}};
    std::vector<ExpansionTerm> out;
    for (int m = 0; m <= order; ++m) {
        ExpansionTerm t;
        t.power = m;
        t.coef_const = pref * raw[m].c;
        t.coef_log = pref * raw[m].d;
        t.monomial = "((2/alpha)(S+U))^" + std::to_string(m);
        out.push_back(t);
    }
    return out;
}

double effective_charge_factor(const PhysicalContext& ctx) {
    return fourier::screening_factor(ctx);
}

} // namespace vpol::so21
