#include "doctest.h"

#include <cmath>

#include "vpol/o21_algebra.hpp"
#include "vpol/potentials.hpp"
#include "vpol/special_functions.hpp"

using namespace vpol;

namespace {
constexpr double pi = 3.141592653589793238462643383279503;
const PhysicalContext ctx1 = PhysicalContext::nuclear(1.0);

// closed-form bracket of the scaled potential, (3 pi z / 4) U_unit(z)
double bracket(double z) {
    const double k0 = sf::bessel_k0(z);
    const double ki1 = sf::bickley_ki(1, z);
    const double ki2 = sf::bickley_ki(2, z);
    return (1.0 + z * z / 12.0) * k0 - z / 12.0 * ki1 -
           (5.0 / 6.0 + z * z / 12.0) * ki2;
}
} // namespace

TEST_CASE("generator construction: spectrum of S") {
    const auto rep = so21::build_generators(0, 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(rep.S(i, i).real() == doctest::Approx(i + 1.0));
        CHECK(rep.S(i, i).imag() == 0.0);
    }
    CHECK_THROWS_AS(so21::build_generators(0, 2), DomainError);

    // U real symmetric with nonnegative off-diagonals, T anti-symmetric
    // imaginary
    for (int i = 0; i + 1 < 5; ++i) {
        CHECK(rep.U(i + 1, i).real() >= 0.0);
        CHECK(rep.U(i + 1, i).imag() == 0.0);
        CHECK(rep.T(i + 1, i).real() == 0.0);
        CHECK(rep.T(i, i + 1) == -rep.T(i + 1, i));
    }
}

TEST_CASE("commutators and Casimir on the interior block") {
    for (auto [ell, N] : {std::pair{0, 8}, {1, 10}, {2, 12}}) {
        const auto rep = so21::build_generators(ell, N);
        const auto rpt = so21::verify_commutators(rep);
        INFO("ell=", ell, " N=", N);
        CHECK(rpt.st_residual <= 1e-12);
        CHECK(rpt.tu_residual <= 1e-12);
        CHECK(rpt.us_residual <= 1e-12);
        CHECK(rpt.casimir_residual <= 1e-12);
        CHECK(rpt.interior == N - 1);
    }
}

TEST_CASE("corrupted representation is detected") {
    auto rep = so21::build_generators(1, 8);
    rep.U(2, 3) += 1.0; // unit perturbation
    const auto rpt = so21::verify_commutators(rep);
    const double worst = std::max({rpt.st_residual, rpt.tu_residual,
                                   rpt.us_residual, rpt.casimir_residual});
    CHECK(worst >= 0.5);
}

TEST_CASE("spectrum from the algebra route") {
    CHECK(so21::hydrogen_energy_from_algebra(1.0, 1) == -0.5);
    CHECK(so21::hydrogen_energy_from_algebra(2.0, 3) ==
          doctest::Approx(-2.0 / 9.0).epsilon(1e-16).scale(0.0));
    // machine-precision equality with the analytic form
    for (double Q : {1.0, 2.0, 7.5}) {
        for (int n : {1, 2, 5}) {
            CHECK(so21::hydrogen_energy_from_algebra(Q, n) ==
                  -Q * Q / (2.0 * double(n) * double(n)));
        }
    }
    CHECK_THROWS_AS(so21::hydrogen_energy_from_algebra(1.0, 0), DomainError);
}

TEST_CASE("Hausdorff scaling identity") {
    const auto rep = so21::build_generators(0, 12);
    // contamination from the truncation edge decays with distance; the
    // leading 4x4 corner is clean at beta = 0.1
    CHECK(so21::hausdorff_residual(rep, 0.1, 4) <= 1e-8);
    // smaller beta tightens the identity
    CHECK(so21::hausdorff_residual(rep, 0.01, 4) <=
          so21::hausdorff_residual(rep, 0.1, 4));
}

TEST_CASE("operator expansion of r U(r)") {
    const auto terms = so21::uehling_operator_expansion(4, ctx1);
    REQUIRE(terms.size() == 5);
    const double pref = 2.0 * ctx1.alpha / (3.0 * pi);

    // series evaluation against the closed-form bracket: the remainder
    // after subtracting orders 0..4 scales like z^5 (up to the log factor)
    auto series = [&](double z) {
        const double lz = std::log(0.5 * z);
        double s = 0.0, zp = 1.0;
        for (const auto& t : terms) {
            s += (t.coef_const + t.coef_log * lz) * zp;
            zp *= z;
        }
        return s;
    };
    double resid_prev = 0.0;
    for (double z : {0.32, 0.16, 0.08, 0.04}) {
        const double resid = std::abs(series(z) - pref * bracket(z));
        CHECK(resid / (pref * std::pow(z, 5) * std::abs(std::log(z))) < 2.0);
        if (resid_prev != 0.0) {
            // a defective order-4 coefficient would leave a z^4 remainder
            // (ratio 16); the true remainder decays at least like z^5
            const double ratio = resid_prev / resid;
            CHECK(ratio > 24.0);
            CHECK(ratio < 200.0);
        }
        resid_prev = resid;
    }

    // each truncation order improves the small-z fit
    const double z = 0.05;
    double prev = 1e300;
    for (int ord = 0; ord <= 4; ++ord) {
        const auto tt = so21::uehling_operator_expansion(ord, ctx1);
        const double lz = std::log(0.5 * z);
        double s = 0.0, zp = 1.0;
        for (const auto& t : tt) {
            s += (t.coef_const + t.coef_log * lz) * zp;
            zp *= z;
        }
        const double resid = std::abs(s - pref * bracket(z));
        CHECK(resid < prev);
        prev = resid;
    }

    CHECK_THROWS_AS(so21::uehling_operator_expansion(5, ctx1), DomainError);

    // alpha -> 0: all correction coefficients vanish
    PhysicalContext small = PhysicalContext::nuclear(1.0, 1e-20);
    for (const auto& t : so21::uehling_operator_expansion(4, small)) {
        CHECK(std::abs(t.coef_const) < 1e-19);
        CHECK(std::abs(t.coef_log) < 1e-19);
    }
}

TEST_CASE("screening factor") {
    CHECK(so21::effective_charge_factor(ctx1) ==
          doctest::Approx(1.0 - 5.0 * ctx1.alpha / (9.0 * pi)).epsilon(1e-15).scale(0.0));
}
