#include "doctest.h"
#include <tuple>

#include <cmath>

#include "vpol/bound_states.hpp"
#include "vpol/potentials.hpp"
#include "vpol/quadrature.hpp"

using namespace vpol;

namespace {
const PhysicalContext ctx1 = PhysicalContext::nuclear(1.0);

// node count of the grid function away from the clipped tails
int count_nodes(const std::vector<double>& u) {
    double peak = 0.0;
    for (double v : u)
        peak = std::max(peak, std::abs(v));
    int nodes = 0;
    double prev = 0.0;
    for (double v : u) {
        if (std::abs(v) < 1e-8 * peak)
            continue;
        if (prev != 0.0 && v * prev < 0.0)
            ++nodes;
        prev = v;
    }
    return nodes;
}
} // namespace

TEST_CASE("hydrogenic states: energies, nodes, normalization") {
    auto s10 = bound::hydrogenic_state(1, 0, 1.0);
    CHECK(s10.energy == doctest::Approx(-0.5).epsilon(1e-15).scale(0.0));
    auto s21 = bound::hydrogenic_state(2, 1, 1.0);
    CHECK(s21.energy == doctest::Approx(-0.125).epsilon(1e-15).scale(0.0));
    auto s30 = bound::hydrogenic_state(3, 0, 2.0);
    CHECK(s30.energy == doctest::Approx(-2.0 / 9.0).epsilon(1e-15).scale(0.0));

    CHECK_THROWS_AS(bound::hydrogenic_state(0, 0, 1.0), DomainError);
    CHECK_THROWS_AS(bound::hydrogenic_state(2, 2, 1.0), DomainError);
    CHECK_THROWS_AS(bound::hydrogenic_state(1, 0, 0.0), DomainError);

    // normalization and node counts by quadrature
    using NLQ = std::tuple<int, int, double>;
    for (auto [n, l, Q] : {NLQ{1, 0, 1.0}, NLQ{2, 0, 1.0}, NLQ{2, 1, 1.0},
                           NLQ{3, 0, 2.0}, NLQ{3, 2, 1.5}}) {
        auto st = bound::hydrogenic_state(n, l, Q);
        const double norm =
            quad::exp_sinh_full(
                [&](double r, double) {
                    const double R = st.radial(r);
                    return R * R * r * r;
                },
                0.0)
                .value;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-10).scale(0.0));
        // radial node count n - l - 1 on a grid
        int nodes = 0;
        double prev = st.radial(1e-6 / Q);
        for (double r = 1e-3; r < 80.0 * n * n / Q; r += 0.01 * n / Q) {
            const double v = st.radial(r);
            if (v * prev < 0.0)
                ++nodes;
            prev = v;
        }
        CHECK(nodes == n - l - 1);
    }

    // derivative consistency with a central difference
    auto st = bound::hydrogenic_state(3, 1, 1.0);
    const double r = 2.3, h = 1e-6;
    const double fd = (st.radial(r + h) - st.radial(r - h)) / (2.0 * h);
    CHECK(st.radial_deriv(r) == doctest::Approx(fd).epsilon(1e-8).scale(0.0));
}

TEST_CASE("perturbative shifts: golden, dual-quadrature, hierarchy") {
    auto st = bound::hydrogenic_state(1, 0, 1.0);
    const double pu = bound::perturbative_shift(st, bound::Shift::uehling, ctx1);
    const double pw =
        bound::perturbative_shift(st, bound::Shift::wichmann_kroll, ctx1);
    const double pb = bound::perturbative_shift(st, bound::Shift::both, ctx1);

    // golden value frozen after dual-quadrature agreement
    CHECK(pu == doctest::Approx(-3.2691731313e-08).epsilon(1e-8).scale(0.0));
    CHECK(pb == doctest::Approx(pu + pw).epsilon(1e-10).scale(0.0));
    CHECK(pu < 0.0); // Uehling deepens s levels
    CHECK(pw > 0.0);

    // order alpha^3 in magnitude
    const double a3 = std::pow(ctx1.alpha, 3);
    CHECK(std::abs(pu) > 0.01 * a3);
    CHECK(std::abs(pu) < a3);

    // independent scheme: composite Simpson in x = ln r
    {
        const PhysicalContext en = PhysicalContext::pair(-1.0, 1.0, ctx1.alpha);
        auto f = [&](double x) {
            const double r = std::exp(x);
            const double R = st.radial(r);
            const double V = pot::uehling_closed(r, en);
            return V * R * R * r * r * r; // extra r from dr = r dx
        };
        const double x0 = std::log(1e-9), x1 = std::log(60.0);
        const int m = 40000; // even
        const double h = (x1 - x0) / m;
        double simpson = f(x0) + f(x1);
        for (int i = 1; i < m; ++i)
            simpson += f(x0 + i * h) * (i % 2 ? 4.0 : 2.0);
        simpson *= h / 3.0;
        CHECK(pu == doctest::Approx(simpson).epsilon(1e-9).scale(0.0));
    }
}

TEST_CASE("WK shift much smaller than Uehling shift for Q <= 5") {
    for (double Q : {1.0, 3.0, 5.0}) {
        auto stq = bound::hydrogenic_state(1, 0, Q);
        const double u = bound::perturbative_shift(stq, bound::Shift::uehling, ctx1);
        const double w =
            bound::perturbative_shift(stq, bound::Shift::wichmann_kroll, ctx1);
        CHECK(std::abs(w) < 0.01 * std::abs(u));
    }
}

TEST_CASE("Numerov: Coulomb spectrum to 1e-8") {
    for (double Q : {1.0, 2.0}) {
        for (auto [n, l] : {std::pair{1, 0}, {2, 0}, {2, 1}}) {
            const auto res = bound::numerov_eigensolve(
                n, l, Q, bound::PotentialMode::coulomb, {}, ctx1);
            const double exact = -Q * Q / (2.0 * n * n);
            INFO("Q=", Q, " n=", n, " l=", l);
            CHECK(res.energy == doctest::Approx(exact).epsilon(1e-8).scale(0.0));
            CHECK(res.nodes == n - l - 1);
            CHECK(count_nodes(res.u) == n - l - 1);
            CHECK(res.converged);
        }
    }
}

TEST_CASE("Numerov: eigenfunction is normalized and virial holds") {
    const auto res = bound::numerov_eigensolve(
        1, 0, 1.0, bound::PotentialMode::coulomb, {}, ctx1);
    // trapezoid in x = ln r: int u^2 dr = sum u^2 r h
    const double h = std::log(res.r[1] / res.r[0]);
    double norm = 0.0, vbar = 0.0;
    for (std::size_t i = 0; i < res.r.size(); ++i) {
        const double w = (i == 0 || i + 1 == res.r.size()) ? 0.5 : 1.0;
        norm += w * res.u[i] * res.u[i] * res.r[i] * h;
        vbar += w * (-1.0 / res.r[i]) * res.u[i] * res.u[i] * res.r[i] * h;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10).scale(0.0));
    // <T> = E - <V> must equal -E: i.e. <V> = 2E
    CHECK(vbar == doctest::Approx(2.0 * res.energy).epsilon(1e-6).scale(0.0));
}

TEST_CASE("Numerov: direct vacuum-polarization shift matches perturbation") {
    for (double Q : {1.0, 2.0}) {
        const auto ec = bound::numerov_eigensolve(
            1, 0, Q, bound::PotentialMode::coulomb, {}, ctx1);
        const auto et = bound::numerov_eigensolve(
            1, 0, Q, bound::PotentialMode::total, {}, ctx1);
        auto st = bound::hydrogenic_state(1, 0, Q);
        const double pert =
            bound::perturbative_shift(st, bound::Shift::both, ctx1);
        INFO("Q=", Q);
        CHECK((et.energy - ec.energy) / pert == doctest::Approx(1.0).epsilon(0.05).scale(0.0));
    }
}

TEST_CASE("Numerov error paths") {
    bound::NumerovGrid coarse;
    coarse.count = 50;
    CHECK_THROWS_AS(bound::numerov_eigensolve(1, 0, 1.0,
                                              bound::PotentialMode::coulomb,
                                              coarse, ctx1),
                    DomainError);
    bound::NumerovGrid tiny_box;
    tiny_box.r_min = 1e-5;
    tiny_box.r_max = 0.3; // cannot hold the 1s state
    CHECK_THROWS_AS(bound::numerov_eigensolve(1, 0, 1.0,
                                              bound::PotentialMode::coulomb,
                                              tiny_box, ctx1),
                    ConvergenceError);
}

TEST_CASE("contact cusp of analytic states") {
    CHECK(bound::cusp_operator_value(bound::hydrogenic_state(1, 0, 1.0)) ==
          doctest::Approx(-1.0).epsilon(1e-14).scale(0.0));
    CHECK(bound::cusp_operator_value(bound::hydrogenic_state(1, 0, 3.0)) ==
          doctest::Approx(-3.0).epsilon(1e-14).scale(0.0));
    // independent of n
    CHECK(bound::cusp_operator_value(bound::hydrogenic_state(4, 0, 2.0)) ==
          doctest::Approx(-2.0).epsilon(1e-14).scale(0.0));
    CHECK_THROWS_AS(
        bound::cusp_operator_value(bound::hydrogenic_state(2, 1, 1.0)),
        DomainError);
    CHECK(bound::electron_electron_cusp == 0.5);
    // ratio (dR/dr)/R at small r approaches -Q
    auto st = bound::hydrogenic_state(2, 0, 1.5);
    const double r = 1e-8;
    CHECK(st.radial_deriv(r) / st.radial(r) ==
          doctest::Approx(-1.5).epsilon(1e-6).scale(0.0));
}

TEST_CASE("modified cusp report") {
    const auto rep = bound::modified_cusp(1.0, 1.0, 0.5, ctx1);
    CHECK(rep.nu_coulomb == -1.0);
    // paper-scale relative Uehling correction ~ 1e-3 (0.1%)
    CHECK(rep.uehling_rel_correction > 3e-4);
    CHECK(rep.uehling_rel_correction < 3e-3);
    // Wichmann-Kroll cusp term ~ 1e-7 scale for Q <= 5
    for (double Q : {1.0, 3.0, 5.0}) {
        const auto r = bound::modified_cusp(Q, 1.0, 0.5, ctx1);
        CHECK(r.wk_abs_correction > 0.0);
        CHECK(r.wk_abs_correction < 1e-6);
    }
    // screening reduces the cusp magnitude for C >= 1
    for (double C : {1.0, 2.0, 10.0}) {
        const auto r = bound::modified_cusp(2.0, C, 0.5, ctx1);
        CHECK(std::abs(r.nu_modified) < 2.0);
    }
    // alpha -> 0 limit restores the Coulomb cusp exactly
    PhysicalContext tiny = PhysicalContext::nuclear(1.0, 1e-40);
    const auto r0 = bound::modified_cusp(1.0, 1.0, 0.5, tiny);
    CHECK(r0.nu_modified == r0.nu_coulomb);
    CHECK_THROWS_AS(bound::modified_cusp(1.0, 0.0, 0.5, ctx1), DomainError);
}

TEST_CASE("r-dependent cusp diagnostic and minimal distance") {
    // the r-dependent form has no r -> 0 limit (log divergence)
    const double v1 = bound::cusp_r_dependent(1e-4, 1.0, 0.5, ctx1);
    const double v2 = bound::cusp_r_dependent(1e-8, 1.0, 0.5, ctx1);
    CHECK(std::abs(v2 - v1) > 1e-5);
    // a_min = Lambda_e / Q: doubling Q halves it
    CHECK(bound::minimal_distance(2.0, ctx1) ==
          doctest::Approx(0.5 * bound::minimal_distance(1.0, ctx1))
              .epsilon(1e-15).scale(0.0));
}
