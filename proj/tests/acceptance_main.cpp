// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "vpol/bound_states.hpp"
#include "vpol/coulomb_waves.hpp"
#include "vpol/field_equation.hpp"
#include "vpol/fourier.hpp"
#include "vpol/o21_algebra.hpp"
#include "vpol/potentials.hpp"
#include "vpol/scattering.hpp"
#include "vpol/special_functions.hpp"
#include "vpol/typo_ledger.hpp"
#include "vpol/units.hpp"

using namespace vpol;

namespace {

constexpr double pi = 3.141592653589793238462643383279503;
int failures = 0;

void report(int idx, bool pass, const std::string& what,
            const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", idx,
                what.c_str(), detail.c_str());
    if (!pass)
        ++failures;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double s = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::exp(i * s);
    return g;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    double worst = 0.0;
    for (double r : log_grid(1e-4 * ctx.alpha, 30.0 * ctx.alpha, 200)) {
        const double oracle = pot::uehling_integral(r, ctx);
        const double closed = pot::uehling_closed(r, ctx);
        worst = std::max(worst, std::abs(closed / oracle - 1.0));
    }
    const double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max rel dev %.2e (tol 1e-10), %.2f s (limit 10 s)", worst,
                  dt);
    report(1, worst <= 1e-10 && dt <= 10.0,
           "closed-form/oracle equivalence of the Uehling potential", buf);
}

void criterion_2() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    const double r_small = 1e-6 * ctx.alpha;
    const double ratio_small = pot::uehling_closed(r_small, ctx) /
                               pot::uehling_asymptote_small_r(r_small, ctx);
    const double r_large = 15.0 * ctx.alpha;
    const double ratio_large = pot::uehling_closed(r_large, ctx) /
                               pot::uehling_asymptote_large_r(r_large, ctx);
    const bool small_ok = std::abs(ratio_small - 1.0) <= 1e-3;
    const bool large_ok = std::abs(ratio_large - 1.0) <= 1e-2;
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "short-range ratio-1 = %.2e (tol 1e-3); long-range ratio "
                  "= %.4f (tol 1e-2)",
                  std::abs(ratio_small - 1.0), ratio_large);
    report(2, small_ok && large_ok, "asymptotic matching", buf);
    if (!large_ok) {
        std::printf(
            "      note: the long-range clause cannot hold for the leading "
            "asymptote: the exact first correction is -3.625/z (z = 2r/alpha"
            "), i.e. -12%% at r = 15 alpha; the measured deviation matches "
            "that coefficient and shrinks like 1/r (unit tests verify the "
            "approach rate).\n");
    }
}

void criterion_3() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    double worst = 0.0;
    for (double z : log_grid(0.02, 16.0, 50)) {
        const double trid = pot::uehling_tridiagonal(z, ctx);
        const double closed = pot::uehling_closed(0.5 * z * ctx.alpha, ctx);
        worst = std::max(worst, std::abs(trid / closed - 1.0));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "max rel dev %.2e (tol 1e-13)", worst);
    report(3, worst <= 1e-13, "tridiagonal regrouping identity", buf);
}

void criterion_4() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    double worst_eq15 = 0.0, worst_matched = 0.0;
    for (double ka : log_grid(0.01, 20.0, 12)) {
        const double k = ka / ctx.alpha;
        const double closed = fourier::wk_spectral_closed(k, ctx);
        const double oracle_eq15 = fourier::wk_spectral_oracle(k, ctx);
        worst_eq15 =
            std::max(worst_eq15, std::abs(closed / oracle_eq15 - 1.0));
        const double oracle_matched = fourier::spectral_oracle(
            [&](double r) { return fourier::wk_transform_density(r, ctx); }, k);
        worst_matched =
            std::max(worst_matched, std::abs(closed / oracle_matched - 1.0));
    }
    // field-factor identities
    double worst_id = 0.0;
    for (double ka : {0.3, 1.0, 7.0}) {
        const double k = ka / ctx.alpha;
        const auto s =
            fourier::sample(k, ctx, fourier::Source::corrected_closed_form);
        worst_id = std::max(
            worst_id, std::abs(s.u_tilde_k * 4.0 * pi / (k * k) / s.u_k - 1.0));
        worst_id = std::max(
            worst_id, std::abs(s.W_k_field * 4.0 * pi / (k * k) / s.w_k - 1.0));
    }
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "closed vs 1/r-potential transform: max dev %.2f (tol 1e-8);"
                  " vs matched density %.1e; identity dev %.1e",
                  worst_eq15, worst_matched, worst_id);
    report(4, worst_eq15 <= 1e-8 && worst_id <= 1e-15,
           "Wichmann-Kroll transform vs oracle + field-factor identities",
           buf);
    if (worst_eq15 > 1e-8 && worst_matched <= 1e-8) {
        std::printf(
            "      note: the published closed form is the exact transform of "
            "-2Q^3 a^7/(225 pi (r^2+a^2)^2) -- the regularized potential "
            "without its 1/r factor (the published inner integral keeps an "
            "extra r).  The transform of the 1/r-regularized potential has "
            "the small-k limit -4Q^3 a^5/225, a factor 2/(pi a) larger, and "
            "no elementary form; the quadrature oracle reproduces that limit."
            "  The closed form does match its actual density to %.1e.\n",
            worst_matched);
    }
}

void criterion_5() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    const auto ks = log_grid(0.1 / ctx.alpha, 10.0 / ctx.alpha, 10);
    const auto ledger = ledger::build_typo_ledger(ctx, ks);
    bool has_spectral = false;
    for (const auto& e : ledger.entries)
        if (e.id == "uehling_spectral_log_term" && e.samples.size() >= 2)
            has_spectral = true;
    double worst = 0.0;
    for (double k : ks) {
        const double corr = fourier::uehling_spectral_corrected(k, ctx);
        const double oracle = fourier::uehling_spectral_oracle(k, ctx);
        worst = std::max(worst, std::abs(corr / oracle - 1.0));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "ledger entries %zu; corrected-vs-oracle max dev %.2e "
                  "(tol 1e-9)",
                  ledger.entries.size(), worst);
    report(5, has_spectral && worst <= 1e-9,
           "typo-ledger completeness and corrected closed form", buf);
}

void criterion_6() {
    double worst_w = 0.0;
    for (int ell = 0; ell <= 3; ++ell)
        for (double eta : {-5.0, -2.0, -0.5, 0.5, 2.0, 5.0})
            for (double rho : {0.1, 0.4, 1.0, 3.0, 8.0, 20.0, 50.0}) {
                const auto fg = coulomb::coulomb_fg({ell, eta, rho});
                worst_w = std::max(worst_w, std::abs(fg.wronskian() - 1.0));
            }
    double worst_free = 0.0;
    for (double rho : {0.3, 1.0, 3.7, 11.0, 50.0}) {
        const auto fg = coulomb::coulomb_fg({0, 0.0, rho});
        worst_free = std::max(worst_free, std::abs(fg.F - std::sin(rho)));
        worst_free = std::max(worst_free, std::abs(fg.G - std::cos(rho)));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max |W-1| %.2e (tol 1e-9); free-field dev %.2e (tol 1e-12)",
                  worst_w, worst_free);
    report(6, worst_w <= 1e-9 && worst_free <= 1e-12,
           "Coulomb wave Wronskian and free-particle reduction", buf);
}

void criterion_7() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    // zero potential
    const auto zero =
        scatter::integrate_phase([](double) { return 0.0; }, 0, 1.0, ctx);
    bool zero_ok = zero.delta_inf == 0.0;
    for (const auto& [r, d] : zero.samples)
        zero_ok = zero_ok && d == 0.0;

    // Born limit
    auto U = [&](double r) { return pot::uehling_closed(r, ctx); };
    const double born = scatter::born_phase(U, 0, 1.0, ctx);
    const double eps = 1e-4;
    const auto scaled = scatter::integrate_phase(
        [&](double r) { return eps * U(r); }, 0, 1.0, ctx);
    const double born_dev = std::abs(scaled.delta_inf / eps / born - 1.0);

    // magnitude window
    const auto full = scatter::integrate_phase(U, 0, 1.0, ctx);
    const double mag = std::abs(full.delta_inf) / ctx.alpha;
    const bool window_ok = mag >= 0.1 && mag <= 10.0;

    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "zero-potential %s; Born dev %.2e (tol 1e-2); |delta0| = "
                  "%.3e alpha (window [0.1, 10] alpha)",
                  zero_ok ? "exact" : "NOT exact", born_dev, mag);
    report(7, zero_ok && born_dev <= 1e-2 && window_ok,
           "variable phase: zero potential, Born limit, magnitude", buf);
    if (!window_ok) {
        std::printf(
            "      note: delta0 = %.6e; the Uehling potential has strength "
            "~alpha AND range ~alpha, so at k = 1 the phase is "
            "-2k C_0(eta)^2 int U r^2 dr ~ alpha^3 (the Born oracle agrees "
            "with the converged value to %.1e); no k brings it into the "
            "stated alpha window.\n",
            full.delta_inf, std::abs(full.delta_inf / born - 1.0));
    }
}

void criterion_8() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    bool shape_ok = true, components_zero = true, dual_reported = true;
    for (double th : {0.3, 1.0, 2.0, pi}) {
        const auto p = scatter::differential_cross_section(th, 1.0, 0.0, 1.0, ctx);
        const double s2 = std::pow(std::sin(0.5 * th), 2);
        shape_ok = shape_ok &&
                   std::abs(p.dsigma * s2 * s2 / (0.5) - 1.0) < 1e-13;
        components_zero =
            components_zero && p.interference_part == 0.0 && p.vp_part == 0.0;
        const auto q =
            scatter::differential_cross_section(th, 1.0, 0.01, 1.0, ctx);
        dual_reported = dual_reported && std::isfinite(q.dual_discrepancy);
    }
    report(8, shape_ok && components_zero && dual_reported,
           "cross-section: Rutherford shape at delta0 = 0, dual assembly",
           components_zero ? "interference and quadratic terms exactly zero; "
                             "dual-assembly discrepancy reported"
                           : "nonzero components at delta0 = 0");
}

void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    double worst_e = 0.0;
    for (double Q : {1.0, 2.0}) {
        for (auto [n, l] : {std::pair{1, 0}, {2, 0}, {2, 1}}) {
            const auto res = bound::numerov_eigensolve(
                n, l, Q, bound::PotentialMode::coulomb, {}, ctx);
            const double exact = -Q * Q / (2.0 * n * n);
            worst_e = std::max(worst_e, std::abs(res.energy / exact - 1.0));
        }
    }
    double worst_shift = 0.0;
    for (double Q : {1.0, 2.0}) {
        const auto ec = bound::numerov_eigensolve(
            1, 0, Q, bound::PotentialMode::coulomb, {}, ctx);
        const auto et = bound::numerov_eigensolve(
            1, 0, Q, bound::PotentialMode::total, {}, ctx);
        const auto st = bound::hydrogenic_state(1, 0, Q);
        const double pert =
            bound::perturbative_shift(st, bound::Shift::both, ctx);
        worst_shift = std::max(
            worst_shift, std::abs((et.energy - ec.energy) / pert - 1.0));
    }
    const double dt = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "max E dev %.1e (tol 1e-8); shift mismatch %.2e (tol 5e-2); "
                  "%.1f s (limit 60 s)",
                  worst_e, worst_shift, dt);
    report(9, worst_e <= 1e-8 && worst_shift <= 0.05 && dt <= 60.0,
           "Numerov spectrum and vacuum-polarization shift", buf);
}

void criterion_10() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    // alpha -> 0 limit
    PhysicalContext tiny = PhysicalContext::nuclear(1.0, 1e-40);
    const auto rep0 = bound::modified_cusp(1.0, 1.0, 0.5, tiny);
    const bool limit_ok = rep0.nu_modified == rep0.nu_coulomb;

    const auto rep = bound::modified_cusp(1.0, 1.0, 0.5, ctx);
    const bool rel_ok = rep.uehling_rel_correction >= 3e-4 &&
                        rep.uehling_rel_correction <= 3e-3;
    bool wk_ok = true;
    for (double Q : {1.0, 3.0, 5.0}) {
        const auto r = bound::modified_cusp(Q, 1.0, 0.5, ctx);
        wk_ok = wk_ok && r.wk_abs_correction < 1e-6;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "alpha->0 %s; rel corr %.3e in [3e-4, 3e-3]; WK term < 1e-6 "
                  "for Q <= 5: %s",
                  limit_ok ? "exact" : "NOT exact", rep.uehling_rel_correction,
                  wk_ok ? "yes" : "no");
    report(10, limit_ok && rel_ok && wk_ok, "regularized cusp values", buf);
}

void criterion_11() {
    double worst = 0.0;
    for (auto [ell, N] : {std::pair{0, 8}, {1, 10}, {2, 12}}) {
        const auto rep = so21::build_generators(ell, N);
        const auto r = so21::verify_commutators(rep);
        worst = std::max({worst, r.st_residual, r.tu_residual, r.us_residual,
                          r.casimir_residual});
    }
    bool energies_exact = true;
    for (double Q : {1.0, 2.0})
        for (int n : {1, 2, 3})
            energies_exact =
                energies_exact && so21::hydrogen_energy_from_algebra(Q, n) ==
                                      -Q * Q / (2.0 * double(n) * double(n));
    const auto rep = so21::build_generators(0, 12);
    const double haus = so21::hausdorff_residual(rep, 0.1, 4);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "commutator/Casimir residual %.1e (tol 1e-12); E_n exact: "
                  "%s; Hausdorff %.1e (tol 1e-8)",
                  worst, energies_exact ? "yes" : "no", haus);
    report(11, worst <= 1e-12 && energies_exact && haus <= 1e-8,
           "radial-algebra representation", buf);
}

void criterion_12() {
    const PhysicalContext ctx = PhysicalContext::nuclear(1.0);
    const auto phys = field::appendix_coefficients(1.0, ctx);
    double worst_res = 0.0;
    for (double r : log_grid(1e-8, 1e6, 30)) {
        field::CubicCoefficients c{phys.p, phys.q, r};
        worst_res = std::max(
            worst_res, field::cardano_residual(c, field::cardano_real_root(c)));
    }
    const auto small = field::appendix_asymptotes(field::Regime::small_r, 3.0, 2.0);
    const auto large = field::appendix_asymptotes(field::Regime::large_r, 3.0, 2.0);
    const bool small_ok = std::abs(small.fitted / small.expected - 1.0) <= 0.01;
    const bool large_ok = std::abs(large.fitted / large.expected - 1.0) <= 0.01;
    double worst_psi = 0.0;
    for (double r : {0.01, 3.0 * ctx.alpha, 1.0})
        worst_psi = std::max(
            worst_psi, std::abs(field::field_correction_psi(r, ctx) /
                                    pot::wichmann_kroll_raw(r, ctx) -
                                1.0));
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "residual %.1e (tol 1e-10); exponent %.4f (-2/3 within 1%%);"
                  " y r^2 limit dev %.1e; psi dev %.1e (tol 1e-12)",
                  worst_res, small.fitted,
                  std::abs(large.fitted / large.expected - 1.0), worst_psi);
    report(12,
           worst_res <= 1e-10 && small_ok && large_ok && worst_psi <= 1e-12,
           "nonlinear field equation", buf);
}

void criterion_13() {
    namespace fs = std::filesystem;
    const fs::path tmp =
        fs::temp_directory_path() /
        ("vpol_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    auto run = [&](const std::string& args) {
        const std::string cmd = std::string(VPOL_CLI_PATH) + " " + args;
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    bool ok = true;
    // repeated runs byte-identical
    const std::string args =
        "potential --Q 1 --rmin 1e-4 --rmax 30 --count 40 --spacing log "
        "--units alpha --output ";
    ok = ok && run(args + (tmp / "a.csv").string()) == 0;
    ok = ok && run(args + (tmp / "b.csv").string()) == 0;
    ok = ok && read_file(tmp / "a.csv") == read_file(tmp / "b.csv") &&
         !read_file(tmp / "a.csv").empty();
    // golden files stable
    const fs::path golden = fs::path(VPOL_SOURCE_DIR) / "tests" / "golden";
    struct Case {
        const char* name;
        std::string args;
    };
    const Case cases[] = {
        {"potential_q1.csv",
         "potential --Q 1 --rmin 1e-4 --rmax 30 --count 5 --spacing log "
         "--units alpha"},
        {"cusp_q1.json", "cusp --Q 1 --C 1"},
        {"field_q1.csv",
         "field --Q 1 --rmin 1 --rmax 100 --count 3 --units alpha"},
        {"spectrum_q1.csv",
         "spectrum --Q 1 --kmin 0.5 --kmax 2 --count 3 --units alpha"},
    };
    for (const auto& c : cases) {
        const fs::path out = tmp / c.name;
        ok = ok && run(c.args + " --output " + out.string()) == 0;
        ok = ok && read_file(out) == read_file(golden / c.name);
    }
    fs::remove_all(tmp);
    report(13, ok, "CLI determinism and golden stability",
           ok ? "byte-identical reruns; all goldens reproduced"
              : "byte mismatch");
}

} // namespace

int main() {
    std::printf("vpol acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::printf("%d/13 criteria passed\n", 13 - failures);
    return failures;
}
