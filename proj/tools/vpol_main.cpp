// vpol: tables and reports for the vacuum-polarization-corrected two-charge
// interaction.  Emits CSV or JSON; exit codes: 0 success, 2 invalid
// configuration, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vpol/bound_states.hpp"
#include "vpol/coulomb_waves.hpp"
#include "vpol/errors.hpp"
#include "vpol/field_equation.hpp"
#include "vpol/fourier.hpp"
#include "vpol/o21_algebra.hpp"
#include "vpol/parallel.hpp"
#include "vpol/potentials.hpp"
#include "vpol/scattering.hpp"
#include "vpol/typo_ledger.hpp"
#include "vpol/units.hpp"
#include "vpol/version.hpp"

namespace {

using nlohmann::json;
using namespace vpol;

struct Options {
    double Q = 1.0;
    std::optional<double> q1, q2;
    double alpha = 1.0 / 137.035999;
    std::string output;      // empty = stdout
    std::string format = "csv";
    std::string spacing = "log";
    std::string units = "au";
    int threads = 1;
    double rel_tol = 1e-12;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PhysicalContext make_context(const Options& o) {
    if (o.q1 && o.q2)
        return PhysicalContext::pair(*o.q1, *o.q2, o.alpha);
    return PhysicalContext::nuclear(o.Q, o.alpha);
}

std::vector<double> make_grid(double lo, double hi, int count,
                              const std::string& spacing) {
    if (count < 2)
        throw DomainError("grid: count must be >= 2");
    if (!(lo < hi))
        throw DomainError("grid: min must be < max");
    std::vector<double> g(count);
    if (spacing == "log") {
        if (!(lo > 0.0))
            throw DomainError("grid: log spacing requires min > 0");
        const double step = std::log(hi / lo) / (count - 1);
        for (int i = 0; i < count; ++i)
            g[i] = lo * std::exp(i * step);
    } else if (spacing == "linear") {
        const double step = (hi - lo) / (count - 1);
        for (int i = 0; i < count; ++i)
            g[i] = lo + i * step;
    } else {
        throw DomainError("grid: spacing must be log or linear");
    }
    return g;
}

// All output goes through a staging file that is renamed on success and
// removed on failure, so failed runs leave no partial files behind.
class OutputFile {
public:
    explicit OutputFile(const std::string& path) : path_(path) {
        if (!path_.empty()) {
            staging_ = path_ + ".part";
            file_.open(staging_, std::ios::binary | std::ios::trunc);
            if (!file_)
                throw DomainError("cannot open output file: " + staging_);
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void commit() {
        if (path_.empty())
            return;
        file_.close();
        std::filesystem::rename(staging_, path_);
        committed_ = true;
    }
    ~OutputFile() {
        if (!path_.empty() && !committed_) {
            file_.close();
            std::error_code ec;
            std::filesystem::remove(staging_, ec);
        }
    }

private:
    std::string path_, staging_;
    std::ofstream file_;
    bool committed_ = false;
};

void csv_preamble(std::ostream& os, const Options& o, const std::string& cmd,
                  const std::string& extra = "") {
    os << "# vpol " << vpol::version << " " << cmd << "\n";
    os << "# alpha = " << fmt(o.alpha) << ", rel_tol = " << fmt(o.rel_tol);
    if (o.q1 && o.q2)
        os << ", q1 = " << fmt(*o.q1) << ", q2 = " << fmt(*o.q2);
    else
        os << ", Q = " << fmt(o.Q);
    os << "\n";
    if (!extra.empty())
        os << "# " << extra << "\n";
}

json json_config(const Options& o, const std::string& cmd) {
    json c;
    c["command"] = cmd;
    c["version"] = vpol::version;
    c["alpha"] = o.alpha;
    c["rel_tol"] = o.rel_tol;
    if (o.q1 && o.q2) {
        c["q1"] = *o.q1;
        c["q2"] = *o.q2;
    } else {
        c["Q"] = o.Q;
    }
    return c;
}

int run_potential(const Options& o, double rmin, double rmax, int count) {
    const PhysicalContext ctx = make_context(o);
    const double scale = (o.units == "alpha") ? ctx.alpha : 1.0;
    const auto grid = make_grid(rmin, rmax, count, o.spacing);

    const auto rows = util::parallel_map<pot::PotentialSample>(
        grid.size(), o.threads,
        [&](std::size_t i) { return pot::total_potential(grid[i] * scale, ctx); });

    OutputFile out(o.output);
    if (o.format == "csv") {
        csv_preamble(out.stream(), o, "potential",
                     "r in " + std::string(o.units == "alpha"
                                               ? "units of alpha (Bohr radii inside)"
                                               : "Bohr radii"));
        out.stream()
            << "r,coulomb,uehling,wichmann_kroll,total,source\n";
        for (const auto& s : rows)
            out.stream() << fmt(s.r) << "," << fmt(s.coulomb) << ","
                         << fmt(s.uehling) << "," << fmt(s.wichmann_kroll)
                         << "," << fmt(s.total) << ",closed_form\n";
    } else {
        json j;
        j["config"] = json_config(o, "potential");
        j["results"] = json::array();
        for (const auto& s : rows) {
            j["results"].push_back({{"r", s.r},
                                    {"coulomb", s.coulomb},
                                    {"uehling", s.uehling},
                                    {"wichmann_kroll", s.wichmann_kroll},
                                    {"total", s.total},
                                    {"source", "closed_form"}});
        }
        j["diagnostics"] = {{"rows", rows.size()}};
        out.stream() << j.dump(2) << "\n";
    }
    out.commit();
    return 0;
}

int run_spectrum(const Options& o, double kmin, double kmax, int count) {
    const PhysicalContext ctx = make_context(o);
    const double scale = (o.units == "alpha") ? 1.0 / ctx.alpha : 1.0;
    const auto grid = make_grid(kmin, kmax, count, o.spacing);

    struct Row {
        double k, u_pub, u_oracle, u_corr, disc, u_tilde, w_k, W_field;
    };
    const auto rows = util::parallel_map<Row>(
        grid.size(), o.threads, [&](std::size_t i) {
            Row r;
            r.k = grid[i] * scale;
            r.u_pub = fourier::uehling_spectral_closed_form(r.k, ctx);
            r.u_oracle = fourier::uehling_spectral_oracle(r.k, ctx);
            r.u_corr = fourier::uehling_spectral_corrected(r.k, ctx);
            r.disc = (r.u_pub - r.u_oracle) /
                     std::max(std::abs(r.u_oracle), 1e-300);
            r.u_tilde = fourier::uehling_field_factor(r.k, ctx);
            r.w_k = fourier::wk_spectral_closed(r.k, ctx);
            r.W_field = fourier::wk_field_factor(r.k, ctx);
            return r;
        });

    OutputFile out(o.output);
    if (o.format == "csv") {
        csv_preamble(out.stream(), o, "spectrum",
                     "u columns tagged by source: closed_form (as published), "
                     "quadrature_oracle, corrected_closed_form");
        out.stream() << "k,u_closed_form,u_quadrature_oracle,"
                        "u_corrected_closed_form,rel_discrepancy_closed_form,"
                        "u_tilde,w_k,W_k_field\n";
        for (const auto& r : rows)
            out.stream() << fmt(r.k) << "," << fmt(r.u_pub) << ","
                         << fmt(r.u_oracle) << "," << fmt(r.u_corr) << ","
                         << fmt(r.disc) << "," << fmt(r.u_tilde) << ","
                         << fmt(r.w_k) << "," << fmt(r.W_field) << "\n";
    } else {
        json j;
        j["config"] = json_config(o, "spectrum");
        j["results"] = json::array();
        for (const auto& r : rows) {
            j["results"].push_back({{"k", r.k},
                                    {"u_closed_form", r.u_pub},
                                    {"u_quadrature_oracle", r.u_oracle},
                                    {"u_corrected_closed_form", r.u_corr},
                                    {"rel_discrepancy_closed_form", r.disc},
                                    {"u_tilde", r.u_tilde},
                                    {"w_k", r.w_k},
                                    {"W_k_field", r.W_field}});
        }
        j["diagnostics"] = {{"rows", rows.size()}};
        out.stream() << j.dump(2) << "\n";
    }
    out.commit();
    return 0;
}

int run_phase(const Options& o, double k, int ell, const std::string& comp) {
    const PhysicalContext ctx = make_context(o);
    const PhysicalContext en = PhysicalContext::pair(-1.0, ctx.Q, ctx.alpha);
    auto V = [&](double r) -> double {
        double v = 0.0;
        if (comp == "uehling" || comp == "both")
            v += pot::uehling_closed(r, en);
        if (comp == "wk" || comp == "both")
            v += pot::wichmann_kroll_regularized(r, en);
        return v;
    };
    const auto tr = scatter::integrate_phase(V, ell, k, ctx);

    OutputFile out(o.output);
    if (o.format == "csv") {
        csv_preamble(out.stream(), o, "phase",
                     "component = " + comp + ", k = " + fmt(k) +
                         ", ell = " + std::to_string(ell) +
                         ", delta_inf = " + fmt(tr.delta_inf) +
                         ", converged = " + (tr.converged ? "1" : "0") +
                         ", tail_estimate = " + fmt(tr.tail_estimate));
        out.stream() << "r,delta\n";
        for (const auto& [r, d] : tr.samples)
            out.stream() << fmt(r) << "," << fmt(d) << "\n";
    } else {
        json j;
        j["config"] = json_config(o, "phase");
        j["config"]["k"] = k;
        j["config"]["ell"] = ell;
        j["config"]["component"] = comp;
        j["results"] = {{"delta_inf", tr.delta_inf},
                        {"converged", tr.converged},
                        {"tail_estimate", tr.tail_estimate}};
        j["results"]["trajectory"] = json::array();
        for (const auto& [r, d] : tr.samples)
            j["results"]["trajectory"].push_back({{"r", r}, {"delta", d}});
        out.stream() << j.dump(2) << "\n";
    }
    out.commit();
    return 0;
}

int run_cross_section(const Options& o, double k, double delta0, double a_C,
                      double tmin, double tmax, int count) {
    const PhysicalContext ctx = make_context(o);
    const auto grid = make_grid(tmin, tmax, count, "linear");
    const auto rows = util::parallel_map<scatter::CrossSectionPoint>(
        grid.size(), o.threads, [&](std::size_t i) {
            return scatter::differential_cross_section(grid[i], k, delta0, a_C,
                                                       ctx);
        });

    OutputFile out(o.output);
    if (o.format == "csv") {
        csv_preamble(out.stream(), o, "cross-section",
                     "k = " + fmt(k) + ", delta0 = " + fmt(delta0) +
                         ", a_C = " + fmt(a_C));
        out.stream() << "theta,dsigma_printed,coulomb,interference,"
                        "vacuum_polarization,dsigma_amplitude,"
                        "dual_discrepancy\n";
        for (const auto& p : rows)
            out.stream() << fmt(p.theta) << "," << fmt(p.dsigma) << ","
                         << fmt(p.coulomb_part) << ","
                         << fmt(p.interference_part) << "," << fmt(p.vp_part)
                         << "," << fmt(p.dsigma_amplitude) << ","
                         << fmt(p.dual_discrepancy) << "\n";
    } else {
        json j;
        j["config"] = json_config(o, "cross-section");
        j["config"]["k"] = k;
        j["config"]["delta0"] = delta0;
        j["config"]["a_C"] = a_C;
        j["results"] = json::array();
        for (const auto& p : rows) {
            j["results"].push_back({{"theta", p.theta},
                                    {"dsigma_printed", p.dsigma},
                                    {"coulomb", p.coulomb_part},
                                    {"interference", p.interference_part},
                                    {"vacuum_polarization", p.vp_part},
                                    {"dsigma_amplitude", p.dsigma_amplitude},
                                    {"dual_discrepancy", p.dual_discrepancy}});
        }
        out.stream() << j.dump(2) << "\n";
    }
    out.commit();
    return 0;
}

int run_cusp(const Options& o, double C_param, double f_param) {
    const PhysicalContext ctx = make_context(o);
    const auto rep = bound::modified_cusp(ctx.Q, C_param, f_param, ctx);
    json j;
    j["config"] = json_config(o, "cusp");
    j["config"]["C"] = C_param;
    j["config"]["f"] = f_param;
    j["results"] = {{"nu_coulomb", rep.nu_coulomb},
                    {"nu_modified", rep.nu_modified},
                    {"C_param", rep.C_param},
                    {"f_param", rep.f_param},
                    {"uehling_rel_correction", rep.uehling_rel_correction},
                    {"wk_abs_correction", rep.wk_abs_correction}};
    OutputFile out(o.output);
    out.stream() << j.dump(2) << "\n";
    out.commit();
    return 0;
}

int run_bound(const Options& o, int n, int ell, const std::string& mode,
              int grid_count, double rmax) {
    const PhysicalContext ctx = make_context(o);
    bound::NumerovGrid grid;
    grid.count = grid_count;
    grid.r_max = rmax;
    const auto pm = (mode == "total") ? bound::PotentialMode::total
                                      : bound::PotentialMode::coulomb;
    const auto res = bound::numerov_eigensolve(n, ell, ctx.Q, pm, grid, ctx);
    const auto st = bound::hydrogenic_state(n, ell, ctx.Q);
    const double pert = bound::perturbative_shift(st, bound::Shift::both, ctx);

    json j;
    j["config"] = json_config(o, "bound");
    j["config"]["n"] = n;
    j["config"]["ell"] = ell;
    j["config"]["mode"] = mode;
    j["config"]["grid_count"] = grid_count;
    j["results"] = {{"energy", res.energy},
                    {"nodes", res.nodes},
                    {"converged", res.converged},
                    {"hydrogenic_energy", st.energy},
                    {"perturbative_vp_shift", pert}};
    OutputFile out(o.output);
    out.stream() << j.dump(2) << "\n";
    out.commit();
    return 0;
}

int run_algebra(const Options& o, int ell, int N, double beta) {
    const auto rep = so21::build_generators(ell, N);
    const auto rpt = so21::verify_commutators(rep);
    const int interior = std::max(2, N - 8);
    const double haus = so21::hausdorff_residual(rep, beta, interior);

    json j;
    j["config"] = json_config(o, "algebra");
    j["config"]["ell"] = ell;
    j["config"]["N"] = N;
    j["config"]["beta"] = beta;
    j["results"] = {{"st_residual", rpt.st_residual},
                    {"tu_residual", rpt.tu_residual},
                    {"us_residual", rpt.us_residual},
                    {"casimir_residual", rpt.casimir_residual},
                    {"interior_block", rpt.interior},
                    {"hausdorff_residual", haus},
                    {"hausdorff_interior_block", interior}};
    j["results"]["energies"] = json::array();
    const PhysicalContext ctx = make_context(o);
    for (int n = 1; n <= 5; ++n)
        j["results"]["energies"].push_back(
            {{"n", n},
             {"E", so21::hydrogen_energy_from_algebra(ctx.Q, n)}});
    OutputFile out(o.output);
    out.stream() << j.dump(2) << "\n";
    out.commit();
    return 0;
}

int run_field(const Options& o, double rmin, double rmax, int count) {
    const PhysicalContext ctx = make_context(o);
    const double scale = (o.units == "alpha") ? ctx.alpha : 1.0;
    const auto grid = make_grid(rmin, rmax, count, o.spacing);

    struct Row {
        double r, y, residual, vp_slope, psi_prime;
    };
    const auto rows = util::parallel_map<Row>(
        grid.size(), o.threads, [&](std::size_t i) {
            Row row;
            row.r = grid[i] * scale;
            const auto c = field::appendix_coefficients(row.r, ctx);
            row.y = field::cardano_real_root(c);
            row.residual = field::cardano_residual(c, row.y);
            row.vp_slope = field::cardano_vp_slope(c);
            row.psi_prime = field::field_correction_psi_prime(row.r, ctx);
            return row;
        });

    OutputFile out(o.output);
    if (o.format == "csv") {
        csv_preamble(out.stream(), o, "field");
        out.stream() << "r,y,residual,vp_slope,psi_prime,source\n";
        for (const auto& row : rows)
            out.stream() << fmt(row.r) << "," << fmt(row.y) << ","
                         << fmt(row.residual) << "," << fmt(row.vp_slope)
                         << "," << fmt(row.psi_prime) << ",closed_form\n";
    } else {
        json j;
        j["config"] = json_config(o, "field");
        j["results"] = json::array();
        for (const auto& row : rows)
            j["results"].push_back({{"r", row.r},
                                    {"y", row.y},
                                    {"residual", row.residual},
                                    {"vp_slope", row.vp_slope},
                                    {"psi_prime", row.psi_prime}});
        out.stream() << j.dump(2) << "\n";
    }
    out.commit();
    return 0;
}

int run_typo_ledger(const Options& o, double kmin, double kmax, int count) {
    const PhysicalContext ctx = make_context(o);
    const double scale = (o.units == "alpha") ? 1.0 / ctx.alpha : 1.0;
    std::vector<double> ks;
    for (double k : make_grid(kmin, kmax, count, "log"))
        ks.push_back(k * scale);
    const auto ledger = ledger::build_typo_ledger(ctx, ks);
    OutputFile out(o.output);
    json j;
    j["config"] = json_config(o, "typo-ledger");
    j["typo_ledger"] = json::parse(ledger::to_json_string(ledger));
    out.stream() << j.dump(2) << "\n";
    out.commit();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vacuum-polarization-corrected two-point-charge interaction: "
                 "potentials, spectral functions, phases, cross-sections, "
                 "bound states, cusps, radial algebra, field equation"};
    app.require_subcommand(1);
    app.set_config("--config");

    Options o;
    app.add_option("--Q", o.Q, "nuclear charge number");
    double q1v = 0.0, q2v = 0.0;
    auto* q1o = app.add_option("--q1", q1v, "first particle charge (pair mode)");
    auto* q2o = app.add_option("--q2", q2v, "second particle charge (pair mode)");
    app.add_option("--alpha", o.alpha, "fine-structure constant");
    app.add_option("--output", o.output, "output path (default stdout)");
    app.add_option("--format", o.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--spacing", o.spacing, "log | linear")
        ->check(CLI::IsMember({"log", "linear"}));
    app.add_option("--units", o.units,
                   "au | alpha (grid values in Bohr radii or units of alpha)")
        ->check(CLI::IsMember({"au", "alpha"}));
    app.add_option("--threads", o.threads, "worker threads for grid rows");
    app.add_option("--rel-tol", o.rel_tol, "target relative tolerance");

    // potential
    double rmin = 1e-4, rmax = 30.0;
    int count = 200;
    auto* cmd_pot = app.add_subcommand("potential", "radial potential table");
    cmd_pot->add_option("--rmin", rmin, "grid minimum");
    cmd_pot->add_option("--rmax", rmax, "grid maximum");
    cmd_pot->add_option("--count", count, "grid points");

    // spectrum
    double kmin = 0.01, kmax = 20.0;
    int kcount = 100;
    auto* cmd_spec = app.add_subcommand("spectrum", "spectral function table");
    cmd_spec->add_option("--kmin", kmin, "wave number minimum");
    cmd_spec->add_option("--kmax", kmax, "wave number maximum");
    cmd_spec->add_option("--count", kcount, "grid points");

    // phase
    double k_phase = 1.0;
    int ell = 0;
    std::string component = "both";
    auto* cmd_phase =
        app.add_subcommand("phase", "variable-phase trajectory and shift");
    cmd_phase->add_option("--k", k_phase, "wave number (atomic units)");
    cmd_phase->add_option("--ell", ell, "partial wave");
    cmd_phase->add_option("--component", component, "uehling | wk | both")
        ->check(CLI::IsMember({"uehling", "wk", "both"}));

    // cross-section
    double k_cs = 1.0, delta0 = 0.0, a_C = 1.0, tmin = 0.1,
           tmax = 3.141592653589793;
    int tcount = 60;
    auto* cmd_cs = app.add_subcommand("cross-section",
                                      "interference differential cross-section");
    cmd_cs->add_option("--k", k_cs, "wave number");
    cmd_cs->add_option("--delta0", delta0, "vacuum-polarization phase");
    cmd_cs->add_option("--a-C", a_C, "Coulomb length parameter");
    cmd_cs->add_option("--theta-min", tmin, "smallest angle (rad)");
    cmd_cs->add_option("--theta-max", tmax, "largest angle (rad)");
    cmd_cs->add_option("--count", tcount, "grid points");

    // cusp
    double C_param = 1.0, f_param = 0.5;
    auto* cmd_cusp = app.add_subcommand("cusp", "regularized cusp report (JSON)");
    cmd_cusp->add_option("--C", C_param, "regularization constant");
    cmd_cusp->add_option("--f", f_param, "Wichmann-Kroll cusp factor");

    // bound
    int n_b = 1, ell_b = 0, grid_count = 20000;
    std::string mode = "coulomb";
    auto* cmd_bound =
        app.add_subcommand("bound", "Numerov eigenvalue report (JSON)");
    cmd_bound->add_option("--n", n_b, "principal quantum number");
    cmd_bound->add_option("--ell", ell_b, "angular momentum");
    cmd_bound->add_option("--mode", mode, "coulomb | total")
        ->check(CLI::IsMember({"coulomb", "total"}));
    cmd_bound->add_option("--grid-count", grid_count, "Numerov grid points");
    double bound_rmax = 0.0;
    cmd_bound->add_option("--rmax", bound_rmax,
                          "outer grid radius (0 = default 50 n^2/Q)");

    // algebra
    int ell_a = 0, N_a = 12;
    double beta = 0.1;
    auto* cmd_alg =
        app.add_subcommand("algebra", "radial-algebra residual report (JSON)");
    cmd_alg->add_option("--ell", ell_a, "angular momentum");
    cmd_alg->add_option("--N", N_a, "basis size");
    cmd_alg->add_option("--beta", beta, "Hausdorff scaling parameter");

    // field
    double f_rmin = 1.0, f_rmax = 1e4;
    int f_count = 50;
    auto* cmd_field =
        app.add_subcommand("field", "nonlinear field-equation root table");
    cmd_field->add_option("--rmin", f_rmin, "grid minimum");
    cmd_field->add_option("--rmax", f_rmax, "grid maximum");
    cmd_field->add_option("--count", f_count, "grid points");

    // typo-ledger
    double l_kmin = 0.1, l_kmax = 10.0;
    int l_count = 7;
    auto* cmd_ledger = app.add_subcommand(
        "typo-ledger", "adjudicated published-vs-oracle discrepancies (JSON)");
    cmd_ledger->add_option("--kmin", l_kmin,
                           "spectral sample minimum (units of 1/alpha)");
    cmd_ledger->add_option("--kmax", l_kmax,
                           "spectral sample maximum (units of 1/alpha)");
    cmd_ledger->add_option("--count", l_count, "spectral samples");

    for (auto* sub : {cmd_pot, cmd_spec, cmd_phase, cmd_cs, cmd_cusp,
                      cmd_bound, cmd_alg, cmd_field, cmd_ledger})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (q1o->count() != q2o->count()) {
        std::cerr << "error: --q1 and --q2 must be given together\n";
        return 2;
    }
    if (q1o->count()) {
        o.q1 = q1v;
        o.q2 = q2v;
    }

    try {
        if (cmd_pot->parsed())
            return run_potential(o, rmin, rmax, count);
        if (cmd_spec->parsed())
            return run_spectrum(o, kmin, kmax, kcount);
        if (cmd_phase->parsed())
            return run_phase(o, k_phase, ell, component);
        if (cmd_cs->parsed())
            return run_cross_section(o, k_cs, delta0, a_C, tmin, tmax, tcount);
        if (cmd_cusp->parsed())
            return run_cusp(o, C_param, f_param);
        if (cmd_bound->parsed())
            return run_bound(o, n_b, ell_b, mode, grid_count, bound_rmax);
        if (cmd_alg->parsed())
            return run_algebra(o, ell_a, N_a, beta);
        if (cmd_field->parsed())
            return run_field(o, f_rmin, f_rmax, f_count);
        if (cmd_ledger->parsed())
            return run_typo_ledger(o, l_kmin, l_kmax, l_count);
        std::cerr << "error: no command\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const RangeError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what()
                  << " (achieved " << e.achieved << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
