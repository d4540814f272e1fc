#include "vpol/coulomb_waves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "vpol/errors.hpp"
#include "vpol/ode.hpp"
#include "vpol/special_functions.hpp"

namespace vpol::coulomb {

namespace {

using cplx = std::complex<double>;
constexpr double pi = 3.141592653589793238462643383279503;

void check_range(const CoulombParams& p) {
    if (!(p.rho > 0.0))
        throw DomainError("coulomb: requires rho > 0");
    if (p.ell < 0)
        throw DomainError("coulomb: requires ell >= 0");
    if (p.ell > ell_max || std::abs(p.eta) > eta_max || p.rho > rho_max)
        throw RangeError("coulomb: outside declared working range "
                         "(ell <= 10, |eta| <= 20, rho <= 200)");
}

// q(rho) in w'' = q w.
inline double ode_q(int ell, double eta, double rho) {
    return ell * (ell + 1.0) / (rho * rho) + 2.0 * eta / rho - 1.0;
}

// Outer classical turning point: rho^2 - 2 eta rho - l(l+1) = 0.
double turning_point(int ell, double eta) {
    return eta + std::sqrt(eta * eta + ell * (ell + 1.0));
}

struct HPlus {
    cplx H, Hp;
    bool ok = false;
};

// H+ = G + iF from the large-rho expansion
//   H+ = e^{i theta} sum_k c_k x^{-k},
//   c_{k+1} = c_k (k+1+l+i eta)(k-l+i eta) / (2 i (k+1)),
//   theta = x - eta ln(2x) - l pi/2 + sigma_l,
// summed to its smallest term.
HPlus h_plus_asymptotic(int ell, double eta, double x) {
    const cplx ieta(0.0, eta);
    cplx term = 1.0, sum = 1.0, dsum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    double max_term = 1.0;
    bool ok = false;
    for (int k = 0; k < 300; ++k) {
        term *= (double(k + 1 + ell) + ieta) * (double(k - ell) + ieta) /
                (cplx(0.0, 2.0 * (k + 1)) * x);
        const double mag = std::abs(term);
        if (mag >= prev)
            break;
        sum += term;
        dsum += -double(k + 1) * term / x;
        prev = mag;
        max_term = std::max(max_term, mag);
        if (mag <= 3e-15 * std::abs(sum)) {
            ok = true;
            break;
        }
    }
    HPlus h;
    h.ok = (ok || prev <= 5e-14 * std::abs(sum)) &&
           max_term <= 300.0 * std::abs(sum); // cancellation guard

    const double sigma = coulomb_sigma(ell, eta);
    const double theta = x - eta * std::log(2.0 * x) - 0.5 * ell * pi + sigma;
    const cplx phase(std::cos(theta), std::sin(theta));
    h.H = phase * sum;
    h.Hp = phase * (cplx(0.0, 1.0) * (1.0 - eta / x) * sum + dsum);
    return h;
}

struct SeriesFG {
    double F = 0.0, Fp = 0.0;
    double cancellation = 0.0;
};

// Regular solution by the power series F = C_l rho^{l+1} sum B_m rho^m,
//   B_{m+1} = (2 eta B_m - B_{m-1}) / ((m+1)(m+2l+2)).
SeriesFG f_series(int ell, double eta, double rho) {
    double b_prev = 0.0, b = 1.0;
    double phi = 1.0, dphi = double(ell + 1);
    double maxterm = 1.0;
    double rp = 1.0;
    int settled = 0;
    for (int m = 0; m < 500; ++m) {
        const double b_next =
            (2.0 * eta * b - b_prev) / ((m + 1.0) * (m + 2.0 * ell + 2.0));
        b_prev = b;
        b = b_next;
        rp *= rho;
        const double t = b * rp;
        phi += t;
        dphi += (ell + 2.0 + m) * t;
        maxterm = std::max(maxterm, std::abs(t));
        // two consecutive negligible terms (odd/even terms can vanish)
        if (std::abs(t) * (ell + 2.0 + m) < 1e-17 * std::abs(phi) && m > 3) {
            if (++settled >= 2)
                break;
        } else {
            settled = 0;
        }
    }
    const double c = cl_normalization(ell, eta);
    const double rl = std::pow(rho, ell);
    SeriesFG out;
    out.F = c * rl * rho * phi;
    out.Fp = c * rl * dphi;
    out.cancellation = maxterm / std::max(std::abs(phi), 1e-300);
    return out;
}

// F'/F by continued fraction (Lentz).  From the ladder recurrences,
//   f_l = S_{l+1} - R_{l+1}^2 / (S_{l+1} + S_{l+2} - R_{l+2}^2 / (...)).
double cf1(int ell, double eta, double rho) {
    auto S = [&](double lam) { return lam / rho + eta / lam; };
    auto R2 = [&](double lam) { return 1.0 + eta * eta / (lam * lam); };
    const double tiny = 1e-290;
    double f = S(ell + 1.0);
    if (f == 0.0)
        f = tiny;
    double C = f, D = 0.0;
    for (int n = 1; n < 100000; ++n) {
        const double a = -R2(ell + double(n));
        const double b = S(ell + double(n)) + S(ell + double(n) + 1.0);
        D = b + a * D;
        if (D == 0.0)
            D = tiny;
        C = b + a / C;
        if (C == 0.0)
            C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15)
            return f;
    }
    throw ConvergenceError("coulomb: CF1 did not converge", 0.0);
}

// Inward integration of columns of w'' = q w.
template <std::size_t N, class Cb>
ode::State<N> propagate_inward(int ell, double eta, double from, double to,
                               ode::State<N> y, double h_max, Cb&& cb) {
    auto rhs = [&](double rho, const ode::State<N>& s, ode::State<N>& d) {
        const double q = ode_q(ell, eta, rho);
        for (std::size_t j = 0; j < N; j += 2) {
            d[j] = s[j + 1];
            d[j + 1] = q * s[j];
        }
    };
    ode::Options opt;
    opt.rtol = 2e-14;
    opt.atol = 1e-280;
    opt.h_max = h_max;
    return ode::integrate<N>(rhs, from, y, to, opt, cb);
}

double anchor_point(int ell, double eta) {
    return 36.0 + 2.7 * std::abs(eta) + 0.5 * ell;
}

struct NoStep {
    template <std::size_t N>
    void operator()(double, const ode::State<N>&, double,
                    const ode::State<N>&) const {}
};

} // namespace

double sommerfeld_eta(double q1q2, double m1, double m2, double k,
                      EtaConvention conv) {
    if (!(k > 0.0))
        throw DomainError("sommerfeld_eta: requires k > 0");
    if (!(m1 > 0.0) || !(m2 > 0.0))
        throw DomainError("sommerfeld_eta: requires positive masses");
    const double mu = m1 * m2 / (m1 + m2);
    if (conv == EtaConvention::conventional)
        return mu * q1q2 / k;
    const double arg = mu * q1q2 / k;
    if (arg < 0.0)
        throw DomainError("sommerfeld_eta: as-published form takes the square "
                          "root of a negative combination for attractive "
                          "charges");
    return std::sqrt(arg);
}

double sommerfeld_eta_infinite_mass(double Q, double k, EtaConvention conv) {
    if (!(k > 0.0))
        throw DomainError("sommerfeld_eta_infinite_mass: requires k > 0");
    if (conv == EtaConvention::conventional)
        return -Q / k; // electron (charge -1) on nucleus Q, reduced mass 1
    if (Q < 0.0)
        throw DomainError("sommerfeld_eta_infinite_mass: as-published form "
                          "undefined for Q < 0");
    return std::sqrt(Q / k);
}

double coulomb_sigma(int ell, double eta) {
    return sf::log_gamma(cplx(ell + 1.0, eta)).imag();
}

double cl_normalization(int ell, double eta) {
    const double lg_num = sf::log_gamma(cplx(ell + 1.0, eta)).real();
    const double lg_den = sf::log_gamma(cplx(2.0 * ell + 2.0, 0.0)).real();
    return std::exp(ell * std::log(2.0) - 0.5 * pi * eta + lg_num - lg_den);
}

std::complex<double> cl_normalization_as_published(int ell, double eta) {
    const double lg_num = sf::log_gamma(cplx(ell + 1.0, eta)).real();
    const double lg_den = sf::log_gamma(cplx(2.0 * ell + 2.0, 0.0)).real();
    const double mag = std::exp(ell * std::log(2.0) + lg_num - lg_den);
    return mag * std::exp(cplx(0.0, -0.5 * eta));
}

FG coulomb_fg(const CoulombParams& p) {
    check_range(p);
    const int ell = p.ell;
    const double eta = p.eta, rho = p.rho;

    // asymptotic expansion directly at rho when it already converges
    {
        const HPlus direct = h_plus_asymptotic(ell, eta, rho);
        if (direct.ok) {
            FG out;
            out.G = direct.H.real();
            out.F = direct.H.imag();
            out.Gp = direct.Hp.real();
            out.Fp = direct.Hp.imag();
            return out;
        }
    }

    double x = std::max(anchor_point(ell, eta), rho * 1.000001);
    HPlus a = h_plus_asymptotic(ell, eta, x);
    for (int tries = 0; !a.ok && tries < 40; ++tries) {
        x *= 1.25;
        a = h_plus_asymptotic(ell, eta, x);
    }
    if (!a.ok)
        throw ConvergenceError("coulomb: asymptotic anchor not reached", 0.0);

    const double tp = turning_point(ell, eta);
    const double rho_sw = std::max(rho, tp > 0.0 ? 1.02 * tp + 1e-12 : 0.0);

    ode::State<4> y{a.H.imag(), a.Hp.imag(), a.H.real(), a.Hp.real()};
    y = propagate_inward<4>(ell, eta, x, rho_sw, y, 0.25, NoStep{});

    if (rho_sw <= rho) {
        return FG{y[0], y[1], y[2], y[3]};
    }

    // below the turning point: G is the inward-growing (stable) solution
    ode::State<2> g{y[2], y[3]};
    g = propagate_inward<2>(ell, eta, rho_sw, rho, g, 0.25, NoStep{});

    FG out;
    out.G = g[0];
    out.Gp = g[1];
    const SeriesFG s = f_series(ell, eta, rho);
    if (s.cancellation < 1e3) {
        out.F = s.F;
        out.Fp = s.Fp;
    } else {
        const double f = cf1(ell, eta, rho);
        out.F = 1.0 / (f * out.G - out.Gp);
        out.Fp = f * out.F;
    }
    return out;
}

double coulomb_f(const CoulombParams& p) { return coulomb_fg(p).F; }
double coulomb_f_prime(const CoulombParams& p) { return coulomb_fg(p).Fp; }
double coulomb_g(const CoulombParams& p) { return coulomb_fg(p).G; }
double coulomb_g_prime(const CoulombParams& p) { return coulomb_fg(p).Gp; }

std::complex<double> coulomb_f_hyp1f1(const CoulombParams& p,
                                      const EvalAccuracy& acc) {
    check_range(p);
    if (2.0 * p.rho > 40.0)
        throw RangeError("coulomb_f_hyp1f1: series cancellation beyond "
                         "2 rho = 40 destroys double precision");
    const cplx a(p.ell + 1.0, -p.eta);
    const cplx b(2.0 * p.ell + 2.0, 0.0);
    const cplx z(0.0, 2.0 * p.rho);
    const cplx m = sf::hyp1f1(a, b, z, acc);
    const double c = cl_normalization(p.ell, p.eta);
    const cplx eirho(std::cos(p.rho), -std::sin(p.rho));
    return c * std::pow(p.rho, p.ell + 1) * eirho * m;
}

double coulomb_f_logderiv(const CoulombParams& p) {
    check_range(p);
    return cf1(p.ell, p.eta, p.rho);
}

FgTable::FgTable(int ell, double eta, double rho_min, double rho_max_t)
    : ell_(ell), eta_(eta), rho_lo_(rho_min), rho_hi_(rho_max_t) {
    if (!(rho_min > 0.0) || !(rho_max_t > rho_min))
        throw DomainError("FgTable: requires 0 < rho_min < rho_max");
    CoulombParams probe{ell, eta, rho_max_t};
    check_range(probe);

    double x = std::max(anchor_point(ell, eta), rho_max_t * 1.000001);
    HPlus a = h_plus_asymptotic(ell, eta, x);
    for (int tries = 0; !a.ok && tries < 40; ++tries) {
        x *= 1.25;
        a = h_plus_asymptotic(ell, eta, x);
    }
    if (!a.ok)
        throw ConvergenceError("FgTable: asymptotic anchor not reached", 0.0);

    const double tp = turning_point(ell, eta);
    const double rho_sw =
        std::max(rho_min, tp > 0.0 ? 1.02 * tp + 1e-12 : 0.0);

    std::vector<Node> rev;
    rev.push_back({x, a.H.imag(), a.Hp.imag(), a.H.real(), a.Hp.real()});

    auto cb4 = [&](double, const ode::State<4>&, double t,
                   const ode::State<4>& yn) {
        rev.push_back({t, yn[0], yn[1], yn[2], yn[3]});
    };
    ode::State<4> y{a.H.imag(), a.Hp.imag(), a.H.real(), a.Hp.real()};
    y = propagate_inward<4>(ell, eta, x, rho_sw, y, 0.08, cb4);

    if (rho_sw > rho_min) {
        auto cb2 = [&](double, const ode::State<2>&, double t,
                       const ode::State<2>& yn) {
            const SeriesFG s = f_series(ell_, eta_, t);
            rev.push_back({t, s.F, s.Fp, yn[0], yn[1]});
        };
        ode::State<2> g{y[2], y[3]};
        auto h_max_ctl = std::min(0.04, rho_sw / 3.0);
        g = propagate_inward<2>(ell, eta, rho_sw, rho_min, g, h_max_ctl, cb2);
    }

    nodes_.assign(rev.rbegin(), rev.rend());
    // drop any region far above what was asked for (keep one spare node)
    while (nodes_.size() > 2 && nodes_[nodes_.size() - 2].rho > rho_max_t)
        nodes_.pop_back();
}

FG FgTable::eval(double rho) const {
    if (rho < nodes_.front().rho * (1.0 - 1e-12) ||
        rho > nodes_.back().rho * (1.0 + 1e-12))
        throw RangeError("FgTable::eval: rho outside tabulated range");
    rho = std::clamp(rho, nodes_.front().rho, nodes_.back().rho);
    auto it = std::lower_bound(
        nodes_.begin(), nodes_.end(), rho,
        [](const Node& n, double v) { return n.rho < v; });
    if (it == nodes_.begin())
        ++it;
    const Node& n1 = *it;
    const Node& n0 = *(it - 1);

    const double h = n1.rho - n0.rho;
    const double t = (rho - n0.rho) / h;
    const double q0 = ode_q(ell_, eta_, n0.rho);
    const double q1 = ode_q(ell_, eta_, n1.rho);

    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    // two-point quintic Hermite basis (value, first, second derivatives)
    const double H0 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
    const double H1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
    const double H2 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
    const double H3 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    const double H4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
    const double H5 = 0.5 * (t3 - 2.0 * t4 + t5);
    const double dH0 = (-30.0 * t2 + 60.0 * t3 - 30.0 * t4) / h;
    const double dH1 = 1.0 - 18.0 * t2 + 32.0 * t3 - 15.0 * t4;
    const double dH2 = 0.5 * (2.0 * t - 9.0 * t2 + 12.0 * t3 - 5.0 * t4);
    const double dH3 = (30.0 * t2 - 60.0 * t3 + 30.0 * t4) / h;
    const double dH4 = -12.0 * t2 + 28.0 * t3 - 15.0 * t4;
    const double dH5 = 0.5 * (3.0 * t2 - 8.0 * t3 + 5.0 * t4);

    auto interp = [&](double f0, double fp0, double f1, double fp1,
                      double* deriv) {
        const double fpp0 = q0 * f0, fpp1 = q1 * f1;
        const double val = f0 * H0 + h * fp0 * H1 + h * h * fpp0 * H2 +
                           f1 * H3 + h * fp1 * H4 + h * h * fpp1 * H5;
        *deriv = f0 * dH0 + fp0 * dH1 + h * fpp0 * dH2 + f1 * dH3 +
                 fp1 * dH4 + h * fpp1 * dH5;
        return val;
    };

    FG out;
    out.F = interp(n0.F, n0.Fp, n1.F, n1.Fp, &out.Fp);
    out.G = interp(n0.G, n0.Gp, n1.G, n1.Gp, &out.Gp);
    return out;
}

} // namespace vpol::coulomb
