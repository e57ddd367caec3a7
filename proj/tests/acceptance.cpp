// One PASS/FAIL line per criterion.  `acceptance --only k` runs criterion k alone.

#include "fig8/aef.hpp"
#include "fig8/cli.hpp"
#include "fig8/jones.hpp"
#include "fig8/potentials.hpp"
#include "fig8/special_functions.hpp"
#include "fig8/turaev_viro.hpp"
#include "fig8/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace fig8;
using cplx = std::complex<double>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    // records a sub-check; failed ones are listed first in the detail
    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail = "[failed: " + what + "] " + detail;
        }
    }
    void note(const std::string& s) { detail += s + "; "; }
};

std::string fmt(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double vol() {
    PrecisionScope scope(256);
    return figure_eight_volume().to_double();
}

Outcome kashaev_volume() {
    Outcome o;
    PrecisionContext ctx = PrecisionContext{}.at_least(min_jones_bits(200));
    std::vector<double> g;
    for (int N : {50, 100, 200}) {
        JonesValue j = colored_jones_exact(RootSpec::kashaev(N), ctx);
        PrecisionScope scope(256);
        g.push_back((2 * M_PI / N) * j.log_form.log_mag.to_double());
    }
    o.note("rates " + fmt(g[0]) + " " + fmt(g[1]) + " " + fmt(g[2]) + " vs Vol " + fmt(vol()));
    o.check(g[0] < g[1] && g[1] < g[2], "strictly increasing");
    double dev = std::abs(g[2] / vol() - 1);
    o.note("N=200 off by " + fmt(100 * dev, 3) + "%");
    o.check(dev < 0.08, "N=200 within 8% of Vol");
    return o;
}

double ratio_error(AefKind k, const GridPoint& p, const PrecisionContext& ctx) {
    LogComplex e = exact_value(k, p, ctx);
    PrecisionScope scope(256);
    return abs((e / estimate_at(k, p).value).to_complex() - Complex(1L)).to_double();
}

Outcome kashaev_aef() {
    Outcome o;
    PrecisionContext ctx;
    double e50 = ratio_error(AefKind::kashaev, {0, 50}, ctx);
    double e200 = ratio_error(AefKind::kashaev, {0, 200}, ctx);
    o.note("|ratio-1| N=50 " + fmt(e50) + ", N=200 " + fmt(e200));
    o.check(e200 < 0.1, "N=200 below 0.1");
    o.check(e200 < e50, "smaller than at N=50");
    return o;
}

Outcome tv_aef() {
    Outcome o;
    PrecisionContext ctx;
    std::vector<double> lr;
    double rate401 = 0;
    for (int r : {101, 201, 401}) {
        TvResult tv = tv_invariant(r, ctx, 8);
        PrecisionScope scope(256);
        LogComplex q = tv.value / aef_tv(r).value;
        lr.push_back(std::hypot(q.log_mag.to_double(), q.arg.to_double()));
        if (r == 401) rate401 = tv.growth_rate.to_double();
    }
    o.note("|log ratio| " + fmt(lr[0]) + " " + fmt(lr[1]) + " " + fmt(lr[2]));
    o.check(lr[0] > lr[1] && lr[1] > lr[2], "|log ratio| strictly decreasing");
    double dev = std::abs(rate401 / vol() - 1);
    o.note("r=401 rate " + fmt(rate401) + " (" + fmt(100 * dev, 3) + "% off Vol)");
    o.check(dev < 0.05, "r=401 rate within 5% of Vol");
    return o;
}

Outcome contour_oracle() {
    Outcome o;
    PrecisionContext ctx;
    double worst = 0;
    for (int M : {3, 5, 8})
        for (double a : {0.5, 1.5})
            for (double u : {0.0, 0.3}) {
                RootSpec spec(M, a, u);
                PrecisionScope scope(256);
                Complex c = contour_jones(spec, ctx);
                Complex e = colored_jones_exact(spec, ctx).value;
                double rel = (abs(c - e) / abs(e)).to_double();
                worst = std::max(worst, rel);
                o.check(rel < 1e-5, "M=" + std::to_string(M) + " a=" + fmt(a) + " u=" + fmt(u));
            }
    o.note("worst relative difference " + fmt(worst));
    return o;
}

Outcome quantum_dilog_suite() {
    Outcome o;
    PrecisionContext ctx;
    double worst = 0;
    const int N = 10;
    cplx g = M_PI / (N + 0.5);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            cplx z(-2.5 + 5.0 * i / 9, -0.5 + 1.0 * j / 9);
            cplx lhs = (1.0 + std::exp(cplx(0, 1) * z)) * quantum_dilog(z + g, g, ctx);
            cplx rhs = quantum_dilog(z - g, g, ctx);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
    o.note("functional equation residual " + fmt(worst));
    o.check(worst < 1e-10, "functional equation on the 10x10 grid");
    for (int n : {5, 10, 20}) {
        cplx gn = M_PI / (n + 0.5);
        cplx half = quantum_dilog(gn, gn, ctx) / quantum_dilog(-gn, gn, ctx);
        cplx big = quantum_dilog(-M_PI + gn, gn, ctx) / quantum_dilog(M_PI - gn, gn, ctx);
        double eh = std::abs(half - 0.5), eb = std::abs(big / (n + 0.5) - 1.0);
        o.note("N=" + std::to_string(n) + ": |r-1/2| " + fmt(eh, 3) + ", |r/(N+1/2)-1| " + fmt(eb, 3));
        o.check(eh < 1e-8, "ratio 1/2 at N=" + std::to_string(n));
        o.check(eb < 1e-6, "ratio N+1/2 at N=" + std::to_string(n));
    }
    double ei = std::abs(cr_reference_integral(0.5) + 2 * std::log(2.0));
    o.note("reference integral error " + fmt(ei, 3));
    o.check(ei < 1e-8, "reference integral = -2 ln 2");
    return o;
}

Outcome saddle_constants() {
    Outcome o;
    PrecisionScope scope(256);
    const Real v2p = figure_eight_volume() / (2L * pi());
    const Real tps = 2L * pi() * sqrt(Real(3L));
    auto close = [&](const Complex& got, const Real& want, double tol, const std::string& what) {
        double d = abs(got - Complex(want)).to_double();
        o.note(what + " err " + fmt(d, 3));
        o.check(d < tol, what);
    };
    Real residual_worst(0L);
    auto solved = [&](const SaddleSolution& s) {
        if (s.residual > residual_worst) residual_worst = s.residual;
        return s;
    };

    PotentialFamily s1 = build_family(FamilySpec::limit_s(Real(1L)));
    close(s1.value(Complex(Real(5L) / 6L)), v2p, 1e-10, "Phi~(5/6) = Vol/2pi");
    solved(solve_saddle_quadratic(FamilySpec::limit_s(Real(1L))));
    Complex xi1 = xi_s(Real(1L));
    o.note("Xi(1) = " + fmt(xi1.re.to_double(), 12) + (xi1.im.is_zero() ? "" : "+i" + fmt(xi1.im.to_double())));
    close(xi1, tps, 1e-10, "Xi(1) = 2 pi sqrt3");
    PotentialFamily half = build_family(FamilySpec::limit_half(Real(0.5)));
    close(half.value(Complex(Real(1L) / 3L)), v2p, 1e-10, "chi(1/3) = Vol/2pi");
    solved(solve_saddle_half_at(Real(0.5)));
    close(Complex(psi_s(Real(0.5))), v2p, 1e-10, "Psi(1/2) = Vol/2pi");
    close(upsilon_s(Real(0.5)), tps, 1e-10, "Upsilon(1/2) = 2 pi sqrt3");

    Real h("1e-4");
    Complex tp = theta_s(1L + h), t0 = theta_s(Real(1L)), tm = theta_s(1L - h);
    Real d2 = abs(((tp - Complex(2L) * t0 + tm) / Complex(h * h)).re);
    Real d1 = abs(((tp - tm) / Complex(2L * h)).re);
    close(Complex(d2), tps, 1e-5, "|Re Theta''(1)| = 2 sqrt3 pi");
    o.note("|Re Theta'(1)| " + fmt(d1.to_double(), 3));
    o.check(d1 < Real(1e-6), "Re Theta'(1) = 0");

    for (auto [M, N] : {std::pair{190, 199}, {96, 99}, {395, 399}}) solved(solve_saddle_quadratic(FamilySpec::s_family(M, N)));
    for (auto [u, a, M] : {std::tuple{0.3, 0.5, 75}, {0.3, 1.5, 150}, {0.0, 0.5, 75}, {0.5, 0.0, 50}})
        solved(solve_saddle_quadratic(FamilySpec::fixed_a(u, a, M)));
    for (auto [M, N] : {std::pair{50, 99}, {100, 199}, {52, 99}}) solved(solve_saddle_half(M, N));
    o.note("worst saddle residual " + fmt(residual_worst.to_double(), 3));
    o.check(residual_worst < Real(1e-12), "saddle residuals below 1e-12");
    return o;
}

Outcome maximiser() {
    Outcome o;
    PrecisionScope scope(256);
    auto [k1, g1] = g_maximizer(RootSpec::from_MN(200, 200));
    auto [k2, g2] = g_maximizer(RootSpec::from_MN(100, 200));
    double x1 = k1 / 401.0, x2 = k2 / 401.0;
    o.note("k/(2N+1) = " + fmt(x1) + " and " + fmt(x2));
    o.check(std::abs(x1 - 5.0 / 12) < 0.01, "(200,200) near 5/12");
    o.check(std::abs(x2 - 1.0 / 6) < 0.01, "(100,200) near 1/6");
    Real target = figure_eight_volume() / (4L * pi());
    double b1 = abs(growth_rate_bound(Real(0.5), Real(5L) / 12L) - target).to_double();
    double b2 = abs(growth_rate_bound(Real(0.25), Real(1L) / 6L) - target).to_double();
    o.note("bound errors " + fmt(b1, 3) + " " + fmt(b2, 3));
    o.check(b1 < 1e-10 && b2 < 1e-10, "bound = Vol/4pi at the equality points");
    return o;
}

Outcome window_dominance() {
    Outcome o;
    PrecisionContext ctx;
    WindowReport w = window_dominance_report(201, ctx, 0.05, 0.05, 8);
    PrecisionScope scope(256);
    Real h = Real(static_cast<long>(w.N)) + 0.5;
    double target = log(4L * h * h).to_double();
    double emp = w.empirical_ratio_log.to_double();
    o.note("log sums: s~1 " + fmt(w.near_one.log_mag.to_double()) + ", s~1/2 " + fmt(w.near_half.log_mag.to_double()) +
           ", bulk " + fmt(w.bulk.log_mag.to_double()));
    o.note("log window ratio " + fmt(emp) + " vs log 4(N+1/2)^2 = " + fmt(target));
    o.check(w.near_one.log_mag > w.near_half.log_mag, "s~1 sum exceeds s~1/2 sum");
    o.check(w.bulk.log_mag < w.near_one.log_mag && w.bulk.log_mag < w.near_half.log_mag, "bulk below both");
    o.check(std::abs(emp - target) < std::log(3.0), "ratio within a factor 3 of 4(N+1/2)^2");
    return o;
}

std::string cli_output(RunConfig c, unsigned workers) {
    c.workers = workers;
    std::ostringstream out, err;
    int st = run(c, out, err);
    return std::to_string(st) + "\n" + out.str() + err.str();
}

Outcome properties() {
    Outcome o;
    PrecisionContext ctx;
    PrecisionScope scope(256);
    Real h("1e-20");
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        double t = 0.3 + 0.31 * k;
        Complex z(Real(1.7 * std::cos(t) - 0.2), Real(1.3 * std::sin(t)));
        Complex fd = (dilog(z + Complex(h)) - dilog(z - Complex(h))) / Complex(2L * h);
        worst = std::max(worst, abs(fd + log(Complex(1L) - z) / z).to_double());
    }
    o.note("dilog derivative error " + fmt(worst, 3));
    o.check(worst < 10 * ctx.quad_tol, "dilog derivative at 20 points");

    double odd = 0, per = 0, lob = 0;
    for (double t : {0.1, 0.7, 1.9, 3.0, 5.5, -2.2}) {
        Real th(t);
        odd = std::max(odd, abs(clausen(th) + clausen(-th)).to_double());
        per = std::max(per, abs(clausen(th) - clausen(th + 2L * pi())).to_double());
        lob = std::max(lob, abs(clausen(th) - 2L * lobachevsky(th / 2L)).to_double());
    }
    o.note("clausen odd " + fmt(odd, 3) + ", periodic " + fmt(per, 3) + ", Cl2-2Lambda " + fmt(lob, 3));
    o.check(odd < 1e-60 && per < 1e-60, "clausen oddness and periodicity");
    o.check(lob < 1e-12, "Cl2 = 2 Lambda");

    double conj_err = 0;
    for (int M : {3, 8, 21, 40}) {
        Complex q = RootSpec(M, 0.7, 0.25).q();
        Complex j = colored_jones_at(M, q, ctx).value;
        Complex jc = colored_jones_at(M, conj(q), ctx).value;
        conj_err = std::max(conj_err, (abs(jc - conj(j)) / abs(j)).to_double());
    }
    o.note("conjugation error " + fmt(conj_err, 3));
    o.check(conj_err < 1e-50, "J(conj q) = conj J(q)");

    RunConfig sweep;
    sweep.command = Command::sweep;
    sweep.estimate = "tv";
    sweep.r = {101, 151, 201};
    RunConfig tv;
    tv.command = Command::tv;
    tv.r = {99, 121};
    tv.format = OutputFormat::json;
    RunConfig kas;
    kas.command = Command::sweep;
    kas.estimate = "kashaev";
    kas.N = {30, 60, 90, 120};
    bool same = true;
    for (const RunConfig& c : {sweep, tv, kas}) same = same && cli_output(c, 1) == cli_output(c, 8);
    o.note(std::string("CLI output at 1 and 8 workers ") + (same ? "identical" : "differs"));
    o.check(same, "byte-identical output across worker counts");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> body;
    double time_limit;  // seconds, 0 for none
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> all = {
        {1, "Kashaev growth rate tends to the volume", kashaev_volume, 2},
        {2, "Kashaev asymptotic formula", kashaev_aef, 2},
        {3, "Turaev-Viro exact vs asymptotic", tv_aef, 60},
        {4, "contour integral equals the Habiro sum", contour_oracle, 0},
        {5, "quantum dilogarithm identities", quantum_dilog_suite, 0},
        {6, "saddle and potential constants", saddle_constants, 0},
        {7, "maximiser of the g product", maximiser, 0},
        {8, "window dominance at r = 201", window_dominance, 0},
        {9, "property suite", properties, 0},
    };

    int failures = 0;
    for (const Criterion& c : all) {
        if (only && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("[threw: ") + e.what() + "] ";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit > 0) o.check(secs < c.time_limit, "runtime under " + fmt(c.time_limit) + " s");
        std::printf("criterion %d %s (%.2f s) %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, c.title,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
