#include "fig8/cli.hpp"

#include "fig8/aef.hpp"
#include "fig8/errors.hpp"
#include "fig8/jones.hpp"
#include "fig8/potentials.hpp"
#include "fig8/special_functions.hpp"
#include "fig8/turaev_viro.hpp"
#include "fig8/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

namespace fig8 {

namespace {

using Cell = std::variant<long, double, std::string, Real, Complex, LogComplex>;

struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<Cell>> rows;
};

std::string fmt_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

struct Printer {
    int digits;

    std::string real(const Real& x) const {
        if (x.is_inf()) return x.sign() > 0 ? "inf" : "-inf";
        if (x.is_zero()) return "0";
        return x.str(digits);
    }

    void csv_header(std::ostream& os, const Table& t) const {
        for (std::size_t i = 0; i < t.names.size(); ++i) {
            if (i) os << ',';
            const std::string& n = t.names[i];
            const Cell* c = t.rows.empty() ? nullptr : &t.rows.front()[i];
            if (c && std::holds_alternative<Complex>(*c))
                os << n << "_re," << n << "_im";
            else if (c && std::holds_alternative<LogComplex>(*c))
                os << n << "_log_mag," << n << "_arg";
            else
                os << n;
        }
        os << '\n';
    }

    void csv_cell(std::ostream& os, const Cell& c) const {
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, long>) os << v;
                else if constexpr (std::is_same_v<T, double>) os << fmt_double(v);
                else if constexpr (std::is_same_v<T, std::string>) os << v;
                else if constexpr (std::is_same_v<T, Real>) os << real(v);
                else if constexpr (std::is_same_v<T, Complex>) os << real(v.re) << ',' << real(v.im);
                else os << real(v.log_mag) << ',' << real(v.arg);
            },
            c);
    }

    void csv(std::ostream& os, const Table& t) const {
        csv_header(os, t);
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                csv_cell(os, row[i]);
            }
            os << '\n';
        }
    }

    nlohmann::ordered_json json_cell(const Cell& c) const {
        return std::visit(
            [&](const auto& v) -> nlohmann::ordered_json {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, long> || std::is_same_v<T, double> || std::is_same_v<T, std::string>) {
                    return v;
                } else if constexpr (std::is_same_v<T, Real>) {
                    return real(v);
                } else if constexpr (std::is_same_v<T, Complex>) {
                    return {{"re", real(v.re)}, {"im", real(v.im)}};
                } else {
                    nlohmann::ordered_json j = {{"log_mag", real(v.log_mag)}, {"arg_mod_2pi", real(v.arg)}};
                    // binary64 range; beyond it only the log form is meaningful to most readers
                    if (!v.is_zero() && abs(v.log_mag) < Real(700L)) {
                        Complex z = v.to_complex();
                        j["decimal"] = {{"re", real(z.re)}, {"im", real(z.im)}};
                    } else if (v.is_zero()) {
                        j["decimal"] = {{"re", "0"}, {"im", "0"}};
                    } else {
                        j["decimal"] = nullptr;
                    }
                    return j;
                }
            },
            c);
    }

    void json(std::ostream& os, const Table& t) const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i) obj[t.names[i]] = json_cell(row[i]);
            arr.push_back(std::move(obj));
        }
        os << arr.dump(2) << '\n';
    }
};

int max_colour(const RunConfig& c) {
    int m = 0;
    for (int x : c.M) m = std::max(m, x);
    for (int x : c.N) m = std::max(m, x);
    for (int x : c.r) m = std::max(m, (x - 1) / 2);
    return m;
}

std::vector<int> or_default(const std::vector<int>& v, std::vector<int> d) { return v.empty() ? d : v; }

// M values paired with N: broadcast a single entry, zip equal lengths, or M = N - offset.
std::vector<std::pair<int, int>> pairs_MN(const RunConfig& c) {
    std::vector<std::pair<int, int>> out;
    if (c.M_offset) {
        for (int n : c.N) out.emplace_back(n - *c.M_offset, n);
        return out;
    }
    if (c.M.empty() || c.N.empty()) throw ConfigError("need --M and --N (or --M-offset with --N)");
    std::size_t n = std::max(c.M.size(), c.N.size());
    if (!(c.M.size() == n || c.M.size() == 1) || !(c.N.size() == n || c.N.size() == 1))
        throw ConfigError("--M and --N lists must have equal length or length 1");
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(c.M[c.M.size() == 1 ? 0 : i], c.N[c.N.size() == 1 ? 0 : i]);
    return out;
}

std::vector<GridPoint> build_grid(AefKind kind, const RunConfig& c) {
    std::vector<GridPoint> g;
    auto need = [](const std::vector<int>& v, const char* flag) {
        if (v.empty()) throw ConfigError(std::string("this estimate needs ") + flag);
    };
    switch (kind) {
    case AefKind::kashaev:
    case AefKind::murakami:
        need(c.N, "--N");
        for (int n : c.N) g.push_back({0, n, 0, c.u, 0.0});
        break;
    case AefKind::fixed_a:
    case AefKind::fixed_a_u0:
        need(c.M, "--M");
        for (int m : c.M) g.push_back({m, 0, 0, c.u, c.a});
        break;
    case AefKind::s_near_one:
    case AefKind::half_bound:
        for (auto [m, n] : pairs_MN(c)) g.push_back({m, n, 0, 0.0, 0.0});
        break;
    case AefKind::tv:
        need(c.r, "--r");
        for (int r : c.r) g.push_back({0, 0, r, 0.0, 0.0});
        break;
    }
    return g;
}

void push_params(std::vector<std::string>& names, std::vector<Cell>& row, const SweepRow& s, bool with_names) {
    for (const auto& [k, v] : s.params) {
        if (with_names) names.push_back(k);
        if (v == static_cast<double>(static_cast<long>(v)) && k != "u" && k != "a")
            row.emplace_back(static_cast<long>(v));
        else
            row.emplace_back(v);
    }
}

Table cmd_jones(const RunConfig& c, const PrecisionContext& ctx) {
    if (c.M.empty()) throw ConfigError("jones needs --M");
    Table t;
    t.names = {"M", "N", "a", "u", "J", "polar", "terms"};
    for (std::size_t i = 0; i < c.M.size(); ++i) {
        int M = c.M[i];
        PrecisionScope scope(ctx.precision_bits);
        JonesValue j;
        long N = -1;
        double a = c.a, u = c.u;
        if (!c.N.empty()) {
            N = c.N[c.N.size() == 1 ? 0 : std::min(i, c.N.size() - 1)];
            if (N < 1) throw ConfigError("--N must be positive");
            Real order = Real(N) + (c.half_root ? 0.5 : 0.0);
            j = colored_jones_at(M, exp(Complex(Real(0L), 2L * pi() / order)), ctx);
            a = order.to_double() - M;
            u = 0.0;
        } else {
            j = colored_jones_exact(RootSpec(M, c.a, c.u), ctx);
        }
        t.rows.push_back({static_cast<long>(M), N, a, u, j.value, j.log_form, static_cast<long>(j.term_count)});
    }
    return t;
}

Table cmd_tv(const RunConfig& c, const PrecisionContext& ctx) {
    if (c.r.empty()) throw ConfigError("tv needs --r");
    Table t;
    t.names = {"r", "TV", "growth_rate", "deviation", "near_one", "near_half", "bulk"};
    PrecisionScope scope(ctx.precision_bits);
    Real vol = figure_eight_volume();
    for (int r : c.r) {
        TvResult tv = tv_invariant(r, c.zeta, c.delta, ctx, c.workers);
        t.rows.push_back({static_cast<long>(r), tv.value, tv.growth_rate, Real(tv.growth_rate - vol), tv.near_one,
                          tv.near_half, tv.bulk});
    }
    return t;
}

AefKind kind_of(const RunConfig& c) {
    if (c.estimate.empty()) throw ConfigError("need --estimate");
    return parse_aef_kind(c.estimate);
}

Table cmd_aef(const RunConfig& c, const PrecisionContext& ctx) {
    AefKind kind = kind_of(c);
    Table t;
    bool first = true;
    PrecisionScope scope(ctx.precision_bits);
    for (const GridPoint& p : build_grid(kind, c)) {
        AsymptoticEstimate e = estimate_at(kind, p, c.zeta, c.delta);
        SweepRow dummy;
        std::vector<Cell> row;
        switch (kind) {
        case AefKind::kashaev: dummy.params = {{"N", p.N}}; break;
        case AefKind::murakami: dummy.params = {{"u", p.u}, {"N", p.N}}; break;
        case AefKind::fixed_a: dummy.params = {{"u", p.u}, {"a", p.a}, {"M", p.M}}; break;
        case AefKind::fixed_a_u0: dummy.params = {{"a", p.a}, {"M", p.M}}; break;
        case AefKind::s_near_one:
        case AefKind::half_bound: dummy.params = {{"M", p.M}, {"N", p.N}}; break;
        case AefKind::tv: dummy.params = {{"r", p.r}}; break;
        }
        push_params(t.names, row, dummy, first);
        if (first) t.names.insert(t.names.end(), {"prefactor", "exponent", "value"});
        row.insert(row.end(), {e.prefactor, e.exponent, e.value});
        t.rows.push_back(std::move(row));
        first = false;
    }
    return t;
}

Table cmd_sweep(const RunConfig& c, const PrecisionContext& ctx) {
    AefKind kind = kind_of(c);
    std::vector<SweepRow> rows = ratio_sweep(kind, build_grid(kind, c), ctx, c.workers, c.zeta, c.delta);
    Table t;
    bool first = true;
    for (const SweepRow& s : rows) {
        std::vector<Cell> row;
        push_params(t.names, row, s, first);
        if (first) t.names.insert(t.names.end(), {"exact", "estimate", "log_ratio", "arg_ratio"});
        row.insert(row.end(), {s.exact, s.estimate, s.column("log_ratio"), s.column("arg_ratio")});
        t.rows.push_back(std::move(row));
        first = false;
    }
    return t;
}

Table cmd_saddle(const RunConfig& c, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.precision_bits);
    Table t;
    t.names = {"family", "M", "N", "s", "z", "omega", "value", "second_derivative", "residual", "branch"};
    auto add = [&](const std::string& fam, long M, long N, const Real& s, const SaddleSolution& sol) {
        t.rows.push_back({fam, M, N, s, sol.z, sol.omega, sol.potential_value, sol.second_derivative, sol.residual,
                          std::string(branch_name(sol.branch))});
    };
    const std::string fam = c.family.empty() ? "s" : c.family;
    if (fam == "s" || fam == "half") {
        bool half = fam == "half";
        if (c.s) {
            Real s(*c.s);
            add(fam, -1, -1, s, half ? solve_saddle_half_at(s, c.delta) : solve_saddle_quadratic(FamilySpec::limit_s(s)));
        } else {
            for (auto [m, n] : pairs_MN(c)) {
                Real s = Real(static_cast<long>(m)) / (Real(static_cast<long>(n)) + 0.5);
                add(fam, m, n, s, half ? solve_saddle_half(m, n, c.delta) : solve_saddle_quadratic(FamilySpec::s_family(m, n)));
            }
        }
    } else if (fam == "fixed_a") {
        if (c.M.empty()) throw ConfigError("saddle --family fixed_a needs --M");
        for (int m : c.M) add(fam, m, -1, Real(0L), solve_saddle_quadratic(FamilySpec::fixed_a(c.u, c.a, m)));
    } else {
        throw ConfigError("unknown family '" + fam + "' (s, half, fixed_a)");
    }
    return t;
}

Table cmd_verify(const RunConfig& c, const PrecisionContext& ctx) {
    const std::string suite = c.suite.empty() ? "contour" : c.suite;
    Table t;
    PrecisionScope scope(ctx.precision_bits);
    if (suite == "contour") {
        t.names = {"M", "a", "u", "contour", "exact", "rel_diff"};
        std::vector<int> Ms = or_default(c.M, {3, 5, 8});
        std::vector<double> as = c.M.empty() ? std::vector<double>{0.5, 1.5} : std::vector<double>{c.a};
        std::vector<double> us = c.M.empty() ? std::vector<double>{0.0, 0.3} : std::vector<double>{c.u};
        for (int M : Ms)
            for (double a : as)
                for (double u : us) {
                    RootSpec spec(M, a, u);
                    Complex v = contour_jones(spec, ctx);
                    Complex e = colored_jones_exact(spec, ctx.at_least(min_jones_bits(M))).value;
                    t.rows.push_back({static_cast<long>(M), a, u, v, e, Real(abs(v - e) / abs(e))});
                }
    } else if (suite == "laplace") {
        t.names = {"N", "scale", "laplace", "direct", "rel_dev"};
        PotentialFamily fam = build_family(FamilySpec::limit_s(Real(1L)));
        SaddleSolution sol = solve_saddle_quadratic(FamilySpec::limit_s(Real(1L)));
        auto one = [](const Complex&) { return Complex(1L); };
        for (int N : or_default(c.N, {40, 80, 160})) {
            double scale = N + 0.5;
            LogComplex L = laplace_estimate(fam, sol, one, scale);
            LogComplex D = saddle_segment_integral(fam, sol, one, scale, 0.15);
            t.rows.push_back({static_cast<long>(N), scale, L, D, Real(abs((D / L).to_complex() - Complex(1L)))});
        }
    } else if (suite == "riemann") {
        t.names = {"N", "sum", "integral", "ratio", "log_scale"};
        auto f = [](double x) { return -(x - 0.4) * (x - 0.4); };
        auto h = [](double) { return 1.0; };
        for (int N : or_default(c.N, {100, 400, 800})) {
            RiemannComparison rc = riemann_vs_integral(f, h, 0.0, 1.0, N);
            t.rows.push_back({static_cast<long>(N), rc.sum, rc.integral, rc.ratio, rc.log_scale});
        }
    } else if (suite == "windows") {
        t.names = {"r", "N", "near_one", "predicted_near_one", "near_half", "predicted_near_half", "bulk",
                   "ratio_log", "predicted_ratio"};
        for (int r : or_default(c.r, {101, 201})) {
            WindowReport w = window_dominance_report(r, ctx, c.zeta, c.delta, c.workers);
            t.rows.push_back({static_cast<long>(r), static_cast<long>(w.N), w.near_one, w.predicted_near_one,
                              w.near_half, w.predicted_near_half, w.bulk, w.empirical_ratio_log, w.predicted_ratio});
        }
    } else {
        throw ConfigError("unknown suite '" + suite + "' (contour, laplace, riemann, windows)");
    }
    return t;
}

void error_record(std::ostream& err, const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j = {{"error", kind}, {"message", message}};
    err << j.dump() << '\n';
}

}  // namespace

long default_precision_bits() {
    if (const char* env = std::getenv("FIG8_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 64) throw ConfigError("FIG8_PRECISION_BITS must be an integer >= 64");
        return v;
    }
    return 256;
}

void RunConfig::validate() const {
    if (!(zeta > 0.0 && zeta < 0.5)) throw ConfigError("zeta must lie in (0, 1/2)");
    if (!(delta > 0.0 && delta < 0.25)) throw ConfigError("delta must lie in (0, 1/4)");
    if (!(0.5 + delta < 1.0 - zeta)) throw ConfigError("windows overlap: need 1/2 + delta < 1 - zeta");
    if (workers < 1) throw ConfigError("workers must be at least 1");
    if (precision_bits) {
        if (*precision_bits < 64) throw ConfigError("precision must be at least 64 bits");
        int m = max_colour(*this);
        if (m > 0 && *precision_bits < min_jones_bits(m))
            throw ConfigError("precision " + std::to_string(*precision_bits) + " is below the " +
                              std::to_string(min_jones_bits(m)) + " bits needed for colour " + std::to_string(m));
    }
}

long RunConfig::effective_precision() const {
    if (precision_bits) return *precision_bits;
    long bits = default_precision_bits();
    int m = max_colour(*this);
    return m > 0 ? std::max(bits, min_jones_bits(m)) : bits;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        PrecisionContext ctx;
        ctx.precision_bits = config.effective_precision();
        ctx.validate();
        Table t;
        switch (config.command) {
        case Command::jones: t = cmd_jones(config, ctx); break;
        case Command::tv: t = cmd_tv(config, ctx); break;
        case Command::aef: t = cmd_aef(config, ctx); break;
        case Command::saddle: t = cmd_saddle(config, ctx); break;
        case Command::verify: t = cmd_verify(config, ctx); break;
        case Command::sweep: t = cmd_sweep(config, ctx); break;
        }
        Printer p{static_cast<int>(ctx.precision_bits / 3.32)};
        std::ostringstream buf;
        if (config.format == OutputFormat::csv)
            p.csv(buf, t);
        else
            p.json(buf, t);
        if (config.output_path.empty()) {
            out << buf.str();
        } else {
            std::ofstream f(config.output_path, std::ios::binary);
            if (!f) throw ConfigError("cannot open output file " + config.output_path);
            f << buf.str();
        }
        return 0;
    } catch (const ConfigError& e) {
        error_record(err, e.kind(), e.what());
        return 2;
    } catch (const Error& e) {
        error_record(err, e.kind(), e.what());
        return 3;
    } catch (const std::exception& e) {
        error_record(err, "Error", e.what());
        return 3;
    }
}

int cli_main(int argc, char** argv) {
    CLI::App app{"Colored Jones, Turaev-Viro and asymptotic checks for the figure-eight knot"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    long bits = 0;
    std::string format = "csv";
    app.add_option("--precision", bits, "working precision in bits");
    app.add_option("--zeta", cfg.zeta, "half-width of the s ~ 1 window");
    app.add_option("--delta", cfg.delta, "half-width of the s ~ 1/2 window");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", cfg.output_path, "output file (default stdout)");
    app.add_option("--workers,-j", cfg.workers, "worker threads");

    auto lists = [&](CLI::App* sub) {
        sub->add_option("--M", cfg.M, "colours")->delimiter(',');
        sub->add_option("--N", cfg.N, "N values")->delimiter(',');
        sub->add_option("--r", cfg.r, "levels r = 2N+1")->delimiter(',');
        sub->add_option("--u", cfg.u, "deformation u");
        sub->add_option("--a", cfg.a, "shift a");
    };
    std::optional<int> offset;
    std::optional<double> s;

    CLI::App* jones = app.add_subcommand("jones", "J_M at exp(2 pi i/N), or at exp(xi/(M+a)) without --N");
    lists(jones);
    jones->add_flag("--half", cfg.half_root, "use exp(2 pi i/(N + 1/2))");
    CLI::App* tv = app.add_subcommand("tv", "Turaev-Viro invariants");
    lists(tv);
    CLI::App* aef = app.add_subcommand("aef", "asymptotic estimates");
    lists(aef);
    aef->add_option("--estimate,--theorem", cfg.estimate, "kashaev, murakami, fixed_a, fixed_a_u0, s_near_one, half_bound, tv");
    aef->add_option("--M-offset", offset, "M = N - offset");
    CLI::App* saddle = app.add_subcommand("saddle", "saddle points of the potentials");
    lists(saddle);
    saddle->add_option("--family", cfg.family, "s, half or fixed_a");
    saddle->add_option("--s", s, "limit ratio s");
    CLI::App* verify = app.add_subcommand("verify", "independent numerical checks");
    lists(verify);
    verify->add_option("--suite", cfg.suite, "contour, laplace, riemann or windows");
    CLI::App* sweep = app.add_subcommand("sweep", "exact against asymptotic over a grid");
    lists(sweep);
    sweep->add_option("--estimate,--theorem", cfg.estimate, "estimate name as for aef");
    sweep->add_option("--M-offset", offset, "M = N - offset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_record(std::cerr, "ConfigError", e.what());
        return 2;
    }
    if (bits != 0) cfg.precision_bits = bits;
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    cfg.M_offset = offset;
    cfg.s = s;
    if (jones->parsed()) cfg.command = Command::jones;
    else if (tv->parsed()) cfg.command = Command::tv;
    else if (aef->parsed()) cfg.command = Command::aef;
    else if (saddle->parsed()) cfg.command = Command::saddle;
    else if (verify->parsed()) cfg.command = Command::verify;
    else cfg.command = Command::sweep;
    try {
        return run(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        error_record(std::cerr, "Error", e.what());
        return 3;
    }
}

}  // namespace fig8
