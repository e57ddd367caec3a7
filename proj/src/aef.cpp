#include "fig8/aef.hpp"

#include "fig8/errors.hpp"
#include "fig8/jones.hpp"
#include "fig8/potentials.hpp"
#include "fig8/special_functions.hpp"
#include "fig8/turaev_viro.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace fig8 {

namespace {

Complex cx(const Real& x) { return Complex(x); }
Real rl(long n) { return Real(n); }
Real vol_over_2pi() { return figure_eight_volume() / (2L * pi()); }

bool is_positive_integer(double a) { return a > 0.0 && std::floor(a) == a; }

}  // namespace

const char* aef_name(AefKind k) {
    switch (k) {
    case AefKind::kashaev: return "kashaev";
    case AefKind::murakami: return "murakami";
    case AefKind::fixed_a: return "fixed_a";
    case AefKind::fixed_a_u0: return "fixed_a_u0";
    case AefKind::s_near_one: return "s_near_one";
    case AefKind::half_bound: return "half_bound";
    case AefKind::tv: return "tv";
    }
    return "?";
}

AefKind parse_aef_kind(const std::string& name) {
    for (AefKind k : {AefKind::kashaev, AefKind::murakami, AefKind::fixed_a, AefKind::fixed_a_u0,
                      AefKind::s_near_one, AefKind::half_bound, AefKind::tv})
        if (name == aef_name(k)) return k;
    throw ConfigError("unknown estimate '" + name + "'");
}

AsymptoticEstimate make_estimate(const Complex& prefactor, const Complex& exponent, AefKind kind) {
    AsymptoticEstimate e;
    e.prefactor = prefactor;
    e.exponent = exponent;
    e.value = LogComplex::from(prefactor) * LogComplex::from_log(exponent);
    e.kind = kind;
    return e;
}

Real self_consistency_error(const AsymptoticEstimate& e) {
    LogComplex p = LogComplex::from(e.prefactor);
    Real dm = e.value.log_mag - (p.log_mag + e.exponent.re);
    Real da = wrap_angle(e.value.arg - (p.arg + e.exponent.im));
    return max(abs(dm), abs(da));
}

AsymptoticEstimate aef_kashaev(int N) {
    if (N < 2) throw DomainError("aef_kashaev: N must be at least 2");
    Real n = rl(N);
    Real pref = pow(Real(3L), Real(-0.25)) * pow(n, Real(1.5));
    return make_estimate(cx(pref), cx(n * vol_over_2pi()), AefKind::kashaev);
}

AsymptoticEstimate aef_murakami(double u, int N) {
    if (!(u > 0.0 && u < max_deformation())) throw DomainError("aef_murakami: u must lie in (0, log((3+sqrt5)/2))");
    AsymptoticEstimate e = aef_fixed_a(u, 0.0, N);
    e.kind = AefKind::murakami;
    return e;
}

AsymptoticEstimate aef_fixed_a(double u, double a, int M) {
    if (!(u >= 0.0 && u < max_deformation())) throw DomainError("aef_fixed_a: u must lie in [0, log((3+sqrt5)/2))");
    if (!(a >= 0.0) || M < 1) throw DomainError("aef_fixed_a: need a >= 0 and M >= 1");
    if (u == 0.0) {
        AsymptoticEstimate e = aef_fixed_a_u0(a, M);
        e.kind = AefKind::fixed_a;
        return e;
    }
    Complex one(1L);
    Complex cu{Real(u)};
    Complex xi(Real(u), 2L * pi());
    Real Ma = rl(M) + Real(a);
    Complex phi = phi_growth(u);

    Complex pref = Complex(Real(0L), sqrt(pi())) / cx(2L * sinh(Real(u) / 2L));  // sqrt(-pi) = i sqrt(pi)
    pref *= sqrt(torsion_T(u)) * sqrt(cx(Ma) / xi);
    if (a != 0.0) {
        Complex ca{Real(a)};
        pref *= exp(ca * (phi + log(one - exp(cu - phi)) - log(one - exp(cu + phi))));
    }
    return make_estimate(pref, cx(Ma) * chern_simons_S(u) / xi, AefKind::fixed_a);
}

AsymptoticEstimate aef_fixed_a_u0(double a, int M) {
    if (!(a >= 0.0) || M < 1) throw DomainError("aef_fixed_a_u0: need a >= 0 and M >= 1");
    if (is_positive_integer(a)) throw DomainError("aef_fixed_a_u0: a must not be a positive integer");
    if (a == 0.0) {
        AsymptoticEstimate e = aef_kashaev(M);
        e.kind = AefKind::fixed_a_u0;
        return e;
    }
    Real Ma = rl(M) + Real(a);
    Real api = Real(a) * pi();
    Real pref = sin(api) / api * pow(Real(3L), Real(-0.25)) * pow(Ma, Real(1.5));
    return make_estimate(cx(pref), cx(Ma * vol_over_2pi()), AefKind::fixed_a_u0);
}

AsymptoticEstimate aef_s_near_1(int M, int N, double zeta) {
    if (M < 1 || M > N) throw DomainError("aef_s_near_1: need 1 <= M <= N");
    Real h = rl(N) + 0.5;
    Real s = rl(M) / h;
    if (!(s > 1L - Real(zeta) && s < 1L)) throw WindowError("aef_s_near_1: s outside (1 - zeta, 1)");
    SaddleSolution sol = solve_saddle_quadratic(FamilySpec::s_family(M, N));
    // 1/(i sin(s pi)) with sqrt(-Phi'') principal; sqrt(Phi'') itself would flip the sign.
    Complex pref = cx(sqrt(h) * sqrt(2L * pi()) / sin(s * pi())) / (Complex::i() * sqrt(-sol.second_derivative));
    return make_estimate(pref, cx(h) * sol.potential_value, AefKind::s_near_one);
}

AsymptoticEstimate aef_upper_bound_half(int M, int N, double delta) {
    if (M < 1 || M > N) throw DomainError("aef_upper_bound_half: need 1 <= M <= N");
    Real h = rl(N) + 0.5;
    Real s = rl(M) / h;
    if (!(abs(s - 0.5) < Real(delta))) throw WindowError("aef_upper_bound_half: s outside (1/2 - delta, 1/2 + delta)");
    SaddleSolution sol = solve_saddle_half(M, N, delta);
    Complex rot = exp(Complex(Real(0L), 2L * pi() * (s - 0.5)));
    Complex pref = cx(sqrt(h) * sqrt(2L * pi() / abs(sol.second_derivative))) / (Complex(1L) + rot);
    return make_estimate(pref, cx(h) * sol.potential_value, AefKind::half_bound);
}

AsymptoticEstimate aef_tv(int r) {
    if (r < 5 || r % 2 == 0) throw DomainError("aef_tv: r must be odd and >= 5");
    Real rr = rl(r);
    Real pref = sqrt(rr) * sqrt(Real(2L)) * pow(pi(), Real(3.5)) * pow(2L * pi() * sqrt(Real(3L)), Real(-1.5));
    return make_estimate(cx(pref), cx(rr * vol_over_2pi()), AefKind::tv);
}

Real aef_tv_prefactor_alt(int r) {
    if (r < 5 || r % 2 == 0) throw DomainError("aef_tv: r must be odd and >= 5");
    Real rr = rl(r);
    // |2 / sqrt(-3)| = 2 / sqrt 3
    Real t = 2L / sqrt(Real(3L));
    return pow(pi(), Real(2.5)) / 4L * sqrt(rr / (2L * pi())) * pow(t, Real(1.5));
}

AsymptoticEstimate estimate_at(AefKind kind, const GridPoint& p, double zeta, double delta) {
    switch (kind) {
    case AefKind::kashaev: return aef_kashaev(p.N);
    case AefKind::murakami: return aef_murakami(p.u, p.N);
    case AefKind::fixed_a: return aef_fixed_a(p.u, p.a, p.M);
    case AefKind::fixed_a_u0: return aef_fixed_a_u0(p.a, p.M);
    case AefKind::s_near_one: return aef_s_near_1(p.M, p.N, zeta);
    case AefKind::half_bound: return aef_upper_bound_half(p.M, p.N, delta);
    case AefKind::tv: return aef_tv(p.r);
    }
    throw DomainError("estimate_at: unknown kind");
}

LogComplex exact_value(AefKind kind, const GridPoint& p, const PrecisionContext& ctx) {
    auto jones = [&](const RootSpec& spec) {
        PrecisionContext local = ctx.at_least(min_jones_bits(spec.M));
        return colored_jones_exact(spec, local).log_form;
    };
    switch (kind) {
    case AefKind::kashaev: return jones(RootSpec::kashaev(p.N));
    case AefKind::murakami: return jones(RootSpec(p.N, 0.0, p.u));
    case AefKind::fixed_a: return jones(RootSpec(p.M, p.a, p.u));
    case AefKind::fixed_a_u0: return jones(RootSpec(p.M, p.a, 0.0));
    case AefKind::s_near_one:
    case AefKind::half_bound: return jones(RootSpec::from_MN(p.M, p.N));
    case AefKind::tv: return tv_invariant(p.r, ctx).value;
    }
    throw DomainError("exact_value: unknown kind");
}

std::vector<SweepRow> ratio_sweep(AefKind kind, const std::vector<GridPoint>& grid, const PrecisionContext& ctx,
                                  unsigned workers, double zeta, double delta) {
    ctx.validate();
    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto work = [&] {
        PrecisionScope scope(ctx.precision_bits);
        try {
            for (std::size_t i = next++; i < grid.size(); i = next++) {
                const GridPoint& p = grid[i];
                SweepRow row;
                switch (kind) {
                case AefKind::kashaev: row.params = {{"N", p.N}}; break;
                case AefKind::murakami: row.params = {{"u", p.u}, {"N", p.N}}; break;
                case AefKind::fixed_a: row.params = {{"u", p.u}, {"a", p.a}, {"M", p.M}}; break;
                case AefKind::fixed_a_u0: row.params = {{"a", p.a}, {"M", p.M}}; break;
                case AefKind::s_near_one:
                case AefKind::half_bound: row.params = {{"M", p.M}, {"N", p.N}}; break;
                case AefKind::tv: row.params = {{"r", p.r}}; break;
                }
                row.exact = exact_value(kind, p, ctx);
                row.estimate = estimate_at(kind, p, zeta, delta).value;
                LogComplex q = row.exact / row.estimate;
                row.columns = {{"log_ratio", q.log_mag}, {"arg_ratio", q.arg}};
                rows[i] = std::move(row);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!failure) failure = std::current_exception();
            next = grid.size();
        }
    };
    workers = std::max(1u, workers);
    if (workers == 1 || grid.size() < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, grid.size()); ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace fig8
