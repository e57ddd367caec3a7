#include "fig8/jones.hpp"

#include "fig8/errors.hpp"
#include "fig8/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fig8 {

double max_deformation() { return std::log((3.0 + std::sqrt(5.0)) / 2.0); }

RootSpec::RootSpec(int M_, double a_, double u_) : M(M_), a(a_), u(u_) {
    if (M < 1) throw DomainError("RootSpec: M must be positive");
    if (!(a >= 0.0)) throw DomainError("RootSpec: a must be nonnegative");
    if (!(u >= 0.0 && u < max_deformation()))
        throw DomainError("RootSpec: u must lie in [0, log((3+sqrt5)/2))");
}

RootSpec RootSpec::from_MN(int M, int N) {
    if (M < 1 || N < 1) throw DomainError("RootSpec: M and N must be positive");
    RootSpec s(M, N - M + 0.5, 0.0);
    s.N = N;
    return s;
}

RootSpec RootSpec::kashaev(int N) { return RootSpec(N, 0.0, 0.0); }

Real RootSpec::M_plus_a() const {
    if (N) return Real(static_cast<long>(*N)) + Real(0.5);
    return Real(static_cast<long>(M)) + Real(a);
}
Complex RootSpec::xi() const { return Complex(Real(u), 2L * pi()); }
Complex RootSpec::gamma() const { return Complex(2L * pi(), -Real(u)) / (2L * M_plus_a()); }
Complex RootSpec::q() const { return exp(xi() / M_plus_a()); }
int RootSpec::r() const {
    if (!N) throw DomainError("RootSpec: r needs the (M, N) form");
    return 2 * *N + 1;
}
Real RootSpec::s() const {
    if (!N) throw DomainError("RootSpec: s needs the (M, N) form");
    return Real(static_cast<long>(M)) / M_plus_a();
}

long min_jones_bits(int M) { return std::max<long>(128, 2L * M + 64); }

namespace {

JonesValue jones_sum(int M, const Complex& log_q) {
    // Powers q^j are taken from exp(j log q) rather than by repeated products.
    std::vector<Complex> qp(2 * M + 1);
    for (int j = 0; j <= 2 * M; ++j) qp[j] = exp(log_q * Real(static_cast<long>(j)));
    Complex one(Real(1L));
    Complex step = exp(-(log_q * Real(static_cast<long>(M))));  // q^{-M}
    Complex shift = one;                                        // q^{-kM}
    Complex prod = one;
    Complex sum = one;
    for (int k = 1; k < M; ++k) {
        prod *= (one - qp[M - k]) * (one - qp[M + k]);
        shift *= step;
        sum += shift * prod;
    }
    JonesValue out;
    out.value = sum;
    out.log_form = LogComplex::from(sum);
    out.term_count = M;
    return out;
}

void check_precision(int M, const PrecisionContext& ctx) {
    ctx.validate();
    if (ctx.precision_bits < min_jones_bits(M))
        throw PrecisionError("colored_jones_exact: M = " + std::to_string(M) + " needs at least " +
                             std::to_string(min_jones_bits(M)) + " bits, context has " +
                             std::to_string(ctx.precision_bits));
}

}  // namespace

JonesValue colored_jones_exact(const RootSpec& spec, const PrecisionContext& ctx) {
    check_precision(spec.M, ctx);
    PrecisionScope scope(ctx.precision_bits);
    return jones_sum(spec.M, spec.xi() / spec.M_plus_a());
}

JonesValue colored_jones_at(int M, const Complex& q, const PrecisionContext& ctx) {
    if (M < 1) throw DomainError("colored_jones_at: M must be positive");
    check_precision(M, ctx);
    PrecisionScope scope(ctx.precision_bits);
    return jones_sum(M, log(q));
}

Real g_product(const RootSpec& spec, int k) {
    if (spec.u != 0.0) throw DomainError("g_product: defined for u = 0 only");
    if (k < 1 || k > spec.M - 1) throw DomainError("g_product: k must lie in [1, M-1]");
    // |q^{n/2} - q^{-n/2}| = |2 sin(pi n / (M + a))|
    Real w = pi() / spec.M_plus_a();
    Real p(1L);
    for (int l = 1; l <= k; ++l) {
        p *= abs(2L * sin(w * Real(static_cast<long>(spec.M - l)))) *
             abs(2L * sin(w * Real(static_cast<long>(spec.M + l))));
    }
    return p;
}

std::pair<int, Real> g_maximizer(const RootSpec& spec) {
    if (spec.u != 0.0) throw DomainError("g_maximizer: defined for u = 0 only");
    if (spec.M < 2) throw DomainError("g_maximizer: needs M >= 2");
    Real w = pi() / spec.M_plus_a();
    Real p(1L);
    int best_k = 1;
    Real best(-1L);
    for (int k = 1; k <= spec.M - 1; ++k) {
        p *= abs(2L * sin(w * Real(static_cast<long>(spec.M - k)))) *
             abs(2L * sin(w * Real(static_cast<long>(spec.M + k))));
        if (p > best) {  // strict: ties stay at the smaller k
            best = p;
            best_k = k;
        }
    }
    return {best_k, best};
}

Real growth_rate_bound(const Real& d, const Real& k_d) {
    Real two_pi = 2L * pi();
    return -(lobachevsky(two_pi * (k_d - d)) + lobachevsky(two_pi * (k_d + d))) / two_pi;
}

Real gj_min_factor(int N) {
    if (N < 2) throw DomainError("gj_min_factor: needs N >= 2");
    Real h = Real(static_cast<long>(N)) + Real(0.5);
    Real best = Real::inf(1);
    for (int j = 1; j <= N - 1; ++j) {
        Real v = abs(4L * sin(pi() * Real(static_cast<long>(N + j)) / h) *
                     sin(pi() * Real(static_cast<long>(N - j)) / h));
        best = min(best, v);
    }
    return best;
}

bool gj_nonvanishing_check(int N) { return gj_min_factor(N) > Real(1e-6); }

}  // namespace fig8
