#pragma once

#include "fig8/context.hpp"
#include "fig8/log_complex.hpp"
#include "fig8/mp.hpp"

#include <optional>
#include <utility>

namespace fig8 {

// Largest deformation for which the AEFs apply: log((3 + sqrt 5)/2).
double max_deformation();

// Evaluation point q = exp(xi / (M + a)), xi = 2 pi i + u.
struct RootSpec {
    int M = 1;
    double a = 0.0;
    double u = 0.0;
    std::optional<int> N;  // set when the point is exp(2 pi i / (N + 1/2))

    RootSpec() = default;
    RootSpec(int M_, double a_, double u_);
    // a = N - M + 1/2, so that q = exp(2 pi i / (N + 1/2)).
    static RootSpec from_MN(int M, int N);
    // Kashaev point q = exp(2 pi i / N) with M = N.
    static RootSpec kashaev(int N);

    Real M_plus_a() const;
    Complex xi() const;
    Complex gamma() const;
    Complex q() const;
    int r() const;        // 2N + 1, requires N
    Real s() const;       // M / (N + 1/2), requires N
};

struct JonesValue {
    Complex value;
    LogComplex log_form;
    int term_count = 0;
};

// Working precision required for an exact sum of colour M.
long min_jones_bits(int M);

// J_M(q) = sum_{k=0}^{M-1} q^{-kM} prod_{l=1}^{k} (1 - q^{M-l})(1 - q^{M+l}).
JonesValue colored_jones_exact(const RootSpec& spec, const PrecisionContext& ctx);

// Same sum for an arbitrary q (used for conjugation checks).
JonesValue colored_jones_at(int M, const Complex& q, const PrecisionContext& ctx);

// g_M(k) = prod_{l=1}^{k} |(q^{(M-l)/2} - q^{-(M-l)/2})(q^{(M+l)/2} - q^{-(M+l)/2})|, u = 0.
Real g_product(const RootSpec& spec, int k);
std::pair<int, Real> g_maximizer(const RootSpec& spec);

// -(Lambda(2 pi (k_d - d)) + Lambda(2 pi (k_d + d))) / (2 pi)
Real growth_rate_bound(const Real& d, const Real& k_d);

// Smallest |4 sin(pi (N+j)/(N+1/2)) sin(pi (N-j)/(N+1/2))| over 1 <= j <= N-1.
Real gj_min_factor(int N);
bool gj_nonvanishing_check(int N);

}  // namespace fig8
