#pragma once

#include "fig8/context.hpp"
#include "fig8/log_complex.hpp"
#include "fig8/sweep.hpp"

#include <string>
#include <vector>

namespace fig8 {

enum class AefKind { kashaev, murakami, fixed_a, fixed_a_u0, s_near_one, half_bound, tv };
const char* aef_name(AefKind k);
AefKind parse_aef_kind(const std::string& name);  // ConfigError on unknown names

// value = prefactor * exp(exponent), kept in log form.
struct AsymptoticEstimate {
    Complex prefactor;
    Complex exponent;
    LogComplex value;
    AefKind kind = AefKind::kashaev;
};

AsymptoticEstimate make_estimate(const Complex& prefactor, const Complex& exponent, AefKind kind);
// |log value - (log prefactor + exponent)| modulo 2 pi i in the imaginary part.
Real self_consistency_error(const AsymptoticEstimate& e);

// 3^{-1/4} N^{3/2} exp(N Vol / 2 pi), against J_N(exp(2 pi i / N)).
AsymptoticEstimate aef_kashaev(int N);

// The a = 0 case of aef_fixed_a.
AsymptoticEstimate aef_murakami(double u, int N);

// For q = exp(xi/(M+a)), xi = 2 pi i + u, u > 0:
//   J_M ~ e^{a phi}(1 - e^{u-phi})^a / (1 - e^{u+phi})^a * sqrt(-pi)/(2 sinh(u/2))
//         * T(u)^{1/2} ((M+a)/xi)^{1/2} exp((M+a) S(u)/xi),   phi = phi_growth(u).
// u = 0 is handed to aef_fixed_a_u0.
AsymptoticEstimate aef_fixed_a(double u, double a, int M);

// (sin a pi)/(a pi) 3^{-1/4} (M+a)^{3/2} exp((M+a) Vol / 2 pi); a = 0 gives aef_kashaev(M).
AsymptoticEstimate aef_fixed_a_u0(double a, int M);

// s = M/(N+1/2) in (1 - zeta, 1):
//   (N+1/2)^{1/2} sqrt(2 pi) / (i sin(s pi) sqrt(-Phi''(z))) exp((N+1/2) Phi(z)),
// Phi the s-family potential at its saddle z.
AsymptoticEstimate aef_s_near_1(int M, int N, double zeta = 0.05);

// Envelope for |J_M| with s in (1/2 - delta, 1/2 + delta):
//   (N+1/2)^{1/2} sqrt(2 pi / |chi''(x)|) / (1 + e^{2 pi i (s - 1/2)}) exp((N+1/2) chi(x)).
// Only |value| is meaningful; the constant in front is not known.
AsymptoticEstimate aef_upper_bound_half(int M, int N, double delta = 0.05);

// r^{1/2} sqrt2 pi^{7/2} (2 pi sqrt3)^{-3/2} exp(r Vol / 2 pi).
AsymptoticEstimate aef_tv(int r);
// The same prefactor written as (pi^{5/2}/4)(r/2pi)^{1/2} |2/sqrt(-3)|^{3/2}.
Real aef_tv_prefactor_alt(int r);

struct GridPoint {
    int M = 0;
    int N = 0;
    int r = 0;
    double u = 0.0;
    double a = 0.0;
};

// Exact value against the estimate of `kind` at every grid point.  Columns:
// log_ratio (log|exact/estimate|) and arg_ratio.  Output order follows the grid.
// zeta and delta are the window half-widths of the s ~ 1 and s ~ 1/2 estimates.
std::vector<SweepRow> ratio_sweep(AefKind kind, const std::vector<GridPoint>& grid, const PrecisionContext& ctx,
                                  unsigned workers = 1, double zeta = 0.05, double delta = 0.05);

// The exact quantity an estimate of `kind` approximates.
LogComplex exact_value(AefKind kind, const GridPoint& p, const PrecisionContext& ctx);
AsymptoticEstimate estimate_at(AefKind kind, const GridPoint& p, double zeta = 0.05, double delta = 0.05);

}  // namespace fig8
