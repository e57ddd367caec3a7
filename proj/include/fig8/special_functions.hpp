#pragma once

#include "fig8/context.hpp"
#include "fig8/mp.hpp"

#include <complex>

namespace fig8 {

// Li_2(z), analytic on C \ [1, inf).  Throws CutError for real z > 1.
Complex dilog(const Complex& z);

// Lambda(theta) = -int_0^theta log|2 sin t| dt.
Real lobachevsky(const Real& theta);

// Cl_2(theta) = Im Li_2(e^{i theta}) = 2 Lambda(theta / 2).
Real clausen(const Real& theta);

// Hyperbolic volume of the figure-eight knot complement, 2 Cl_2(pi/3).
Real figure_eight_volume();

// Quantum dilogarithm
//   S_gamma(z) = exp( 1/4 int_{C_R} e^{zt} / (sinh(pi t) sinh(gamma t)) dt/t ),
// where C_R follows the real axis and passes above 0 on a half circle of
// radius R.  Outside |Re z| <= pi the value is carried over with
//   (1 + e^{iz}) S(z + gamma) = S(z - gamma).
// Quadrature runs in binary64; the result is exact to roughly ctx.quad_tol.
Complex quantum_dilog(const Complex& z, const Complex& gamma, const PrecisionContext& ctx);
std::complex<double> quantum_dilog(std::complex<double> z, std::complex<double> gamma,
                                   const PrecisionContext& ctx);

// log S_gamma(z) restricted to the strip |Re z| < pi + Re gamma (no continuation).
std::complex<double> log_quantum_dilog_base(std::complex<double> z, std::complex<double> gamma,
                                            const PrecisionContext& ctx);

// I_gamma(z) = 1/4 int_{C_R} e^{zt} / (t sinh(pi t)) (1/sinh(gamma t) - 1/(gamma t)) dt,
// so that S_gamma(z) = exp(Li_2(-e^{iz}) / (2 i gamma) + I_gamma(z)).  Needs |Re z| < pi.
Complex quantum_dilog_correction(const Complex& z, const Complex& gamma, const PrecisionContext& ctx);

// Fitted envelope (A/(pi - Re z) + A/(pi + Re z) + B (1 + e^{|Im z|})) |gamma| for |I_gamma(z)|.
double correction_bound(std::complex<double> z, std::complex<double> gamma);
inline constexpr double kCorrectionA = 0.05;
inline constexpr double kCorrectionB = 0.05;

// int_{C_R} dt / (t sinh(pi t)); equals -2 log 2 for every admissible R.
std::complex<double> cr_reference_integral(double R, double tol = 1e-13);

// Closed form of S_gamma(-pi - iu - (2a-1) gamma) / S_gamma(pi - iu - (2a+1) gamma)
// with gamma = (2 pi - iu) / (2 (M + a)).
Complex s_ratio_fixed_a(double a, double u, int M);

// S_gamma(w + gamma) / S_gamma(w - gamma) with w = 2 (M - (N + 1/2)/2) gamma and
// gamma = pi / (N + 1/2); equal to 1 / (1 + e^{2 pi i (s - 1/2)}), s = M / (N + 1/2).
Complex s_ratio_half_window(int M, int N);

}  // namespace fig8
