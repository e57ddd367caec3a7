#pragma once

#include "fig8/context.hpp"
#include "fig8/jones.hpp"
#include "fig8/log_complex.hpp"
#include "fig8/potentials.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace fig8 {

enum class ContourLabel { c_plus, c_minus, custom };

struct Contour {
    std::vector<std::complex<double>> vertices;
    ContourLabel label = ContourLabel::custom;

    double length() const;
};

// C+(eps): 1-eps -> 1 - u/2pi - eps + i -> -u/2pi + eps + i -> eps
Contour contour_plus(double eps, double u);
// C-(eps): eps -> eps + u/2pi - i -> 1 - eps + u/2pi - i -> 1 - eps
Contour contour_minus(double eps, double u);

// eps = (2a + 1/2) / (2(M+a))
double default_epsilon(const RootSpec& spec);

// J_M from its integral representation
//   J = sum_{k < k0} (Habiro terms)
//     + R (M+a) i/2 exp(u/2 - a xi/(2(M+a))) int_{C+ + C-} tan((M+a) pi z) g_M(z) dz,
// where R is the quantum dilogarithm ratio at the edge of the strip, k0 the
// first k whose pole (2k+1)/(2(M+a)) lies right of eps, and
//   g_M(z) = exp(-(M+a)(u - a xi/(M+a)) z) S(pi - iu + i xi z + i xi a/(M+a))
//                                          / S(-pi - iu - i xi z + i xi a/(M+a)).
// Quadrature in binary64; good to about 1e-8 relative for M <= 12.
Complex contour_jones(const RootSpec& spec, double epsilon, const PrecisionContext& ctx);
inline Complex contour_jones(const RootSpec& spec, const PrecisionContext& ctx) {
    return contour_jones(spec, default_epsilon(spec), ctx);
}
std::complex<double> g_M(const RootSpec& spec, std::complex<double> z, const PrecisionContext& ctx);

using PrefactorFn = std::function<Complex(const Complex&)>;

// sqrt(2 pi / (scale (-Phi''))) f(z0) exp(scale Phi(z0)) for the integral along
// direction d through the saddle.  Requires |arg sqrt(-Phi'' d^2)| < pi/4.
LogComplex laplace_estimate(const PotentialFamily& family, const SaddleSolution& saddle, const PrefactorFn& f,
                            double scale, std::complex<double> direction = 1.0);

// int f(z) exp(scale Phi(z)) dz over the segment z0 - w d .. z0 + w d, by adaptive quadrature.
LogComplex saddle_segment_integral(const PotentialFamily& family, const SaddleSolution& saddle, const PrefactorFn& f,
                                   double scale, double half_width, std::complex<double> direction = 1.0,
                                   double tol = 1e-12);

struct RiemannComparison {
    // sum and integral are both scaled by exp(-log_scale)
    double sum = 0.0;
    double integral = 0.0;
    double ratio = 0.0;
    // leading Laplace value of the integral on the same scale, with the
    // factor 1/2 when the maximum is an endpoint
    double laplace = 0.0;
    double log_scale = 0.0;
    bool boundary_maximum = false;
};

// (1/(N+1/2)) sum_k h(x_k) e^{(N+1/2) f(x_k)},  x_k = a + (2k+1)/(2N+1) in [a, b],
// against int_a^b h e^{(N+1/2) f}.  A maximum of f at an endpoint throws
// HypothesisError unless allow_boundary is set.
RiemannComparison riemann_vs_integral(const std::function<double(double)>& f, const std::function<double(double)>& h,
                                      double a, double b, int N, bool allow_boundary = false);

struct WindowReport {
    int r = 0;
    int N = 0;
    LogComplex near_one;
    LogComplex near_half;
    LogComplex bulk;
    LogComplex predicted_near_one;
    LogComplex predicted_near_half;
    Real empirical_ratio_log;  // log(near_one / near_half)
    Real predicted_ratio;      // predicted_near_one / predicted_near_half
};

// Window sums of sum_M |J_M|^2 (without the eta' factor) and their leading-order predictions:
//   s ~ 1:   (2N+1)^{3/2}/2 pi^{3/2}/sqrt2 (2 pi sqrt3)^{-3/2} (N+1/2)^2 e^{(2N+1) Vol/2pi}
//   s ~ 1/2: (2N+1)^{3/2}   pi^{3/2}/sqrt2 (2 pi sqrt3)^{-3/2} (1/4)     e^{(2N+1) Vol/2pi}
WindowReport window_dominance_report(int r, const PrecisionContext& ctx, double zeta = 0.05, double delta = 0.05,
                                     unsigned workers = 1);

}  // namespace fig8
