#include "fig8/verify.hpp"

#include "fig8/errors.hpp"
#include "fig8/special_functions.hpp"
#include "fig8/turaev_viro.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace fig8 {

using detail::cplx;

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);
}  // namespace

double Contour::length() const {
    double L = 0.0;
    for (std::size_t i = 1; i < vertices.size(); ++i) L += std::abs(vertices[i] - vertices[i - 1]);
    return L;
}

Contour contour_plus(double eps, double u) {
    double w = u / (2 * kPi);
    return {{cplx(1 - eps, 0), cplx(1 - w - eps, 1), cplx(-w + eps, 1), cplx(eps, 0)}, ContourLabel::c_plus};
}

Contour contour_minus(double eps, double u) {
    double w = u / (2 * kPi);
    return {{cplx(eps, 0), cplx(eps + w, -1), cplx(1 - eps + w, -1), cplx(1 - eps, 0)}, ContourLabel::c_minus};
}

double default_epsilon(const RootSpec& spec) { return (2 * spec.a + 0.5) / (2 * (spec.M + spec.a)); }

cplx g_M(const RootSpec& spec, cplx z, const PrecisionContext& ctx) {
    const double Ma = spec.M + spec.a;
    const double u = spec.u;
    const cplx xi(u, 2 * kPi);
    const cplx gamma = cplx(2 * kPi, -u) / (2 * Ma);
    const cplx shift = kI * xi * spec.a / Ma;
    cplx lead = std::exp(-(Ma * u - spec.a * xi) * z);
    cplx num = quantum_dilog(kPi - kI * u + kI * xi * z + shift, gamma, ctx);
    cplx den = quantum_dilog(-kPi - kI * u - kI * xi * z + shift, gamma, ctx);
    return lead * num / den;
}

Complex contour_jones(const RootSpec& spec, double epsilon, const PrecisionContext& ctx) {
    ctx.validate();
    if (spec.M > 12) throw DomainError("contour_jones: supported for M <= 12");
    const double Ma = spec.M + spec.a;
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw DomainError("contour_jones: epsilon must lie in (0, 1/2)");

    // Poles (2k+1)/(2(M+a)) right of eps are residues of the integral; the rest stay in the head.
    int k0 = 0;
    while (k0 < spec.M && (2.0 * k0 + 1) / (2 * Ma) <= epsilon) ++k0;

    PrecisionContext hp = ctx.at_least(min_jones_bits(spec.M));
    PrecisionScope scope(hp.precision_bits);
    Complex q = spec.q();
    Complex one(1L);
    Complex head(0L);
    Complex prod = one;
    for (int k = 0; k < k0; ++k) {
        if (k > 0) {
            Real l(static_cast<long>(k));
            prod *= (one - pow(q, Complex(Real(static_cast<long>(spec.M)) - l))) *
                    (one - pow(q, Complex(Real(static_cast<long>(spec.M)) + l)));
        }
        head += pow(q, Complex(Real(-static_cast<long>(k) * spec.M))) * prod;
    }

    auto integrand = [&](cplx z) { return std::tan(Ma * kPi * z) * g_M(spec, z, ctx); };
    cplx total = 0.0;
    for (const Contour& c : {contour_plus(epsilon, spec.u), contour_minus(epsilon, spec.u)})
        for (std::size_t i = 1; i < c.vertices.size(); ++i)
            total += detail::integrate_segment(integrand, c.vertices[i - 1], c.vertices[i], ctx.quad_tol,
                                               "contour_jones");

    const cplx xi(spec.u, 2 * kPi);
    cplx ratio = s_ratio_fixed_a(spec.a, spec.u, spec.M).to_std();
    cplx front = ratio * Ma * kI / 2.0 * std::exp(spec.u / 2 - spec.a * xi / (2 * Ma));
    return head + Complex(front * total);
}

LogComplex laplace_estimate(const PotentialFamily& family, const SaddleSolution& saddle, const PrefactorFn& f,
                            double scale, cplx direction) {
    if (!(scale > 0.0)) throw DomainError("laplace_estimate: scale must be positive");
    Complex d(direction);
    Complex w = -(saddle.second_derivative * d * d);
    if (w.is_zero()) throw HypothesisError("laplace_estimate: degenerate saddle");
    // |arg sqrt(w)| < pi/4  <=>  Re w > 0
    if (!(w.re > 0L)) throw HypothesisError("laplace_estimate: |arg sqrt(-Phi'')| >= pi/4 along the path");
    Complex amp = d * sqrt(Complex(2L * pi()) / (Complex(Real(scale)) * w)) * f(saddle.z);
    Complex expo = Complex(Real(scale)) * family.value(saddle.z);
    return LogComplex::from(amp) * LogComplex::from_log(expo);
}

LogComplex saddle_segment_integral(const PotentialFamily& family, const SaddleSolution& saddle, const PrefactorFn& f,
                                   double scale, double half_width, cplx direction, double tol) {
    Complex v0 = family.value(saddle.z);
    cplx z0 = saddle.z.to_std();
    cplx dir = direction / std::abs(direction);
    auto g = [&](cplx z) {
        Complex zz(z);
        Complex e = Complex(Real(scale)) * (family.value(zz) - v0);
        return (f(zz) * exp(e)).to_std();
    };
    // Split at the saddle so the peak sits on a panel edge.
    cplx I = detail::integrate_segment(g, z0 - half_width * dir, z0, tol, "saddle_segment_integral") +
             detail::integrate_segment(g, z0, z0 + half_width * dir, tol, "saddle_segment_integral");
    return LogComplex::from(Complex(I)) * LogComplex::from_log(Complex(Real(scale)) * v0);
}

RiemannComparison riemann_vs_integral(const std::function<double(double)>& f, const std::function<double(double)>& h,
                                      double a, double b, int N, bool allow_boundary) {
    if (!(b > a)) throw DomainError("riemann_vs_integral: need a < b");
    if (N < 1) throw DomainError("riemann_vs_integral: N must be positive");
    const double lam = N + 0.5;

    // Locate the maximum of f: coarse scan, then golden-section refinement.
    const int grid = 4000;
    double step = (b - a) / grid;
    int best = 0;
    for (int i = 1; i <= grid; ++i)
        if (f(a + i * step) > f(a + best * step)) best = i;
    double lo = std::max(a, a + (best - 1) * step), hi = std::min(b, a + (best + 1) * step);
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 100 && hi - lo > 1e-14 * (1 + std::abs(lo)); ++it) {
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        if (f(x1) < f(x2))
            lo = x1;
        else
            hi = x2;
    }
    double xs = std::clamp((lo + hi) / 2, a, b);
    if (best == 0 && f(a) >= f(xs)) xs = a;
    if (best == grid && f(b) >= f(xs)) xs = b;
    const double span = 1e-9 * (b - a);
    bool boundary = xs - a < span || b - xs < span;
    if (boundary && !allow_boundary)
        throw HypothesisError("riemann_vs_integral: maximum of f lies on the boundary");

    RiemannComparison out;
    out.boundary_maximum = boundary;
    const double fmax = f(xs);
    out.log_scale = lam * fmax;

    double sum = 0.0;
    for (int k = 0;; ++k) {
        double x = a + (2.0 * k + 1) / (2.0 * N + 1);
        if (x > b + 1e-15) break;
        sum += h(x) * std::exp(lam * (f(x) - fmax));
    }
    out.sum = sum / lam;

    auto integrand = [&](double x) { return cplx(h(x) * std::exp(lam * (f(x) - fmax)), 0.0); };
    double I = 0.0;
    if (xs > a) I += detail::integrate_real_line(integrand, a, xs, 1e-12, "riemann_vs_integral").real();
    if (xs < b) I += detail::integrate_real_line(integrand, xs, b, 1e-12, "riemann_vs_integral").real();
    out.integral = I;
    out.ratio = out.sum / out.integral;

    // Leading Laplace term on the same scale.
    double e = 1e-4 * (b - a);
    if (!boundary) {
        double f2 = (f(xs + e) - 2 * fmax + f(xs - e)) / (e * e);
        out.laplace = h(xs) * std::sqrt(2 * kPi / (lam * std::abs(f2)));
    } else {
        double inward = xs == a || xs - a < span ? 1.0 : -1.0;
        double f1 = (f(xs + inward * e) - fmax) / e;
        if (std::abs(f1) > 1e-3) {
            out.laplace = h(xs) / (lam * std::abs(f1));
        } else {
            double f2 = (f(xs + 2 * inward * e) - 2 * f(xs + inward * e) + fmax) / (e * e);
            out.laplace = 0.5 * h(xs) * std::sqrt(2 * kPi / (lam * std::abs(f2)));
        }
    }
    return out;
}

WindowReport window_dominance_report(int r, const PrecisionContext& ctx, double zeta, double delta, unsigned workers) {
    TvResult tv = tv_invariant(r, zeta, delta, ctx, workers);
    PrecisionScope scope(ctx.precision_bits);
    WindowReport rep;
    rep.r = r;
    rep.N = (r - 1) / 2;
    Real eta = eta_prime(r);
    LogComplex inv = LogComplex::from_real(1L / (eta * eta));
    rep.near_one = tv.near_one * inv;
    rep.near_half = tv.near_half * inv;
    rep.bulk = tv.bulk * inv;

    Real two_n1(static_cast<long>(r));
    Real h = Real(static_cast<long>(rep.N)) + 0.5;
    Real common = pow(two_n1, Real(1.5)) * pow(pi(), Real(1.5)) / sqrt(Real(2L)) *
                  pow(2L * pi() * sqrt(Real(3L)), Real(-1.5));
    Real expo = two_n1 * figure_eight_volume() / (2L * pi());
    Real p1 = common / 2L * h * h;
    Real p2 = common / 4L;
    rep.predicted_near_one = LogComplex::from_real(p1) * LogComplex::from_log(Complex(expo));
    rep.predicted_near_half = LogComplex::from_real(p2) * LogComplex::from_log(Complex(expo));
    rep.empirical_ratio_log = rep.near_one.log_mag - rep.near_half.log_mag;
    rep.predicted_ratio = p1 / p2;
    return rep;
}

}  // namespace fig8
