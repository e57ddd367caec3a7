#include "fig8/errors.hpp"
#include "fig8/special_functions.hpp"

#include "quadrature.hpp"

#include <cmath>
#include <limits>

namespace fig8 {

using detail::cplx;

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

double contour_radius(cplx gamma, const PrecisionContext& ctx) {
    double cap = std::min(kPi / std::abs(gamma), 1.0);
    double R = ctx.contour_R > 0.0 ? ctx.contour_R : 0.5 * cap;
    if (!(R > 0.0 && R < cap))
        throw DomainError("quantum dilogarithm: contour radius " + std::to_string(R) +
                          " outside (0, min(pi/|gamma|, 1))");
    return R;
}

// 1/sinh(x) - 1/x without cancellation for small x.
cplx inv_sinh_minus_inv(cplx x) {
    if (std::abs(x) < 0.1) {
        cplx x2 = x * x;
        return x * (-1.0 / 6.0 + x2 * (7.0 / 360.0 + x2 * (-31.0 / 15120.0 + x2 * (127.0 / 604800.0))));
    }
    return 1.0 / std::sinh(x) - 1.0 / x;
}

}  // namespace

std::complex<double> log_quantum_dilog_base(std::complex<double> z, std::complex<double> gamma,
                                            const PrecisionContext& ctx) {
    if (!(gamma.real() > 0.0)) throw DomainError("quantum dilogarithm: Re(gamma) must be positive");
    if (std::abs(z.real()) >= kPi + gamma.real())
        throw DomainError("quantum dilogarithm: z outside the base strip");
    const double R = contour_radius(gamma, ctx);
    const double tol = ctx.quad_tol;

    // The two rays folded onto [R, inf): 2 sinh(zs) / (s sinh(pi s) sinh(gamma s)).
    auto ray = [&](double s) -> cplx {
        cplx a = std::exp((z - kPi - gamma) * s);
        cplx b = std::exp((-z - kPi - gamma) * s);
        cplx den = s * (1.0 - std::exp(-2.0 * kPi * s)) * (1.0 - std::exp(-2.0 * gamma * s));
        return 4.0 * (a - b) / den;
    };
    // Half circle t = R e^{i theta}, traversed from theta = pi to 0.
    auto arc = [&](double theta) -> cplx {
        cplx t = R * std::exp(kI * theta);
        return std::exp(z * t) / (std::sinh(kPi * t) * std::sinh(gamma * t));
    };
    cplx rays = detail::integrate_real_line(ray, R, kInf, tol, "quantum_dilog rays");
    cplx half = detail::integrate_real_line(arc, 0.0, kPi, tol, "quantum_dilog arc");
    return 0.25 * (rays - kI * half);
}

std::complex<double> quantum_dilog(std::complex<double> z, std::complex<double> gamma,
                                   const PrecisionContext& ctx) {
    if (!(gamma.real() > 0.0)) throw DomainError("quantum dilogarithm: Re(gamma) must be positive");
    cplx log_factor = 0.0;
    for (int guard = 0; z.real() > kPi || z.real() < -kPi; ++guard) {
        if (guard > 1000000) throw DomainError("quantum dilogarithm: continuation did not reach the strip");
        bool down = z.real() > kPi;
        cplx w = down ? z - gamma : z + gamma;
        cplx d = 1.0 + std::exp(kI * w);
        if (std::abs(d) < 1e-14)
            throw DomainError("quantum dilogarithm: z lies on an excluded line of the continuation");
        // S(z) = S(z - 2 gamma) / (1 + e^{i(z - gamma)}),  S(z) = (1 + e^{i(z + gamma)}) S(z + 2 gamma)
        log_factor += down ? -std::log(d) : std::log(d);
        z = down ? z - 2.0 * gamma : z + 2.0 * gamma;
    }
    return std::exp(log_factor + log_quantum_dilog_base(z, gamma, ctx));
}

Complex quantum_dilog(const Complex& z, const Complex& gamma, const PrecisionContext& ctx) {
    return Complex(quantum_dilog(z.to_std(), gamma.to_std(), ctx));
}

Complex quantum_dilog_correction(const Complex& zh, const Complex& gammah, const PrecisionContext& ctx) {
    cplx z = zh.to_std();
    cplx gamma = gammah.to_std();
    if (!(std::abs(z.real()) < kPi)) throw DomainError("quantum_dilog_correction: need |Re z| < pi");
    if (!(gamma.real() > 0.0)) throw DomainError("quantum_dilog_correction: Re(gamma) must be positive");
    const double R = contour_radius(gamma, ctx);
    const double tol = ctx.quad_tol;

    auto ray = [&](double s) -> cplx {
        cplx sh = 2.0 * (std::exp((z - kPi) * s) - std::exp((-z - kPi) * s)) / (1.0 - std::exp(-2.0 * kPi * s));
        cplx gs = gamma * s;
        cplx inv = std::abs(gs) < 0.1 ? inv_sinh_minus_inv(gs)
                                      : 2.0 * std::exp(-gs) / (1.0 - std::exp(-2.0 * gs)) - 1.0 / gs;
        return sh * inv / s;
    };
    auto arc = [&](double theta) -> cplx {
        cplx t = R * std::exp(kI * theta);
        return std::exp(z * t) / std::sinh(kPi * t) * inv_sinh_minus_inv(gamma * t);
    };
    cplx rays = detail::integrate_real_line(ray, R, kInf, tol, "correction rays");
    cplx half = detail::integrate_real_line(arc, 0.0, kPi, tol, "correction arc");
    return Complex(0.25 * (rays - kI * half));
}

double correction_bound(std::complex<double> z, std::complex<double> gamma) {
    double x = z.real();
    return (kCorrectionA * (1.0 / (kPi - x) + 1.0 / (kPi + x)) + kCorrectionB * (1.0 + std::exp(std::abs(z.imag())))) *
           std::abs(gamma);
}

std::complex<double> cr_reference_integral(double R, double tol) {
    if (!(R > 0.0 && R < 1.0)) throw DomainError("cr_reference_integral: need 0 < R < 1");
    auto ray = [&](double s) -> cplx { return 4.0 * std::exp(-kPi * s) / (s * (1.0 - std::exp(-2.0 * kPi * s))); };
    auto arc = [&](double theta) -> cplx { return 1.0 / std::sinh(kPi * R * std::exp(kI * theta)); };
    cplx rays = detail::integrate_real_line(ray, R, kInf, tol, "reference rays");
    cplx half = detail::integrate_real_line(arc, 0.0, kPi, tol, "reference arc");
    return rays - kI * half;
}

}  // namespace fig8
