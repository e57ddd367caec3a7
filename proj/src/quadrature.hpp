#pragma once

// Internal quadrature helpers shared by the double-precision integrators.

#include "fig8/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace fig8::detail {

using cplx = std::complex<double>;

constexpr unsigned kMaxDepth = 24;

// Adaptive Gauss-Kronrod over [a, b] (b may be +inf) of a complex-valued f.
template <class F>
cplx integrate_real_line(F&& f, double a, double b, double tol, const char* what) {
    double err = 0.0;
    double l1 = 0.0;
    cplx v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, kMaxDepth, tol, &err, &l1);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw QuadratureError(std::string(what) + ": non-finite integral");
    if (err > std::max(1e3 * tol * l1, 1e-300) && err > 1e-9 * l1)
        throw QuadratureError(std::string(what) + ": error estimate " + std::to_string(err) +
                              " exceeds tolerance");
    return v;
}

// Integral of f(z) dz along the straight segment z0 -> z1.
template <class F>
cplx integrate_segment(F&& f, cplx z0, cplx z1, double tol, const char* what) {
    cplx dz = z1 - z0;
    auto g = [&](double t) { return f(z0 + t * dz) * dz; };
    return integrate_real_line(g, 0.0, 1.0, tol, what);
}

}  // namespace fig8::detail
