#pragma once

#include "fig8/mp.hpp"

#include <vector>

namespace fig8 {

// A complex number kept as (log|z|, arg z).  Zero has log_mag = -inf.
struct LogComplex {
    Real log_mag;
    Real arg;  // in (-pi, pi]

    LogComplex() : log_mag(Real::inf(-1)), arg(0L) {}
    LogComplex(Real lm, Real a) : log_mag(std::move(lm)), arg(wrap_angle(a)) {}

    static LogComplex from(const Complex& z);
    static LogComplex from_real(const Real& x);
    static LogComplex from_log(const Complex& log_z);

    Complex to_complex() const;
    bool is_zero() const { return log_mag.is_inf() && log_mag.sign() < 0; }
    Complex log() const { return Complex(log_mag, arg); }
};

LogComplex operator*(const LogComplex& a, const LogComplex& b);
LogComplex operator/(const LogComplex& a, const LogComplex& b);
// Overflow-free addition: the larger magnitude is factored out.
LogComplex operator+(const LogComplex& a, const LogComplex& b);

// Pairwise (tree) reduction in index order; the result does not depend on how
// the terms were produced, so parallel callers get reproducible sums.
LogComplex pairwise_sum(const std::vector<LogComplex>& terms);

}  // namespace fig8
