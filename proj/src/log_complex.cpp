#include "fig8/log_complex.hpp"

namespace fig8 {

LogComplex LogComplex::from(const Complex& z) {
    if (z.is_zero()) return LogComplex();
    return LogComplex(fig8::log(abs(z)), fig8::arg(z));
}

LogComplex LogComplex::from_real(const Real& x) { return from(Complex(x)); }

LogComplex LogComplex::from_log(const Complex& log_z) { return LogComplex(log_z.re, log_z.im); }

Complex LogComplex::to_complex() const {
    if (is_zero()) return Complex(Real(0L), Real(0L));
    return Complex::polar(exp(log_mag), arg);
}

LogComplex operator*(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return LogComplex();
    return LogComplex(a.log_mag + b.log_mag, a.arg + b.arg);
}

LogComplex operator/(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero()) return LogComplex();
    return LogComplex(a.log_mag - b.log_mag, a.arg - b.arg);
}

LogComplex operator+(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogComplex& big = a.log_mag >= b.log_mag ? a : b;
    const LogComplex& small = a.log_mag >= b.log_mag ? b : a;
    // big * (1 + small/big)
    Complex w = Complex::polar(exp(small.log_mag - big.log_mag), small.arg - big.arg);
    Complex one_plus = Complex(Real(1L)) + w;
    if (one_plus.is_zero()) return LogComplex();
    return LogComplex(big.log_mag + fig8::log(abs(one_plus)), big.arg + fig8::arg(one_plus));
}

LogComplex pairwise_sum(const std::vector<LogComplex>& terms) {
    if (terms.empty()) return LogComplex();
    std::vector<LogComplex> level = terms;
    while (level.size() > 1) {
        std::vector<LogComplex> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level.front();
}

}  // namespace fig8
