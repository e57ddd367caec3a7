#include "fig8/mp.hpp"

#include <cstdlib>
#include <memory>
#include <utility>

namespace fig8 {

namespace {
thread_local long g_bits = 256;
}

long working_bits() { return g_bits; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_bits) {
    g_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}
PrecisionScope::~PrecisionScope() { g_bits = saved_; }

Real::Real() {
    mpfr_init2(v_, g_bits);
    mpfr_set_zero(v_, 1);
}
Real::Real(double x) {
    mpfr_init2(v_, g_bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
}
Real::Real(long x) {
    mpfr_init2(v_, g_bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
}
Real::Real(const std::string& decimal) {
    mpfr_init2(v_, g_bits);
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
}
Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
    if (digits < 1) digits = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string out = buf ? buf : "";
    mpfr_free_str(buf);
    return out;
}

Real Real::inf(int sign) {
    Real r;
    mpfr_set_inf(r.v_, sign);
    return r;
}

Real& Real::operator+=(const Real& o) {
    Real r;
    mpfr_add(r.get(), v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}
Real& Real::operator-=(const Real& o) {
    Real r;
    mpfr_sub(r.get(), v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}
Real& Real::operator*=(const Real& o) {
    Real r;
    mpfr_mul(r.get(), v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}
Real& Real::operator/=(const Real& o) {
    Real r;
    mpfr_div(r.get(), v_, o.v_, MPFR_RNDN);
    return *this = std::move(r);
}

#define UNARY(name, fn)                          \
    Real name(const Real& x) {                   \
        Real r;                                  \
        fn(r.get(), x.get(), MPFR_RNDN);         \
        return r;                                \
    }

Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.get(), a.get(), MPFR_RNDN);
    return r;
}
Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

Real pi() {
    Real r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}
Real ln2() {
    Real r;
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}

UNARY(abs, mpfr_abs)
UNARY(sqrt, mpfr_sqrt)
UNARY(exp, mpfr_exp)
UNARY(expm1, mpfr_expm1)
UNARY(log, mpfr_log)
UNARY(log1p, mpfr_log1p)
UNARY(sin, mpfr_sin)
UNARY(cos, mpfr_cos)
UNARY(tan, mpfr_tan)
UNARY(sinh, mpfr_sinh)
UNARY(cosh, mpfr_cosh)
UNARY(acos, mpfr_acos)
#undef UNARY

Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.get(), x.get());
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}
Real pow(const Real& x, const Real& y) {
    Real r;
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}
Real zeta(unsigned long n) {
    Real r;
    mpfr_zeta_ui(r.get(), n, MPFR_RNDN);
    return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real wrap_angle(const Real& x) {
    Real two_pi = 2L * pi();
    Real k = floor((pi() - x) / two_pi);
    Real r = x + k * two_pi;  // now in (-pi, pi]
    if (r <= -pi()) r += two_pi;
    if (r > pi()) r -= two_pi;
    return r;
}

// ---- Complex ----

Complex Complex::i() { return Complex(Real(0L), Real(1L)); }

Complex Complex::polar(const Real& r, const Real& theta) {
    Real s, c;
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return Complex(r * c, r * s);
}

Complex& Complex::operator+=(const Complex& o) { return *this = *this + o; }
Complex& Complex::operator-=(const Complex& o) { return *this = *this - o; }
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
Complex operator/(const Complex& a, const Complex& b) {
    // Smith's scaling keeps intermediate products in range.
    if (abs(b.re) >= abs(b.im)) {
        Real t = b.im / b.re;
        Real d = b.re + b.im * t;
        return Complex((a.re + a.im * t) / d, (a.im - a.re * t) / d);
    }
    Real t = b.re / b.im;
    Real d = b.re * t + b.im;
    return Complex((a.re * t + a.im) / d, (a.im * t - a.re) / d);
}
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }

Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) {
    if (z.im.is_zero()) return z.re.sign() < 0 ? pi() : Real(0L);
    return atan2(z.im, z.re);
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
    if (z.is_zero()) return Complex(Real(0L), Real(0L));
    Real r = abs(z);
    Real a = sqrt((r + abs(z.re)) / Real(2L));
    if (z.re.sign() >= 0) return Complex(a, z.im / (2L * a));
    Real b = z.im.sign() < 0 ? -a : a;
    return Complex(abs(z.im) / (2L * a), b);
}

Complex pow(const Complex& z, const Complex& w) {
    if (z.is_zero()) return Complex(Real(0L), Real(0L));
    return exp(w * log(z));
}

Complex sin(const Complex& z) {
    return Complex(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}
Complex cos(const Complex& z) {
    return Complex(cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im)));
}
Complex tan(const Complex& z) { return sin(z) / cos(z); }
Complex sinh(const Complex& z) {
    return Complex(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}
Complex cosh(const Complex& z) {
    return Complex(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im));
}

}  // namespace fig8
