#pragma once

// Thin RAII layer over MPFR.  Every new value is created at the calling
// thread's working precision, which PrecisionScope sets and restores.

#include <mpfr.h>

#include <complex>
#include <string>

namespace fig8 {

long working_bits();

class PrecisionScope {
public:
    explicit PrecisionScope(long bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    long saved_;
};

class Real {
public:
    Real();
    Real(double x);
    Real(long x);
    Real(int x) : Real(static_cast<long>(x)) {}
    explicit Real(const std::string& decimal);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Scientific notation with the requested number of significant digits.
    std::string str(int digits) const;

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    static Real inf(int sign);

private:
    mpfr_t v_;
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

// Exact-match scalar overloads keep mixed expressions unambiguous.
#define FIG8_SCALAR_OPS(T)                                                       \
    inline Real operator+(T a, const Real& b) { return Real(a) + b; }            \
    inline Real operator+(const Real& a, T b) { return a + Real(b); }            \
    inline Real operator-(T a, const Real& b) { return Real(a) - b; }            \
    inline Real operator-(const Real& a, T b) { return a - Real(b); }            \
    inline Real operator*(T a, const Real& b) { return Real(a) * b; }            \
    inline Real operator*(const Real& a, T b) { return a * Real(b); }            \
    inline Real operator/(T a, const Real& b) { return Real(a) / b; }            \
    inline Real operator/(const Real& a, T b) { return a / Real(b); }            \
    inline bool operator<(const Real& a, T b) { return a < Real(b); }            \
    inline bool operator>(const Real& a, T b) { return a > Real(b); }            \
    inline bool operator<=(const Real& a, T b) { return a <= Real(b); }          \
    inline bool operator>=(const Real& a, T b) { return a >= Real(b); }
FIG8_SCALAR_OPS(long)
FIG8_SCALAR_OPS(double)
#undef FIG8_SCALAR_OPS

Real pi();
Real ln2();
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real acos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real floor(const Real& x);
Real zeta(unsigned long n);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// x reduced into (-pi, pi].
Real wrap_angle(const Real& x);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0L) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0L) {}
    Complex(int r) : re(static_cast<long>(r)), im(0L) {}
    Complex(long r) : re(r), im(0L) {}
    Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    static Complex i();
    static Complex polar(const Real& r, const Real& theta);

    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Real abs(const Complex& z);
Real norm(const Complex& z);
// Principal argument in (-pi, pi]; a zero imaginary part counts as +0.
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex tan(const Complex& z);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);

}  // namespace fig8
