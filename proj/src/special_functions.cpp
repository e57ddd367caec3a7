#include "fig8/special_functions.hpp"

#include "fig8/errors.hpp"

#include <cmath>
#include <vector>

namespace fig8 {

namespace {

constexpr long kGuardBits = 24;

// Coefficients c_n = B_{2n} / (2n+1)! for the series
//   Li_2(z) = u - u^2/4 + sum_{n>=1} c_n u^{2n+1},  u = -log(1 - z),
// cached per thread and per precision.
struct BernoulliCache {
    long bits = 0;
    std::vector<Real> c;
};

const Real& bernoulli_coeff(std::size_t n) {
    thread_local BernoulliCache cache;
    long bits = working_bits();
    if (cache.bits != bits) {
        cache.bits = bits;
        cache.c.clear();
        cache.c.emplace_back(0L);  // unused slot n = 0
    }
    if (cache.c.size() > n) return cache.c[n];
    Real two_pi_sq = 4L * pi() * pi();
    while (cache.c.size() <= n) {
        unsigned long k = cache.c.size();
        Real v = 2L * zeta(2 * k) / (Real(static_cast<long>(2 * k + 1)) * pow(two_pi_sq, Real(static_cast<long>(k))));
        if (k % 2 == 0) v = -v;
        cache.c.push_back(std::move(v));
    }
    return cache.c[n];
}

// Series in u = -log(1-z); valid while |u| < 2 pi, used for |u| <~ 3.4.
Complex dilog_bernoulli(const Complex& z) {
    Complex u = -log(Complex(Real(1L)) - z);
    Complex u2 = u * u;
    Complex sum = u - u2 / Real(4L);
    Complex power = u;
    Real eps = pow(Real(2L), Real(-working_bits() - 4));
    for (std::size_t n = 1; n < 100000; ++n) {
        power *= u2;
        Complex term = power * bernoulli_coeff(n);
        sum += term;
        if (abs(term) <= eps * abs(sum)) return sum;
    }
    throw PrecisionError("dilog: Bernoulli series did not converge");
}

Real pi2_over_6() { return pi() * pi() / Real(6L); }

Complex dilog_core(const Complex& z) {
    if (z.is_zero()) return Complex(Real(0L), Real(0L));
    if (z.im.is_zero() && z.re == Real(1L)) return Complex(pi2_over_6(), Real(0L));
    if (z.im.is_zero() && z.re > Real(1L))
        throw CutError("dilog: argument " + z.re.str(12) + " lies on the branch cut [1, inf)");
    Complex one(Real(1L));
    Real az = abs(z);
    if (az > Real(2L)) {
        // Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        Complex lm = log(-z);
        return -dilog_bernoulli(one / z) - Complex(pi2_over_6()) - lm * lm / Real(2L);
    }
    if (abs(one - z) < Real(0.5)) {
        // Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
        Complex w = one - z;
        return Complex(pi2_over_6()) - log(z) * log(w) - dilog_bernoulli(w);
    }
    return dilog_bernoulli(z);
}

Real reduce_mod(const Real& x, const Real& period) {
    Real k = floor(x / period);
    return x - k * period;
}

}  // namespace

Complex dilog(const Complex& z) {
    if (!z.is_finite()) throw DomainError("dilog: non-finite argument");
    Complex r;
    {
        PrecisionScope guard(working_bits() + kGuardBits);
        r = dilog_core(z);
    }
    return r;
}

Real clausen(const Real& theta) {
    if (!theta.is_finite()) throw DomainError("clausen: non-finite angle");
    Real t;
    {
        PrecisionScope guard(working_bits() + kGuardBits);
        t = reduce_mod(theta, 2L * pi());
        if (t.is_zero() || t == pi()) return Real(0L);
    }
    return dilog(Complex::polar(Real(1L), t)).im;
}

Real lobachevsky(const Real& theta) { return clausen(2L * theta) / Real(2L); }

Real figure_eight_volume() { return 2L * clausen(pi() / Real(3L)); }

Complex s_ratio_fixed_a(double a, double u, int M) {
    if (!(a >= 0.0) || !(u >= 0.0) || M < 1) throw DomainError("s_ratio_fixed_a: need a >= 0, u >= 0, M >= 1");
    Real ra(a), ru(u);
    Complex I = Complex::i();
    Complex gamma = Complex(2L * pi(), -ru) / (2L * (Real(static_cast<long>(M)) + ra));
    Complex one(Real(1L));
    if (u == 0.0) {
        if (a == std::floor(a) && a > 0.0)
            throw DomainError("s_ratio_fixed_a: u = 0 with integral a > 0 degenerates");
        if (a == 0.0) {
            // limit a -> 0 of sin(a pi) / sin(a gamma)
            return Complex(pi()) / gamma;
        }
        // exp(-a pi i) sin(a pi) / (exp(-a gamma i) sin(a gamma))
        Complex num = exp(-(I * (ra * pi()))) * Complex(sin(ra * pi()));
        Complex ag = gamma * ra;
        Complex den = exp(-(I * ag)) * sin(ag);
        return num / den;
    }
    // (exp(u pi / gamma - 2 pi i a) - 1) / (exp(u - 2 a gamma i) - 1)
    Complex num = exp(Complex(ru * pi()) / gamma - I * (2L * pi() * ra)) - one;
    Complex den = exp(Complex(ru) - I * gamma * (2L * ra)) - one;
    return num / den;
}

Complex s_ratio_half_window(int M, int N) {
    if (M < 1 || M > N) throw DomainError("s_ratio_half_window: need 1 <= M <= N");
    Real s = Real(static_cast<long>(M)) / (Real(static_cast<long>(N)) + Real(0.5));
    Complex one(Real(1L));
    return one / (one + Complex::polar(Real(1L), 2L * pi() * (s - Real(0.5))));
}

}  // namespace fig8
