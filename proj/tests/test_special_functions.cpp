#include <doctest.h>

#include "fig8/errors.hpp"
#include "fig8/special_functions.hpp"

#include <cmath>
#include <complex>

using namespace fig8;
using cplx = std::complex<double>;

namespace {

Complex C(double re, double im) { return Complex(Real(re), Real(im)); }

bool close(const Complex& a, const Complex& b, double tol) { return abs(a - b) < Real(tol); }

}  // namespace

TEST_CASE("dilog matches reference values") {
    PrecisionScope scope(256);
    struct Ref {
        Complex z;
        const char* re;
        const char* im;
    };
    const Ref refs[] = {
        {C(-3, 0.5), "-1.94817179165384767404150372602", "0.230504603210785136288973193607"},
        {C(0.9, 0.3), "1.10498635152421572455039507601", "0.617053028084861983849420598243"},
        {C(0.5, 0), "0.58224052646501250590265632016", "0"},
        {C(-1, 0), "-0.822467033424113218236207583323", "0"},
        {C(2, 1), "1.18668853700005783111280010041", "2.40774076934577200171390527552"},
        {C(0.3, -4), "-1.25877624004666935627174664345", "-2.53518658565912087691867109796"},
    };
    for (const auto& r : refs) {
        Complex v = dilog(r.z);
        CHECK(close(v, Complex(Real(std::string(r.re)), Real(std::string(r.im))), 1e-28));
    }
}

TEST_CASE("dilog special points and cut") {
    PrecisionScope scope(256);
    CHECK(dilog(Complex(0L)).is_zero());
    CHECK(close(dilog(Complex(1L)), Complex(pi() * pi() / 6L), 1e-70));
    CHECK(close(dilog(Complex(-1L)), Complex(-pi() * pi() / 12L), 1e-70));
    CHECK_THROWS_AS(dilog(Complex(Real(2L))), CutError);
    // Just off the cut the imaginary part jumps by 2 pi i log z.
    Complex above = dilog(C(2, 1e-30)), below = dilog(C(2, -1e-30));
    CHECK(abs((above - below).im - 2L * pi() * log(Real(2L))) < Real(1e-25));
}

TEST_CASE("dilog derivative agrees with -log(1-z)/z") {
    PrecisionScope scope(256);
    Real h("1e-20");
    for (int k = 0; k < 20; ++k) {
        double t = 0.3 + 0.31 * k;
        Complex z = C(1.7 * std::cos(t) - 0.2, 1.3 * std::sin(t));
        Complex fd = (dilog(z + Complex(h)) - dilog(z - Complex(h))) / Complex(2L * h);
        Complex exact = -log(Complex(1L) - z) / z;
        CHECK(abs(fd - exact) < Real(1e-30));
    }
}

TEST_CASE("clausen, lobachevsky and the volume") {
    PrecisionScope scope(256);
    CHECK(abs(clausen(Real(1.0)) - Real(std::string("1.01395913236076850429457433889"))) < Real(1e-28));
    CHECK(abs(clausen(Real(2.5)) - Real(std::string("0.433598203235532779364732860105"))) < Real(1e-28));
    Real vol = figure_eight_volume();
    CHECK(abs(vol - Real(std::string("2.0298832128193072500424051085490406"))) < Real(1e-33));
    CHECK(abs(vol - 6L * lobachevsky(pi() / 3L)) < Real(1e-70));
    for (double t : {0.1, 0.7, 1.9, 3.0, 5.5}) {
        Real th(t);
        CHECK(abs(clausen(th) + clausen(-th)) < Real(1e-70));                 // odd
        CHECK(abs(clausen(th) - clausen(th + 2L * pi())) < Real(1e-70));      // periodic
        CHECK(abs(clausen(th) - 2L * lobachevsky(th / 2L)) < Real(1e-12));
    }
    CHECK(clausen(Real(0L)).is_zero());
    CHECK(abs(clausen(pi())) < Real(1e-70));
}

TEST_CASE("quantum dilogarithm functional equation") {
    PrecisionContext ctx;
    double worst = 0.0;
    for (int N : {10, 25})
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) {
                cplx g = M_PI / (N + 0.5);
                cplx z(-2.0 + 1.3 * i, -0.4 + 0.4 * j);
                cplx lhs = (1.0 + std::exp(cplx(0, 1) * z)) * quantum_dilog(z + g, g, ctx);
                cplx rhs = quantum_dilog(z - g, g, ctx);
                worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
            }
    CHECK(worst < 1e-10);
}

TEST_CASE("quantum dilogarithm ratios") {
    PrecisionContext ctx;
    for (int N : {5, 10, 20}) {
        cplx g = M_PI / (N + 0.5);
        cplx q = quantum_dilog(-M_PI + g, g, ctx) / quantum_dilog(M_PI - g, g, ctx);
        CHECK(std::abs(q / (N + 0.5) - 1.0) < 1e-6);
        cplx h = quantum_dilog(g, g, ctx) / quantum_dilog(-g, g, ctx);
        CHECK(std::abs(h - 0.5) < 1e-8);
    }
    CHECK(std::abs(cr_reference_integral(0.5) + 2 * std::log(2.0)) < 1e-8);
    CHECK(std::abs(cr_reference_integral(0.2) + 2 * std::log(2.0)) < 1e-8);
}

TEST_CASE("closed-form S ratios agree with quadrature") {
    PrecisionContext ctx;
    PrecisionScope scope(256);
    const cplx I(0, 1);
    for (auto [a, u, M] : {std::tuple{0.5, 0.3, 8}, {0.5, 0.0, 8}, {1.5, 0.3, 8}, {0.25, 0.2, 6}}) {
        cplx g = cplx(2 * M_PI, -u) / (2.0 * (M + a));
        cplx quad = quantum_dilog(-M_PI - I * u - (2 * a - 1) * g, g, ctx) /
                    quantum_dilog(M_PI - I * u - (2 * a + 1) * g, g, ctx);
        CHECK(std::abs(quad - s_ratio_fixed_a(a, u, M).to_std()) < 1e-8 * std::abs(quad));
    }
    CHECK_THROWS_AS(s_ratio_fixed_a(1.0, 0.0, 8), DomainError);
    for (auto [M, N] : {std::pair{5, 9}, {10, 20}, {11, 20}}) {
        cplx g = M_PI / (N + 0.5);
        cplx w = 2.0 * (M - (N + 0.5) / 2) * g;
        cplx quad = quantum_dilog(w + g, g, ctx) / quantum_dilog(w - g, g, ctx);
        CHECK(std::abs(quad - s_ratio_half_window(M, N).to_std()) < 1e-8);
    }
}

TEST_CASE("correction term stays inside its envelope") {
    PrecisionContext ctx;
    PrecisionScope scope(256);
    for (int N : {20, 80}) {
        cplx g = M_PI / (N + 0.5);
        for (double x : {-1.5, 0.0, 0.5, 2.0}) {
            Complex z{Real(x)};
            Complex I = quantum_dilog_correction(z, Complex(cplx(g)), ctx);
            CHECK(abs(I).to_double() < correction_bound(cplx(x), g));
            // S = exp(Li2(-e^{iz})/(2 i gamma) + I)
            Complex li = dilog(-exp(Complex(Real(0L), Real(x))));
            cplx rebuilt = std::exp(li.to_std() / (2.0 * cplx(0, 1) * g) + I.to_std());
            CHECK(std::abs(rebuilt / quantum_dilog(cplx(x), g, ctx) - 1.0) < 1e-9);
        }
    }
}
