#include <doctest.h>

#include "fig8/errors.hpp"
#include "fig8/jones.hpp"
#include "fig8/special_functions.hpp"
#include "fig8/verify.hpp"

#include <cmath>

using namespace fig8;

namespace {

double rel_dev(const LogComplex& a, const LogComplex& b) {
    PrecisionScope scope(256);
    return abs((a / b).to_complex() - Complex(1L)).to_double();
}

}  // namespace

TEST_CASE("contours") {
    Contour p = contour_plus(0.1, 0.0);
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.label == ContourLabel::c_plus);
    CHECK(std::abs(p.vertices.front() - std::complex<double>(0.9, 0.0)) < 1e-15);
    CHECK(std::abs(p.vertices.back() - std::complex<double>(0.1, 0.0)) < 1e-15);
    CHECK(p.length() == doctest::Approx(2.8));
    Contour m = contour_minus(0.1, 0.0);
    CHECK(m.label == ContourLabel::c_minus);
    CHECK(m.length() == doctest::Approx(2.8));
    RootSpec s(5, 0.5, 0.0);
    CHECK(default_epsilon(s) == doctest::Approx(1.5 / 11.0));
}

TEST_CASE("contour integral reproduces the Habiro sum") {
    PrecisionContext ctx;
    PrecisionScope scope(256);
    for (auto [M, a, u] : {std::tuple{3, 0.5, 0.0}, {5, 1.5, 0.3}, {8, 0.5, 0.3}}) {
        RootSpec spec(M, a, u);
        Complex c = contour_jones(spec, ctx);
        Complex e = colored_jones_exact(spec, ctx).value;
        CHECK(abs(c - e) < Real(1e-5) * abs(e));
    }
    CHECK_THROWS_AS(contour_jones(RootSpec(20, 0.5, 0.0), ctx), DomainError);
}

TEST_CASE("Laplace estimate") {
    PrecisionScope scope(256);
    // Gaussian: Phi = -z^2/2 with its saddle at 0
    FamilySpec gs;
    PotentialFamily g{gs, [](const Complex& z) { return Complex(Real(-0.5)) * z * z; },
                      [](const Complex& z) { return -z; }, [](const Complex&) { return Complex(-1L); }};
    SaddleSolution s0;
    s0.z = Complex(0L);
    s0.potential_value = Complex(0L);
    s0.second_derivative = Complex(-1L);
    s0.residual = Real(0L);
    auto one = [](const Complex&) { return Complex(1L); };
    LogComplex L = laplace_estimate(g, s0, one, 100.0);
    CHECK(std::abs(L.to_complex().re.to_double() - std::sqrt(2 * M_PI / 100)) < 1e-4);
    LogComplex D = saddle_segment_integral(g, s0, one, 100.0, 1.0);
    CHECK(rel_dev(D, L) < 1e-4);
    // rotating onto the ascent direction breaks the hypothesis
    CHECK_THROWS_AS(laplace_estimate(g, s0, one, 100.0, std::complex<double>(0.0, 1.0)), HypothesisError);

    PotentialFamily fam = build_family(FamilySpec::limit_s(Real(1L)));
    SaddleSolution sol = solve_saddle_quadratic(FamilySpec::limit_s(Real(1L)));
    double prev = 1.0;
    for (int N : {40, 80, 160}) {
        double scale = N + 0.5;
        double dev = rel_dev(saddle_segment_integral(fam, sol, one, scale, 0.15), laplace_estimate(fam, sol, one, scale));
        if (N == 40) CHECK(dev < 0.05);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("Riemann sum against the integral") {
    auto f = [](double x) { return -(x - 0.4) * (x - 0.4); };
    auto h = [](double) { return 1.0; };
    auto h2 = [](double) { return 2.0; };
    RiemannComparison r100 = riemann_vs_integral(f, h, 0.0, 1.0, 100);
    RiemannComparison r400 = riemann_vs_integral(f, h, 0.0, 1.0, 400);
    CHECK(std::abs(r400.ratio - 1) < std::abs(r100.ratio - 1));
    CHECK(std::abs(r100.ratio - 1) < 1e-6);
    CHECK_FALSE(r100.boundary_maximum);
    RiemannComparison d = riemann_vs_integral(f, h2, 0.0, 1.0, 100);
    CHECK(d.sum == doctest::Approx(2 * r100.sum).epsilon(1e-14));
    CHECK(d.integral == doctest::Approx(2 * r100.integral).epsilon(1e-14));
    CHECK(d.ratio == doctest::Approx(r100.ratio).epsilon(1e-14));

    auto lin = [](double x) { return -(1 - x); };
    CHECK_THROWS_AS(riemann_vs_integral(lin, h, 0.0, 1.0, 100), HypothesisError);
    // quadratic maximum at the endpoint: half of the interior Laplace value
    auto q = [](double x) { return -(1 - x) * (1 - x); };
    RiemannComparison b = riemann_vs_integral(q, h, 0.0, 1.0, 400, true);
    CHECK(b.boundary_maximum);
    CHECK(b.laplace == doctest::Approx(0.5 * std::sqrt(M_PI / 400.5)).epsilon(1e-6));
    CHECK(b.integral / b.laplace == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("window report") {
    PrecisionContext ctx;
    WindowReport w = window_dominance_report(101, ctx, 0.05, 0.05, 4);
    PrecisionScope scope(256);
    CHECK(w.N == 50);
    Real h(50.5);
    CHECK(abs(w.predicted_ratio - 2L * h * h) < Real(1e-40) * w.predicted_ratio);
    CHECK(abs((w.predicted_near_one / w.predicted_near_half).log_mag - log(w.predicted_ratio)) < Real(1e-50));
    CHECK(abs(w.empirical_ratio_log - (w.near_one / w.near_half).log_mag) < Real(1e-60));
    CHECK(w.near_one.log_mag > w.near_half.log_mag);
}
