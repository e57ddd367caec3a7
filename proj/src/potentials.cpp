#include "fig8/potentials.hpp"

#include "fig8/errors.hpp"
#include "fig8/jones.hpp"
#include "fig8/special_functions.hpp"

#include <cmath>
#include <optional>

namespace fig8 {

namespace {

Complex one() { return Complex(Real(1L)); }
Complex two_pi_i() { return Complex(Real(0L), 2L * pi()); }

Real s_of(int M, int N) { return Real(static_cast<long>(M)) / (Real(static_cast<long>(N)) + 0.5); }

// e^{w}/(1 - e^{w})
Complex ratio_term(const Complex& w) {
    Complex e = exp(w);
    return e / (one() - e);
}

void check_u(double u, const char* who) {
    if (!(u >= 0.0 && u < max_deformation()))
        throw DomainError(std::string(who) + ": u must lie in [0, log((3+sqrt5)/2))");
}

// Newton polish of a critical point.
Complex polish(const PotentialFamily& f, Complex z) {
    Real tiny = pow(Real(2L), Real(-working_bits() + 16));
    for (int it = 0; it < 8; ++it) {
        Complex g = f.d1(z);
        if (abs(g) < tiny) break;
        z -= g / f.d2(z);
    }
    return z;
}

// Integer shift of z so that 0 < Re z <= 1.
Complex into_unit_strip(Complex z) {
    Real k = floor(z.re);
    z.re = z.re - k;
    if (z.re.is_zero()) z.re = Real(1L);
    return z;
}

}  // namespace

FamilySpec FamilySpec::fixed_a(double u, double a, int M) {
    check_u(u, "fixed_a family");
    if (!(a >= 0.0) || M < 1) throw DomainError("fixed_a family: need a >= 0 and M >= 1");
    FamilySpec f;
    f.kind = FamilyKind::fixed_a;
    f.u = u;
    f.a = a;
    f.M = M;
    return f;
}

FamilySpec FamilySpec::s_family(int M, int N) {
    if (M < 1 || M > N) throw DomainError("s_family: need 1 <= M <= N");
    FamilySpec f;
    f.kind = FamilyKind::s_family;
    f.M = M;
    f.N = N;
    f.s = s_of(M, N);
    return f;
}

FamilySpec FamilySpec::half_family(int M, int N) {
    if (M < 1 || M > N) throw DomainError("half_family: need 1 <= M <= N");
    FamilySpec f = s_family(M, N);
    f.kind = FamilyKind::half_family;
    return f;
}

FamilySpec FamilySpec::limit_s(const Real& s) {
    FamilySpec f;
    f.kind = FamilyKind::limit_s;
    f.s = s;
    return f;
}

FamilySpec FamilySpec::limit_half(const Real& s) {
    FamilySpec f;
    f.kind = FamilyKind::limit_half;
    f.s = s;
    return f;
}

PotentialFamily build_family(const FamilySpec& spec) {
    PotentialFamily fam;
    fam.spec = spec;
    switch (spec.kind) {
    case FamilyKind::fixed_a: {
        Complex xi(Real(spec.u), 2L * pi());
        Real y = Real(spec.a) / (Real(static_cast<long>(spec.M)) + Real(spec.a));
        Real u(spec.u);
        auto A = [=](const Complex& z) { return Complex(u) - (z + Complex(y)) * xi; };
        auto B = [=](const Complex& z) { return Complex(u) + (z - Complex(y)) * xi; };
        fam.value = [=](const Complex& z) {
            return (dilog(exp(A(z))) - dilog(exp(B(z)))) / xi - Complex(u) * z;
        };
        fam.d1 = [=](const Complex& z) {
            return log(one() - exp(A(z))) + log(one() - exp(B(z))) - Complex(u);
        };
        fam.d2 = [=](const Complex& z) { return xi * (ratio_term(A(z)) - ratio_term(B(z))); };
        break;
    }
    case FamilyKind::s_family:
    case FamilyKind::limit_s: {
        Real s = spec.s;
        Complex tpi = two_pi_i();
        Complex lin = tpi * Complex(1L - s);
        auto A = [=](const Complex& z) { return tpi * (Complex(s) - z); };
        auto B = [=](const Complex& z) { return tpi * (z + Complex(s)); };
        fam.value = [=](const Complex& z) { return (dilog(exp(A(z))) - dilog(exp(B(z)))) / tpi + lin * z; };
        fam.d1 = [=](const Complex& z) { return log(one() - exp(A(z))) + log(one() - exp(B(z))) + lin; };
        fam.d2 = [=](const Complex& z) { return tpi * (ratio_term(A(z)) - ratio_term(B(z))); };
        break;
    }
    case FamilyKind::half_family:
    case FamilyKind::limit_half: {
        Real s = spec.s;
        Complex tpi = two_pi_i();
        Complex half(Real(0.5));
        Complex shift = tpi * Complex(s - 0.5);
        auto A = [=](const Complex& x) { return shift - tpi * (x + half); };
        auto B = [=](const Complex& x) { return shift + tpi * (x + half); };
        fam.value = [=](const Complex& x) { return (dilog(exp(A(x))) - dilog(exp(B(x)))) / tpi; };
        fam.d1 = [=](const Complex& x) { return log(one() - exp(A(x))) + log(one() - exp(B(x))); };
        fam.d2 = [=](const Complex& x) { return tpi * (ratio_term(A(x)) - ratio_term(B(x))); };
        break;
    }
    }
    return fam;
}

const char* branch_name(Branch b) { return b == Branch::minus_root ? "minus_root" : "plus_root"; }

SaddleSolution solve_saddle_quadratic(const FamilySpec& spec) {
    if (spec.kind == FamilyKind::half_family || spec.kind == FamilyKind::limit_half)
        throw DomainError("solve_saddle_quadratic: half families use solve_saddle_half");
    PotentialFamily fam = build_family(spec);
    const bool fixed = spec.kind == FamilyKind::fixed_a;

    // Coefficients of  c2 w^2 - c1 w + c0 = 0.
    Complex c2, c1, c0, xi;
    if (fixed) {
        xi = Complex(Real(spec.u), 2L * pi());
        Real y = Real(spec.a) / (Real(static_cast<long>(spec.M)) + Real(spec.a));
        Complex ea = exp(Complex(Real(spec.u)));
        Complex b = exp(xi * Complex(y));
        c2 = ea * b;
        c1 = ea * ea + b * b - ea * b * b;
        c0 = ea * b;
    } else {
        xi = two_pi_i();
        Complex beta = exp(xi * Complex(spec.s));
        c2 = beta;
        c1 = beta * beta + one() - beta;
        c0 = beta;
    }
    Complex disc = sqrt(c1 * c1 - Complex(4L) * c2 * c0);

    // Looser than the final residual: the quadratic gives the point up to rounding.
    Real accept = pow(Real(2L), Real(-working_bits() / 2));
    std::optional<SaddleSolution> best;
    for (Branch br : {Branch::minus_root, Branch::plus_root}) {
        Complex w = (br == Branch::minus_root ? c1 - disc : c1 + disc) / (Complex(2L) * c2);
        Complex base = log(w) / xi;
        // omega fixes z only modulo 2 pi i / xi; scan the sheets that meet 0 < Re z <= 1.
        const int kmax = fixed ? 3 : 0;
        for (int k = -kmax; k <= kmax; ++k) {
            Complex z = fixed ? base + two_pi_i() * Complex(Real(static_cast<long>(k))) / xi
                              : into_unit_strip(base);
            if (!(z.re > 0L && z.re <= 1L)) continue;
            if (abs(fam.d1(z)) > accept) continue;
            z = polish(fam, z);
            Complex v = fam.value(z);
            if (!(v.re > 0L)) continue;
            if (best && !(v.re > best->potential_value.re)) continue;
            SaddleSolution sol;
            sol.z = z;
            sol.omega = exp(z * xi);
            sol.potential_value = v;
            sol.second_derivative = fam.d2(z);
            sol.residual = abs(fam.d1(z));
            sol.branch = br;
            best = std::move(sol);
        }
    }
    if (!best) throw BranchError("solve_saddle_quadratic: no root gives a critical point with positive real potential");
    return *best;
}

SaddleSolution solve_saddle_half_at(const Real& s, double delta) {
    if (!(abs(s - 0.5) < Real(delta))) throw WindowError("solve_saddle_half: s outside (1/2 - delta, 1/2 + delta)");
    Real B = pi() * (s - 0.5);
    auto F = [&](const Real& x) {
        Real A = pi() * (x + 0.5);
        return sin(A + B) * sin(A - B) - 0.25;
    };
    Real lo(0L), hi = Real(5L) / 12L;
    Real flo = F(lo), fhi = F(hi);
    if (flo.sign() * fhi.sign() > 0) throw NoRootError("solve_saddle_half: no sign change on [0, 5/12]");
    while (hi - lo > Real(1e-6)) {
        Real mid = (lo + hi) / 2L;
        Real fm = F(mid);
        if (fm.sign() == flo.sign()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Real x = (lo + hi) / 2L;
    Real tiny = pow(Real(2L), Real(-working_bits() + 8));
    for (int it = 0; it < 60; ++it) {
        // d/dx sin(A+B) sin(A-B) = pi sin(2A)
        Real step = F(x) / (pi() * sin(2L * pi() * (x + 0.5)));
        x -= step;
        if (abs(step) < tiny) break;
    }
    if (x < 0L || x > Real(5L) / 12L) throw NoRootError("solve_saddle_half: Newton left the bracket");

    PotentialFamily fam = build_family(FamilySpec::limit_half(s));
    SaddleSolution sol;
    sol.z = Complex(x);
    sol.omega = exp(two_pi_i() * sol.z);
    sol.potential_value = fam.value(sol.z);
    sol.second_derivative = fam.d2(sol.z);
    sol.residual = abs(fam.d1(sol.z).re);  // only Re chi is stationary on the real line
    sol.branch = Branch::minus_root;
    return sol;
}

SaddleSolution solve_saddle_half(int M, int N, double delta) {
    if (M < 1 || M > N) throw DomainError("solve_saddle_half: need 1 <= M <= N");
    return solve_saddle_half_at(s_of(M, N), delta);
}

Complex phi_u(double u) {
    check_u(u, "phi_u");
    Real c = cosh(Real(u)) - 0.5;
    return Complex(Real(0L), acos(c) - 2L * pi());
}

Complex phi_growth(double u) { return -(phi_u(u) + two_pi_i()); }

Complex chern_simons_S(double u) {
    Complex phi = phi_growth(u);
    Complex cu{Real(u)};
    return dilog(exp(cu - phi)) - dilog(exp(cu + phi)) - cu * phi;
}

Complex phi0_at_saddle(double u) {
    Complex xi(Real(u), 2L * pi());
    Complex z0 = (phi_growth(u) + two_pi_i()) / xi;
    return build_family(FamilySpec::fixed_a(u, 0.0, 1)).value(z0);
}

Complex torsion_T(double u) {
    check_u(u, "torsion_T");
    Real c = exp(Real(u)) + exp(-Real(u));
    Real rad = (c + 1L) * (c - 3L);
    if (rad.is_zero()) throw DomainError("torsion_T: radicand vanishes");
    return Complex(2L) / sqrt(Complex(rad));
}

namespace {
void check_theta_window(const Real& s, double zeta) {
    if (!(abs(s - 1L) < Real(zeta))) throw WindowError("theta/xi: s outside (1 - zeta, 1 + zeta)");
}
}  // namespace

Complex theta_s(const Real& s, double zeta) {
    check_theta_window(s, zeta);
    return solve_saddle_quadratic(FamilySpec::limit_s(s)).potential_value;
}

Complex xi_s(const Real& s, double zeta) {
    check_theta_window(s, zeta);
    SaddleSolution sol = solve_saddle_quadratic(FamilySpec::limit_s(s));
    Complex beta = exp(two_pi_i() * Complex(s));
    return two_pi_i() * beta * (one() / sol.omega - sol.omega);
}

Real psi_s(const Real& s, double delta) { return solve_saddle_half_at(s, delta).potential_value.re; }

Complex upsilon_s(const Real& s, double delta) {
    SaddleSolution sol = solve_saddle_half_at(s, delta);
    Complex rot = exp(two_pi_i() * Complex(s - 0.5));
    return two_pi_i() * rot * (one() / sol.omega - sol.omega);
}

Complex h_function(const Complex& x, const Complex& y) {
    return dilog(one() / (x * y)) - dilog(x / y) + log(x) * log(y);
}

std::vector<DiffLemmaRow> diff_lemma_checks(double u, double a, const std::vector<int>& M_list, const Complex& z) {
    std::vector<DiffLemmaRow> rows;
    Complex xi(Real(u), 2L * pi());
    Complex cu{Real(u)};
    PotentialFamily phi0 = build_family(FamilySpec::fixed_a(u, 0.0, 1));
    Complex limit = Complex(Real(a)) * (log(one() - exp(cu - z * xi)) - log(one() - exp(cu + z * xi)));
    Complex z0 = solve_saddle_quadratic(FamilySpec::fixed_a(u, 0.0, 1)).z;
    Complex v0 = phi0.value(z0);
    Complex phi0_z = phi0.value(z);
    for (int M : M_list) {
        DiffLemmaRow row;
        row.M = M;
        Real Ma = Real(static_cast<long>(M)) + Real(a);
        if (a == 0.0) {
            row.diff1_deviation = Real(0L);
            row.diff2_magnitude = Real(0L);
        } else {
            PotentialFamily phiM = build_family(FamilySpec::fixed_a(u, a, M));
            row.diff1_deviation = abs(Complex(Ma) * (phiM.value(z) - phi0_z) - limit);
            Complex zM = solve_saddle_quadratic(FamilySpec::fixed_a(u, a, M)).z;
            row.diff2_magnitude = abs(Complex(Ma) * (phi0.value(zM) - v0));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

GeometricConstants geometric_constants() {
    GeometricConstants g;
    g.vol = figure_eight_volume();
    g.torsion_mag = abs(torsion_T(0.0));
    g.xi_at_1 = 2L * pi() * sqrt(Real(3L));
    return g;
}

}  // namespace fig8
