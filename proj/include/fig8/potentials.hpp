#pragma once

#include "fig8/mp.hpp"

#include <functional>
#include <vector>

namespace fig8 {

enum class FamilyKind { fixed_a, s_family, half_family, limit_s, limit_half };

// Parameters of a potential family.  For the s-type families only s matters;
// s_family(M, N) fixes s = M / (N + 1/2).
struct FamilySpec {
    FamilyKind kind = FamilyKind::limit_s;
    double u = 0.0;
    double a = 0.0;
    int M = 0;
    int N = 0;
    Real s;

    static FamilySpec fixed_a(double u, double a, int M);
    static FamilySpec s_family(int M, int N);
    static FamilySpec half_family(int M, int N);
    static FamilySpec limit_s(const Real& s);
    static FamilySpec limit_half(const Real& s);
};

// fixed_a:      Phi_M(z)  = (Li2(e^{u-(z+y)xi}) - Li2(e^{u+(z-y)xi}))/xi - u z,  y = a/(M+a)
// s families:   Phi~(z)   = (Li2(e^{-2pi i z + 2pi i s}) - Li2(e^{2pi i z + 2pi i s}))/(2pi i) + 2pi i (1-s) z
// half families: chi(x)   = (Li2(e^{-2pi i (x+1/2) + 2pi i (s-1/2)}) - Li2(e^{2pi i (x+1/2) + 2pi i (s-1/2)}))/(2pi i)
struct PotentialFamily {
    FamilySpec spec;
    std::function<Complex(const Complex&)> value;
    std::function<Complex(const Complex&)> d1;
    std::function<Complex(const Complex&)> d2;
};

PotentialFamily build_family(const FamilySpec& spec);

enum class Branch { minus_root, plus_root };
const char* branch_name(Branch b);

struct SaddleSolution {
    Complex z;
    Complex omega;  // e^{z xi} (fixed_a) or e^{2 pi i z}
    Complex potential_value;
    Complex second_derivative;
    Real residual;
    Branch branch = Branch::minus_root;
};

// Saddle of a fixed_a or s-type family from its quadratic in omega.  Both roots
// are tried; the one that is a true critical point (not one shifted by a log
// branch) with positive real potential is kept and polished by Newton.
SaddleSolution solve_saddle_quadratic(const FamilySpec& spec);

// Real critical point x of Re chi on [0, 5/12]:
//   sin(A + B) sin(A - B) = 1/4,  A = pi (x + 1/2),  B = pi (s - 1/2).
SaddleSolution solve_saddle_half(int M, int N, double delta = 0.05);
SaddleSolution solve_saddle_half_at(const Real& s, double delta = 0.05);

// Branch of arccosh(cosh u - 1/2) continuous in u with phi(0) = -5 pi i / 3.
Complex phi_u(double u);
// The branch -(phi_u + 2 pi i) that governs the growth of J_N(e^{xi/N}).
Complex phi_growth(double u);
// S(u) = Li2(e^{u - phi}) - Li2(e^{u + phi}) - u phi evaluated at phi_growth(u).
Complex chern_simons_S(double u);
// Phi_0 at its growth saddle z_0 = (phi_growth(u) + 2 pi i)/xi; S = xi Phi_0(z_0) + 2 pi i u.
Complex phi0_at_saddle(double u);
// T(u) = 2 / sqrt((e^u + e^-u + 1)(e^u + e^-u - 3)), principal root.
Complex torsion_T(double u);

// s-window functions.  Theta and Xi accept s in (1 - zeta, 1 + zeta): the
// saddle continues analytically through s = 1, which central differences need.
Complex theta_s(const Real& s, double zeta = 0.05);
Complex xi_s(const Real& s, double zeta = 0.05);
Real psi_s(const Real& s, double delta = 0.05);
Complex upsilon_s(const Real& s, double delta = 0.05);

// H(x, y) = Li2(1/(xy)) - Li2(x/y) + log x log y.
Complex h_function(const Complex& x, const Complex& y);

struct DiffLemmaRow {
    int M = 0;
    Real diff1_deviation;  // |(M+a)(Phi_M(z) - Phi_0(z)) - a[log(1-e^{u-z xi}) - log(1-e^{u+z xi})]|
    Real diff2_magnitude;  // |(M+a)(Phi_0(z_M) - Phi_0(z_0))|
};
std::vector<DiffLemmaRow> diff_lemma_checks(double u, double a, const std::vector<int>& M_list, const Complex& z);

struct GeometricConstants {
    Real vol;
    Real torsion_mag;  // |T(0)| = 2/sqrt(3)
    Real xi_at_1;      // |Xi(1)| = 2 pi sqrt(3)
};
GeometricConstants geometric_constants();

}  // namespace fig8
