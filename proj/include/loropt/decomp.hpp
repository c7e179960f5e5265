#pragma once

#include <utility>
#include <vector>

#include "loropt/mat_core.hpp"

namespace loropt {

struct BargmannTriple {
    double alpha{}, gamma{}, beta{};
};

/// Rotation-boost-rotation factorization M = R(alpha) B(gamma) R(beta),
/// canonicalized with gamma >= 0, alpha in (-pi, pi], and beta = 0 whenever
/// gamma = 0.
BargmannTriple bargmann(const Real2& m, double tol = kTolDet);
Real2 bargmann_reconstruct(const BargmannTriple& t);

/// Polar split M = Sym * Rot with Sym = R(alpha) B(gamma) R(-alpha)
/// symmetric positive definite and Rot = R(alpha + beta).
std::pair<Real2, Real2> symmetric_rotation_split(const Real2& m, double tol = kTolDet);

struct LensElement {
    enum class Kind { Lens, Gap };
    Kind kind{Kind::Gap};
    double value{};  // focal length, or gap length (negative gaps are virtual)
};

struct LensChain {
    std::vector<LensElement> elements;
    int lens_count() const;
    bool has_virtual_gap() const;
    Real2 product() const;
};

/// Realize m as an alternating chain of gaps and thin lenses with at most
/// three lenses.  Gaps with negative length are permitted and flagged as
/// virtual.  For rotation targets the chain is the shear identity
/// T(-tan(phi/4)) L(-1/sin(phi/2)) T(-tan(phi/4)).
LensChain synthesize_lenses(const Real2& m, double tol = kTolDet);

/// The conjugation C = C2 C1 carrying SU(1,1) chains into Sp(2):
/// V = C W C^{-1} and W = C^{-1} V C.
Complex2 su11_sp2_conjugator();
Complex2 su11_sp2_conjugator_inverse();

/// Conjugate an SU(1,1) element into its real Sp(2) form.  If the conjugate
/// has an imaginary residue above 1e-9 the input was not in the subgroup.
Real2 su11_to_sp2(const Complex2& w, double tol = kTolDet);
Complex2 sp2_to_su11(const Real2& v, double tol = kTolDet);

/// theta solving sinh(eta) = cosh(eta) sin(2 theta).
double iwasawa_angle(double eta);

/// R(2 theta + pi/2) B(2 eta) R(2 theta - pi/2) at the constrained theta;
/// equal to the unit lower-triangular ((1,0),(2 sinh eta,1)).
Real2 iwasawa_matrix(double eta);

struct PowerForm {
    enum class Cls { Elliptic, Parabolic, Hyperbolic };
    Cls cls{Cls::Parabolic};
    int sign{1};         // folds trace <= -2 onto the standard representative
    Real2 conjugator{};  // S with sign*M = S R(param) S^{-1} or S X(param) S^{-1}
    double param{};      // full R/X argument; unused for parabolic
    Real2 nilpotent{};   // sign*M - I on the parabolic branch
};

/// Classify a unimodular matrix by |trace| against 2 (parabolic within
/// parabolic_tol) and build the conjugated normal form used for powering.
PowerForm analyze_power(const Real2& m, double tol = kTolDet, double parabolic_tol = 1e-9);

/// The N-th power from a normal form, constant time in N.
Real2 power_from_form(const PowerForm& f, long long n);

/// M^N in closed form: elliptic S R(N theta) S^{-1}, parabolic I + N(M - I),
/// hyperbolic S X(N chi) S^{-1}.
Real2 power_closed_form(const Real2& m, long long n, double tol = kTolDet);

/// Conjugator with the gauge freedom used up: S ~ R(rho) B(mu).  rho = 0
/// recovers the pure-boost form B(mu) core B(-mu).
struct ConjugatorForm {
    double mu{}, rho{};
    bool pure_boost{true};
    Real2 matrix{};
};
ConjugatorForm canonical_conjugator(const PowerForm& f, double tol = 1e-9);

std::array<Complex2, 3> sp2_generators();  // B1, B2, J

/// The upper/lower shear generators X1, X2 and their commutator partner X3,
/// with each X_i resolved as a real combination of the Sp(2) basis (B1, B2, J).
struct ShearGenerators {
    Complex2 x1, x2, x3;
    std::array<std::array<double, 3>, 3> sp2_coefficients{};
    double solve_residual{};
};
ShearGenerators shear_generators();

const char* power_class_name(PowerForm::Cls c);

}  // namespace loropt
