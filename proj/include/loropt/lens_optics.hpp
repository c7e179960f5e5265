#pragma once

#include "loropt/mat_core.hpp"

namespace loropt {

/// Thin lens, ((1,0),(-1/f,1)); f must be nonzero.
Real2 lens(double f);

/// Free propagation over z, ((1,z),(0,1)).
Real2 translate(double z);

/// translate(z2) * lens(f) * translate(z1).
Real2 one_lens(double z1, double f, double z2);

/// True when 1/z1 + 1/z2 = 1/f, i.e. the upper-right element vanishes.
bool is_imaging(double z1, double f, double z2, double tol = 1e-12);

struct RaySystem {
    double z1{}, f{}, z2{};
    /// z/f for the symmetric case; requires z1 == z2.
    double x() const;
};

/// Dimensionless one-lens core, C = ((x-1, x-2),(x, x-1)); det is 1 exactly.
Real2 core(double x);

/// -D core(z/f) D^{-1} with D = diag(sqrt z, 1/sqrt z): the dimensionless
/// reduction of the symmetric system; equals one_lens(z, f, z).  Requires
/// z > 0.
Real2 one_lens_via_core(double z, double f);

/// Window around x = 2 where the factorization is routed to the parabolic
/// branch instead of the diverging (eta, phi) pair.
inline constexpr double kParabolicWindow = 1e-6;

struct CoreFactorization {
    enum class Branch { Elliptic, Hyperbolic, Parabolic };
    Branch branch{Branch::Parabolic};
    /// exp(2 eta) = x/(2-x) on the elliptic branch, x/(x-2) on the
    /// hyperbolic one; diverges as x -> 2.
    double eta{};
    /// phi in (0, 2pi) (elliptic) or chi > 0 (hyperbolic); 0 for parabolic.
    double angle{};
    Real2 reconstruction{};
};

/// Factor core(x) as a boosted rotation B(-eta) R(phi) B(eta) for 0 < x < 2
/// or a boosted x-boost B(-eta) X(chi) B(eta) for x > 2.  Inside the
/// parabolic window the exact triangular matrix ((1,0),(x,1)) is returned
/// instead of the ill-conditioned pair.  x <= 0 is a domain error.
CoreFactorization factor_core(double x);

const char* branch_name(CoreFactorization::Branch b);

}  // namespace loropt
