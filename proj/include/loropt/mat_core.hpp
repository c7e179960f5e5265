#pragma once

#include <array>

#include "loropt/mat2.hpp"
#include "loropt/mat4.hpp"

namespace loropt {

// Elementary group elements.  Half-angle convention throughout: the argument
// is the group parameter, the matrix entries carry half of it.

/// diag(e^{i phi/2}, e^{-i phi/2}) - relative phase shift between two beams.
Complex2 phase(double phi);

/// ((cos th/2, -sin th/2),(sin th/2, cos th/2)) - beam mixer / rotation.
Real2 rotation(double theta);

/// diag(e^{eta/2}, e^{-eta/2}) - relative attenuation / z-boost.
Real2 boost_z(double eta);

/// ((cosh ch/2, sinh ch/2),(sinh ch/2, cosh ch/2)) - x-boost.
Real2 boost_x(double chi);

Complex2 commutator(const Complex2& a, const Complex2& b);
Complex4 commutator(const Complex4& a, const Complex4& b);

/// Pauli matrices in the basis used throughout this library: sigma1 is the
/// diagonal one and sigma3 the imaginary one.  Textbook correspondence
/// (cyclic relabelling):
///     here sigma1 = textbook sigma3
///     here sigma2 = textbook sigma1
///     here sigma3 = textbook sigma2
std::array<Complex2, 3> pauli();

/// Spinor-representation generators: J_i = sigma_i/2, K_i = i sigma_i/2,
/// plus the dotted boosts Kdot_i = -K_i.
struct SpinorGenerators {
    std::array<Complex2, 3> J;
    std::array<Complex2, 3> K;
    std::array<Complex2, 3> Kdot;
};

/// Vector-representation generators acting on (t, z, x, y).
struct VectorGenerators {
    std::array<Complex4, 3> J;
    std::array<Complex4, 3> K;
};

SpinorGenerators spinor_generators();
VectorGenerators vector_generators();

/// Max entrywise defect over the full commutator table of the representation:
/// [J_i,J_j] = i e_ijk J_k, [K_i,K_j] = -i e_ijk J_k, [J_i,K_j] = i e_ijk K_k
/// (the spinor check includes the dotted boosts).  Zero up to rounding.
double spinor_table_defect();
double vector_table_defect();

/// exp{-(i/2) sum_k (theta_k + i eta_k) sigma_k}: the general spinor element.
Complex2 exp_generator_spinor(const std::array<double, 3>& theta,
                              const std::array<double, 3>& eta);

/// exp{-i sum_k (theta_k J_k + eta_k K_k)} in the vector representation.
Lorentz4 exp_generator_vector(const std::array<double, 3>& theta,
                              const std::array<double, 3>& eta);

/// ((t+z, x-iy),(x+iy, t-z)); Hermitian with det = t^2 - z^2 - x^2 - y^2.
Complex2 coherency_from_fourvector(const FourVector& v);

/// Inverse map; input must be Hermitian within tol (relative).
FourVector fourvector_from_coherency(const Complex2& c, double tol = kTolHerm);

/// The Lorentz transformation induced by C' = L C L^dagger, computed by
/// pushing the four basis vectors through the conjugation.  Requires
/// det L = 1 within tol.  Two-to-one: L and -L induce the same matrix.
Lorentz4 induced_lorentz(const Complex2& l, double tol = kTolDet);

}  // namespace loropt
