#pragma once

#include <vector>

#include "loropt/mat_core.hpp"

namespace loropt {

/// Two complex amplitudes with the common propagation phase dropped.
struct JonesVector {
    cplx psi1{}, psi2{};
};

/// Time-averaged correlations S_ij = <psi_i* psi_j>.
struct CoherencyMatrix {
    cplx s11{}, s12{}, s21{}, s22{};
    cplx det() const { return s11 * s22 - s12 * s21; }
};

struct StokesVector {
    double s0{}, s1{}, s2{}, s3{};
    double minkowski_norm2() const { return s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3; }
};

/// Matrix action on the amplitudes; m must be invertible.
JonesVector apply_jones(const Complex2& m, const JonesVector& v);

/// Coherency of a single pure state (rank one).
CoherencyMatrix coherency_of(const JonesVector& v);

/// Convex mixture: S_ij = sum_k w_k psi_i* psi_j / sum_k w_k.
CoherencyMatrix coherency_mix(const std::vector<double>& weights,
                              const std::vector<JonesVector>& states);

/// S0 = S11 + S22, S1 = S11 - S22, S2 = S12 + S21, S3 = -i (S12 - S21).
StokesVector stokes_from_coherency(const CoherencyMatrix& c, double tol = kTolHerm);

StokesVector stokes_of(const JonesVector& v);

/// The Mueller matrix of a Jones matrix: the induced Lorentz transformation,
/// acting on (S0, S1, S2, S3) ordered like (t, z, x, y).
Lorentz4 mueller(const Complex2& l, double tol = kTolDet);

StokesVector apply_mueller(const Lorentz4& m, const StokesVector& s);

enum class PolarizationState { Pure, PartiallyMixed, CompletelyRandom };

struct CoherenceMass {
    double m{};
    PolarizationState state{PolarizationState::Pure};
    const char* label() const;
};

/// M = sqrt(max(S0^2 - S1^2 - S2^2 - S3^2, 0)): the mass-like coherence
/// measure.  M = 0 is a pure state, M = S0 a completely random one.  The
/// classification tolerance is relative to S0 and sits above the sqrt of
/// the rounding floor (a pure state evaluates to M ~ 1e-8 S0 from the
/// squared-difference cancellation).
CoherenceMass coherence_mass(const StokesVector& s, double tol = 1e-7);

}  // namespace loropt
