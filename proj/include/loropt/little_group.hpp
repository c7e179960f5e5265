#pragma once

#include <vector>

#include "loropt/mat_core.hpp"

namespace loropt {

/// Generators of the E(2)-like little group of a massless particle moving
/// along +z: the z-rotation J3 and the two translation-like N1 = K1 - J2,
/// N2 = K2 + J1.
struct MasslessGenerators {
    Complex4 j3, n1, n2;
};

MasslessGenerators massless_generators();

enum class LittleGroupClass { Massive, Massless, Unsupported };

struct LittleGroup {
    LittleGroupClass kind{LittleGroupClass::Unsupported};
    std::array<Complex4, 3> generators{};  // zero matrices when Unsupported
    FourVector momentum{};
};

/// Classify the four-momentum and return a generating set leaving it
/// invariant.  Timelike, future-pointing p gives the O(3)-like set (boosted
/// into the moving frame when the spatial momentum is nonzero); lightlike p
/// along +z gives {J3, N1, N2}.  Spacelike, past-pointing and off-axis
/// lightlike momenta are Unsupported.  The zero vector is a domain error.
LittleGroup little_group_for(const FourVector& p, double tol = 1e-9);

struct ContractionReport {
    std::vector<double> eta;
    std::vector<double> error;  // max deviation over the J2->N1 and J1->N2 paths
    Complex4 limit;             // normalized conjugate of J2 at the largest eta
    // Direction and normalization fixed so the limits reproduce N1 and N2:
    // conjugate as B G B^{-1}, scale the J2 path by -2 e^{-eta} and the J1
    // path by +2 e^{-eta}.
    double norm_j2{-2.0};
    double norm_j1{+2.0};
};

/// Run the infinite-momentum contraction along the rapidity ladder.  The
/// deviation from N1 (and N2) decays as e^{-2 eta}.  Ladder values must be
/// positive and strictly increasing; values above 300 overflow.
ContractionReport contract(const std::vector<double>& eta_ladder);

}  // namespace loropt
