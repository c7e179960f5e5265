#pragma once

#include "loropt/decomp.hpp"
#include "loropt/lens_optics.hpp"

namespace loropt {

struct CavityConfig {
    double x{};
    long long cycles{};
    bool half_cycles{false};  // count powers of C instead of complete C^2 cycles
};

/// One complete round trip, core(x)^2.
Real2 cavity_cycle(double x);

struct CavityReport {
    double x{};
    bool stable{};
    CoreFactorization::Branch branch{};
    double eta{};
    /// Full R/X argument advanced per complete cycle (twice the factor_core
    /// parameter); the shear step of C^2 on the parabolic branch.
    double parameter{};
    /// Entries of the N-cycle matrix grow like e^{this} on the hyperbolic
    /// branch; 0 when stable.
    double growth_exponent{};
    long long cycles{};
    bool half_cycles{};
    /// Set when the closed form exceeds double range; matrix is zeroed then.
    bool matrix_overflow{};
    Real2 matrix{};  // C^{2N}, or C^N when half_cycles
};

/// Classify the cavity (stable iff 0 < x < 2, the elliptic branch) and power
/// the round trip in closed form, constant time in the cycle count.
CavityReport run_cavity(const CavityConfig& cfg);

}  // namespace loropt
