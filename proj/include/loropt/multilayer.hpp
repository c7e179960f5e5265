#pragma once

#include <optional>

#include "loropt/decomp.hpp"

namespace loropt {

/// One period of a two-medium stack: boundary parameter eta and the two
/// phase thicknesses.
struct LayerPair {
    double eta{}, phi1{}, phi2{};
};

/// Boundary matrix ((cosh eta/2, sinh eta/2),(sinh eta/2, cosh eta/2));
/// boundary(-eta) is its inverse.
Complex2 boundary(double eta);

/// In-medium phase shift diag(e^{-i phi/2}, e^{i phi/2}).
Complex2 phase_medium(double phi);

/// One period, B(eta) P(phi1) B(-eta) P(phi2); an SU(1,1) element.
Complex2 period(const LayerPair& p);

/// The simultaneous Sp(2) conjugate of the period,
/// B(eta) R(phi1) B(-eta) R(phi2) with the diagonal boost; equals
/// su11_to_sp2(period(p)).
Real2 period_sp2(const LayerPair& p);

struct PeriodReport {
    LayerPair layers{};
    PowerForm::Cls cls{};
    /// True when the conjugator reduces to the pure boost B(mu), i.e. the
    /// N-period matrix is exactly B(mu) R(N alpha) B(-mu) (or the X form).
    bool pure_boost{};
    double mu{};
    double residual_rotation{};
    /// alpha (elliptic) or xi (hyperbolic) advanced per period.
    double parameter{};
    long long periods{};
    bool matrix_overflow{};
    Real2 matrix{};  // N-th power of period_sp2
};

/// Classify the period and evaluate N periods in closed form.
PeriodReport run_periods(const LayerPair& p, long long n);

/// A point of the one-parameter family R(2 theta + pi/2) B(2 eta)
/// R(2 theta - pi/2) where the constraint sinh eta = cosh eta sin(2 theta)
/// holds and the product collapses to ((1,0),(2 sinh eta,1)).
struct IwasawaWitness {
    double theta{}, phi1{}, phi2{}, eta{};
    Real2 matrix{};
};

/// Scan the constrained angle family of the layer's boundary parameter for
/// the triangular point.  Empty when no sign change falls in the scanned
/// range (it always does for finite eta).
std::optional<IwasawaWitness> iwasawa_scan(const LayerPair& p);

}  // namespace loropt
