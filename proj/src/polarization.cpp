#include "loropt/polarization.hpp"

#include <cmath>

namespace loropt {

JonesVector apply_jones(const Complex2& m, const JonesVector& v) {
    const double scale = std::max(1.0, m.max_abs() * m.max_abs());
    if (std::abs(m.det()) <= 1e-14 * scale)
        throw std::domain_error("apply_jones: singular Jones matrix");
    return {m.a * v.psi1 + m.b * v.psi2, m.c * v.psi1 + m.d * v.psi2};
}

CoherencyMatrix coherency_of(const JonesVector& v) {
    return {std::conj(v.psi1) * v.psi1, std::conj(v.psi1) * v.psi2,
            std::conj(v.psi2) * v.psi1, std::conj(v.psi2) * v.psi2};
}

CoherencyMatrix coherency_mix(const std::vector<double>& weights,
                              const std::vector<JonesVector>& states) {
    if (weights.size() != states.size() || states.empty())
        throw std::domain_error("coherency_mix: empty mixture or size mismatch");
    double wsum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0))
            throw std::domain_error("coherency_mix: weights must be nonnegative");
        wsum += w;
    }
    if (!(wsum > 0.0))
        throw std::domain_error("coherency_mix: weights sum to zero");
    CoherencyMatrix acc{};
    for (std::size_t k = 0; k < states.size(); ++k) {
        const CoherencyMatrix c = coherency_of(states[k]);
        const double w = weights[k] / wsum;
        acc.s11 += w * c.s11;
        acc.s12 += w * c.s12;
        acc.s21 += w * c.s21;
        acc.s22 += w * c.s22;
    }
    return acc;
}

StokesVector stokes_from_coherency(const CoherencyMatrix& c, double tol) {
    const double scale = std::max({1.0, std::abs(c.s11), std::abs(c.s12),
                                   std::abs(c.s21), std::abs(c.s22)});
    const double herm = std::max({std::abs(c.s12 - std::conj(c.s21)),
                                  std::abs(c.s11.imag()), std::abs(c.s22.imag())});
    if (herm > tol * scale)
        throw std::domain_error("stokes_from_coherency: matrix is not Hermitian");
    return {(c.s11 + c.s22).real(), (c.s11 - c.s22).real(), (c.s12 + c.s21).real(),
            (-(c.s12 - c.s21) * cplx(0.0, 1.0)).real()};
}

StokesVector stokes_of(const JonesVector& v) {
    return stokes_from_coherency(coherency_of(v));
}

Lorentz4 mueller(const Complex2& l, double tol) { return induced_lorentz(l, tol); }

StokesVector apply_mueller(const Lorentz4& m, const StokesVector& s) {
    const FourVector v = m.apply({s.s0, s.s1, s.s2, s.s3});
    return {v.t, v.z, v.x, v.y};
}

const char* CoherenceMass::label() const {
    switch (state) {
        case PolarizationState::Pure: return "pure";
        case PolarizationState::PartiallyMixed: return "partially mixed";
        case PolarizationState::CompletelyRandom: return "completely random";
    }
    return "unknown";
}

CoherenceMass coherence_mass(const StokesVector& s, double tol) {
    CoherenceMass out;
    const double m2 = s.minkowski_norm2();
    out.m = std::sqrt(std::max(m2, 0.0));
    const double scale = std::max(s.s0, 1e-300);
    if (out.m <= tol * scale)
        out.state = PolarizationState::Pure;
    else if (std::abs(out.m - s.s0) <= tol * scale)
        out.state = PolarizationState::CompletelyRandom;
    else
        out.state = PolarizationState::PartiallyMixed;
    return out;
}

}  // namespace loropt
