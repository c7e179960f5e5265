#include "loropt/little_group.hpp"

#include <cmath>

namespace loropt {

namespace {
constexpr cplx kI{0.0, 1.0};

// Finite z-boost in the (t, z, x, y) convention, full rapidity.
Lorentz4 z_boost4(double eta) {
    Lorentz4 b = Lorentz4::identity();
    b.m[0][0] = b.m[1][1] = std::cosh(eta);
    b.m[0][1] = b.m[1][0] = std::sinh(eta);
    return b;
}
}  // namespace

MasslessGenerators massless_generators() {
    MasslessGenerators g;
    g.j3.m[2][3] = -kI;
    g.j3.m[3][2] = kI;
    g.n1.m[0][2] = kI;
    g.n1.m[1][2] = kI;
    g.n1.m[2][0] = kI;
    g.n1.m[2][1] = -kI;
    g.n2.m[0][3] = kI;
    g.n2.m[1][3] = kI;
    g.n2.m[3][0] = kI;
    g.n2.m[3][1] = -kI;
    return g;
}

LittleGroup little_group_for(const FourVector& p, double tol) {
    const double scale2 = p.euclid_norm2();
    if (scale2 == 0.0)
        throw std::domain_error("little_group_for: zero four-momentum");
    const double m2 = p.minkowski_norm2();

    LittleGroup out;
    out.momentum = p;

    if (m2 > tol * scale2) {
        if (p.t <= 0.0) return out;  // past-pointing: not treated
        const auto gen = vector_generators();
        const double pspace = std::sqrt(p.z * p.z + p.x * p.x + p.y * p.y);
        if (pspace <= tol * std::sqrt(scale2)) {
            out.kind = LittleGroupClass::Massive;
            out.generators = gen.J;
            return out;
        }
        // Boost the rest-frame rotations along the momentum direction.
        const double rapidity = std::atanh(pspace / p.t);
        const std::array<double, 3> n{p.z / pspace, p.x / pspace, p.y / pspace};
        // K index order is (x, y, z) = (K1, K2, K3); momentum components map
        // z -> K3, x -> K1, y -> K2.
        const std::array<double, 3> eta{rapidity * n[1], rapidity * n[2], rapidity * n[0]};
        const Complex4 b = to_complex(exp_generator_vector({0, 0, 0}, eta));
        const Complex4 binv =
            to_complex(exp_generator_vector({0, 0, 0}, {-eta[0], -eta[1], -eta[2]}));
        out.kind = LittleGroupClass::Massive;
        for (int k = 0; k < 3; ++k) out.generators[k] = b * gen.J[k] * binv;
        return out;
    }

    if (std::abs(m2) <= tol * scale2) {
        // Lightlike: only the +z orientation is covered.
        const double off = std::max(std::abs(p.x), std::abs(p.y));
        if (p.t > 0.0 && p.z > 0.0 && off <= tol * std::sqrt(scale2)) {
            const auto g = massless_generators();
            out.kind = LittleGroupClass::Massless;
            out.generators = {g.j3, g.n1, g.n2};
        }
        return out;
    }

    return out;  // spacelike: Unsupported
}

ContractionReport contract(const std::vector<double>& eta_ladder) {
    if (eta_ladder.empty())
        throw std::domain_error("contract: empty rapidity ladder");
    double prev = 0.0;
    for (double e : eta_ladder) {
        require_finite(e, "contract");
        if (e <= prev)
            throw std::domain_error("contract: ladder must be positive and increasing");
        if (e > 300.0)
            throw std::range_error("contract: rapidity overflows the conjugation");
        prev = e;
    }

    const auto gen = vector_generators();
    const auto lim = massless_generators();

    ContractionReport rep;
    rep.eta = eta_ladder;
    for (double e : eta_ladder) {
        const Complex4 b = to_complex(z_boost4(e));
        const Complex4 binv = to_complex(z_boost4(-e));
        const double damp = std::exp(-e);
        const Complex4 n1_approx = (rep.norm_j2 * damp) * (b * gen.J[1] * binv);
        const Complex4 n2_approx = (rep.norm_j1 * damp) * (b * gen.J[0] * binv);
        rep.error.push_back(std::max(max_abs_diff(n1_approx, lim.n1),
                                     max_abs_diff(n2_approx, lim.n2)));
        rep.limit = n1_approx;
    }
    return rep;
}

}  // namespace loropt
