#include "loropt/lens_optics.hpp"

#include <cmath>

namespace loropt {

Real2 lens(double f) {
    require_finite(f, "lens");
    if (f == 0.0)
        throw std::domain_error("lens: zero focal length");
    return {1.0, 0.0, -1.0 / f, 1.0};
}

Real2 translate(double z) {
    require_finite(z, "translate");
    return {1.0, z, 0.0, 1.0};
}

Real2 one_lens(double z1, double f, double z2) {
    require_finite(z1, "one_lens");
    require_finite(z2, "one_lens");
    if (f == 0.0 || !std::isfinite(f))
        throw std::domain_error("one_lens: invalid focal length");
    return {1.0 - z2 / f, z1 + z2 - z1 * z2 / f, -1.0 / f, 1.0 - z1 / f};
}

bool is_imaging(double z1, double f, double z2, double tol) {
    const Real2 m = one_lens(z1, f, z2);
    return std::abs(m.b) <= tol * std::max(1.0, std::abs(z1) + std::abs(z2));
}

double RaySystem::x() const {
    if (z1 != z2)
        throw std::domain_error("RaySystem::x: defined for the symmetric case z1 == z2");
    if (f == 0.0)
        throw std::domain_error("RaySystem::x: zero focal length");
    return z1 / f;
}

Real2 core(double x) {
    require_finite(x, "core");
    return {x - 1.0, x - 2.0, x, x - 1.0};
}

Real2 one_lens_via_core(double z, double f) {
    if (!(z > 0.0))
        throw std::domain_error("one_lens_via_core: requires z > 0");
    if (f == 0.0 || !std::isfinite(f))
        throw std::domain_error("one_lens_via_core: invalid focal length");
    const double r = std::sqrt(z);
    const Real2 d{r, 0.0, 0.0, 1.0 / r};
    const Real2 dinv{1.0 / r, 0.0, 0.0, r};
    return -1.0 * (d * core(z / f) * dinv);
}

CoreFactorization factor_core(double x) {
    if (!(x > 0.0))
        throw std::domain_error("factor_core: requires x > 0");

    CoreFactorization out;
    if (std::abs(x - 2.0) < kParabolicWindow) {
        out.branch = CoreFactorization::Branch::Parabolic;
        out.reconstruction = {1.0, 0.0, x, 1.0};
        return out;
    }

    if (x < 2.0) {
        const double c = x - 1.0;
        const double s = std::sqrt(x * (2.0 - x));
        out.branch = CoreFactorization::Branch::Elliptic;
        out.angle = 2.0 * std::atan2(s, c);  // phi in (0, 2pi)
        out.eta = 0.5 * std::log(x / (2.0 - x));
        out.reconstruction = boost_z(-out.eta) * rotation(out.angle) * boost_z(out.eta);
    } else {
        const double sh = std::sqrt(x * (x - 2.0));
        out.branch = CoreFactorization::Branch::Hyperbolic;
        out.angle = 2.0 * std::asinh(sh);  // chi, with cosh(chi/2) = x - 1
        out.eta = 0.5 * std::log(x / (x - 2.0));
        out.reconstruction = boost_z(-out.eta) * boost_x(out.angle) * boost_z(out.eta);
    }
    return out;
}

const char* branch_name(CoreFactorization::Branch b) {
    switch (b) {
        case CoreFactorization::Branch::Elliptic: return "elliptic";
        case CoreFactorization::Branch::Hyperbolic: return "hyperbolic";
        case CoreFactorization::Branch::Parabolic: return "parabolic";
    }
    return "unknown";
}

}  // namespace loropt
