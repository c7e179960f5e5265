#include "loropt/cavity.hpp"

#include <cmath>

namespace loropt {

Real2 cavity_cycle(double x) {
    if (!(x > 0.0))
        throw std::domain_error("cavity_cycle: requires x > 0");
    const Real2 c = core(x);
    return c * c;
}

CavityReport run_cavity(const CavityConfig& cfg) {
    if (!(cfg.x > 0.0))
        throw std::domain_error("run_cavity: requires x > 0");
    if (cfg.cycles < 0)
        throw std::domain_error("run_cavity: cycle count must be nonnegative");

    const CoreFactorization fc = factor_core(cfg.x);
    CavityReport rep;
    rep.x = cfg.x;
    rep.branch = fc.branch;
    rep.stable = fc.branch == CoreFactorization::Branch::Elliptic;
    rep.eta = fc.eta;
    rep.cycles = cfg.cycles;
    rep.half_cycles = cfg.half_cycles;

    const long long steps = cfg.half_cycles ? cfg.cycles : 2 * cfg.cycles;
    const Real2 c = core(cfg.x);

    switch (fc.branch) {
        case CoreFactorization::Branch::Elliptic:
            rep.parameter = 2.0 * fc.angle;
            break;
        case CoreFactorization::Branch::Hyperbolic:
            rep.parameter = 2.0 * fc.angle;
            // C^steps ~ cosh(steps * chi / 2) entrywise.
            rep.growth_exponent = 0.5 * static_cast<double>(steps) * fc.angle;
            break;
        case CoreFactorization::Branch::Parabolic:
            rep.parameter = cavity_cycle(cfg.x).c;  // shear step per cycle
            break;
    }

    if (rep.growth_exponent > 700.0) {
        rep.matrix_overflow = true;
        return rep;
    }
    rep.matrix = power_closed_form(c, steps);
    return rep;
}

}  // namespace loropt
