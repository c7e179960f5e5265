#include "loropt/multilayer.hpp"

#include <cmath>

namespace loropt {

Complex2 boundary(double eta) {
    require_finite(eta, "boundary");
    const double ch = std::cosh(0.5 * eta), sh = std::sinh(0.5 * eta);
    return {ch, sh, sh, ch};
}

Complex2 phase_medium(double phi) {
    require_finite(phi, "phase_medium");
    return {std::polar(1.0, -0.5 * phi), 0.0, 0.0, std::polar(1.0, 0.5 * phi)};
}

Complex2 period(const LayerPair& p) {
    return boundary(p.eta) * phase_medium(p.phi1) * boundary(-p.eta) * phase_medium(p.phi2);
}

Real2 period_sp2(const LayerPair& p) {
    return boost_z(p.eta) * rotation(p.phi1) * boost_z(-p.eta) * rotation(p.phi2);
}

PeriodReport run_periods(const LayerPair& p, long long n) {
    if (n < 0)
        throw std::domain_error("run_periods: period count must be nonnegative");

    const Real2 m = period_sp2(p);
    const PowerForm form = analyze_power(m);
    const ConjugatorForm conj = canonical_conjugator(form);

    PeriodReport rep;
    rep.layers = p;
    rep.cls = form.cls;
    rep.pure_boost = conj.pure_boost;
    rep.mu = conj.mu;
    rep.residual_rotation = conj.rho;
    rep.parameter = form.param;
    rep.periods = n;

    if (form.cls == PowerForm::Cls::Hyperbolic &&
        0.5 * static_cast<double>(n) * form.param > 700.0) {
        rep.matrix_overflow = true;
        return rep;
    }
    rep.matrix = power_from_form(form, n);
    return rep;
}

std::optional<IwasawaWitness> iwasawa_scan(const LayerPair& p) {
    const double eta = p.eta;
    require_finite(eta, "iwasawa_scan");
    const double quarter_pi = 0.25 * std::acos(-1.0);
    const double half_pi = 2.0 * quarter_pi;

    const auto assemble = [eta, half_pi](double theta) {
        return rotation(2.0 * theta + half_pi) * boost_z(2.0 * eta) *
               rotation(2.0 * theta - half_pi);
    };
    const auto upper_right = [&assemble](double theta) { return assemble(theta).b; };

    // The upper-right entry sinh(eta) - cosh(eta) sin(2 theta) is monotone
    // over theta in [-pi/4, pi/4]; bracket the sign change on a coarse grid
    // and bisect.
    const int grid = 64;
    double lo = -quarter_pi, hi = quarter_pi;
    double flo = upper_right(lo);
    bool bracketed = false;
    for (int i = 1; i <= grid; ++i) {
        const double t = -quarter_pi + 2.0 * quarter_pi * i / grid;
        const double ft = upper_right(t);
        if (flo == 0.0) {
            hi = lo;
            bracketed = true;
            break;
        }
        if ((flo < 0.0) != (ft < 0.0)) {
            hi = t;
            bracketed = true;
            break;
        }
        lo = t;
        flo = ft;
    }
    if (!bracketed) return std::nullopt;

    for (int it = 0; it < 200 && hi != lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = upper_right(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    IwasawaWitness w;
    w.theta = 0.5 * (lo + hi);
    w.eta = eta;
    w.phi1 = 2.0 * w.theta + half_pi;
    w.phi2 = 2.0 * w.theta - half_pi;
    w.matrix = assemble(w.theta);
    return w;
}

}  // namespace loropt
