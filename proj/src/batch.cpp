#include "loropt/batch.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace loropt::batch {

namespace {

double core_point_error(double x) {
    const CoreFactorization f = factor_core(x);
    return max_abs_diff(f.reconstruction, core(x));
}

// Deterministic per-sample pair draw: the generator is seeded from (seed, i),
// so the result is identical no matter how samples are scheduled.
Complex2 draw_unit_det(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const Complex2 m{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)),
                         cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        const cplx det = m.det();
        if (std::abs(det) < 0.1) continue;
        const cplx s = 1.0 / std::sqrt(det);
        return s * m;
    }
}

double homomorphism_point_error(std::uint64_t seed, int i) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
    const Complex2 l1 = draw_unit_det(rng);
    const Complex2 l2 = draw_unit_det(rng);
    return max_abs_diff(induced_lorentz(l1 * l2), induced_lorentz(l1) * induced_lorentz(l2));
}

LayerPair with_param(LayerPair base, char which, double v) {
    switch (which) {
        case 'e': base.eta = v; break;
        case '1': base.phi1 = v; break;
        case '2': base.phi2 = v; break;
        default: throw std::domain_error("multilayer_scan: unknown parameter");
    }
    return base;
}

}  // namespace

std::vector<double> linspace(double start, double stop, int steps) {
    if (steps < 1)
        throw std::domain_error("linspace: need at least one step");
    std::vector<double> out(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out[0] = start;
        return out;
    }
    const double h = (stop - start) / (steps - 1);
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = start + h * i;
    out.back() = stop;
    return out;
}

double core_reconstruction_max_error(const std::vector<double>& xs) {
    const auto errs = parallel_map(xs, core_point_error);
    return errs.empty() ? 0.0 : *std::max_element(errs.begin(), errs.end());
}

double core_reconstruction_max_error_serial(const std::vector<double>& xs) {
    const auto errs = serial_map(xs, core_point_error);
    return errs.empty() ? 0.0 : *std::max_element(errs.begin(), errs.end());
}

double induced_homomorphism_max_error(int samples, std::uint64_t seed) {
    std::vector<double> errs(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i)
        errs[static_cast<std::size_t>(i)] = homomorphism_point_error(seed, i);
    return errs.empty() ? 0.0 : *std::max_element(errs.begin(), errs.end());
}

double induced_homomorphism_max_error_serial(int samples, std::uint64_t seed) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) worst = std::max(worst, homomorphism_point_error(seed, i));
    return worst;
}

std::vector<CavityReport> cavity_scan(const std::vector<double>& xs, long long cycles) {
    return parallel_map(xs, [cycles](double x) { return run_cavity({x, cycles, false}); });
}

std::vector<CavityReport> cavity_scan_serial(const std::vector<double>& xs, long long cycles) {
    return serial_map(xs, [cycles](double x) { return run_cavity({x, cycles, false}); });
}

std::vector<PeriodReport> multilayer_scan(const LayerPair& base, char which,
                                          const std::vector<double>& grid,
                                          long long periods) {
    return parallel_map(grid, [&](double v) { return run_periods(with_param(base, which, v), periods); });
}

std::vector<PeriodReport> multilayer_scan_serial(const LayerPair& base, char which,
                                                 const std::vector<double>& grid,
                                                 long long periods) {
    return serial_map(grid, [&](double v) { return run_periods(with_param(base, which, v), periods); });
}

}  // namespace loropt::batch
