#pragma once

#include <cstdint>
#include <vector>

#include "loropt/cavity.hpp"
#include "loropt/multilayer.hpp"

namespace loropt::batch {

/// steps evenly spaced points from start to stop inclusive (steps >= 1).
std::vector<double> linspace(double start, double stop, int steps);

/// Evaluate f over the grid, OpenMP-parallel.  Each point is independent,
/// results land at their own index, so the output never depends on the
/// schedule.
template <class F>
auto parallel_map(const std::vector<double>& grid, F&& f)
    -> std::vector<decltype(f(0.0))> {
    std::vector<decltype(f(0.0))> out(grid.size());
    const std::int64_t n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(grid[i]);
    return out;
}

/// Serial reference for parallel_map.
template <class F>
auto serial_map(const std::vector<double>& grid, F&& f)
    -> std::vector<decltype(f(0.0))> {
    std::vector<decltype(f(0.0))> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
    return out;
}

// Sweep kernels, each with a serial reference twin.  The parallel and serial
// versions compute identical values; the benchmark tool compares their
// throughput and the tests their results.

/// Max entrywise error of reconstruct(factor_core(x)) - core(x) over the grid.
double core_reconstruction_max_error(const std::vector<double>& xs);
double core_reconstruction_max_error_serial(const std::vector<double>& xs);

/// Max homomorphism defect |L4(L1 L2) - L4(L1) L4(L2)| over random
/// unit-determinant pairs; sample i derives its own generator from (seed, i).
double induced_homomorphism_max_error(int samples, std::uint64_t seed);
double induced_homomorphism_max_error_serial(int samples, std::uint64_t seed);

std::vector<CavityReport> cavity_scan(const std::vector<double>& xs, long long cycles);
std::vector<CavityReport> cavity_scan_serial(const std::vector<double>& xs, long long cycles);

/// Sweep one parameter of a layer pair: which is 'e' (eta), '1' (phi1) or
/// '2' (phi2); the other two come from base.
std::vector<PeriodReport> multilayer_scan(const LayerPair& base, char which,
                                          const std::vector<double>& grid,
                                          long long periods);
std::vector<PeriodReport> multilayer_scan_serial(const LayerPair& base, char which,
                                                 const std::vector<double>& grid,
                                                 long long periods);

}  // namespace loropt::batch
