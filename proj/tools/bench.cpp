// Benchmark: OpenMP sweep kernels against their serial references.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "loropt/batch.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    {
        const auto xs = loropt::batch::linspace(0.01, 6.0, 2'000'000);
        double es = 0.0, ep = 0.0;
        const double ts = time_ms([&] { es = loropt::batch::core_reconstruction_max_error_serial(xs); });
        const double tp = time_ms([&] { ep = loropt::batch::core_reconstruction_max_error(xs); });
        row("core factorization sweep", ts, tp, es == ep);
    }
    {
        const int samples = 100'000;
        double es = 0.0, ep = 0.0;
        const double ts = time_ms(
            [&] { es = loropt::batch::induced_homomorphism_max_error_serial(samples, 2024); });
        const double tp =
            time_ms([&] { ep = loropt::batch::induced_homomorphism_max_error(samples, 2024); });
        row("induced-map homomorphism", ts, tp, es == ep);
    }
    {
        const auto grid = loropt::batch::linspace(0.05, 3.0, 200'000);
        const loropt::LayerPair base{0.4, 0.9, 1.3};
        std::vector<loropt::PeriodReport> rs, rp;
        const double ts =
            time_ms([&] { rs = loropt::batch::multilayer_scan_serial(base, 'e', grid, 64); });
        const double tp = time_ms([&] { rp = loropt::batch::multilayer_scan(base, 'e', grid, 64); });
        bool match = rs.size() == rp.size();
        for (std::size_t i = 0; match && i < rs.size(); ++i)
            match = loropt::max_abs_diff(rs[i].matrix, rp[i].matrix) == 0.0;
        row("multilayer period sweep", ts, tp, match);
    }
    return 0;
}
