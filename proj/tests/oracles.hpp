#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// plain Taylor exponentials, repeated multiplication, and samplers.

#include <random>

#include "loropt/mat2.hpp"
#include "loropt/mat4.hpp"
#include "loropt/polarization.hpp"

namespace oracle {

inline loropt::Complex2 expm_series(const loropt::Complex2& a) {
    using loropt::Complex2;
    int squarings = 0;
    Complex2 scaled = a;
    double norm = a.max_abs();
    while (norm > 0.25) {
        scaled = 0.5 * scaled;
        norm *= 0.5;
        ++squarings;
    }
    Complex2 sum = Complex2::identity();
    Complex2 term = Complex2::identity();
    for (int k = 1; k <= 24; ++k) {
        term = (1.0 / k) * (term * scaled);
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

inline loropt::Complex4 expm_series(const loropt::Complex4& a) {
    using loropt::Complex4;
    int squarings = 0;
    Complex4 scaled = a;
    double norm = a.max_abs();
    while (norm > 0.25) {
        scaled = 0.5 * scaled;
        norm *= 0.5;
        ++squarings;
    }
    Complex4 sum = Complex4::identity();
    Complex4 term = Complex4::identity();
    for (int k = 1; k <= 24; ++k) {
        term = (1.0 / k) * (term * scaled);
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

inline loropt::Real2 pow_direct(const loropt::Real2& m, long long n) {
    loropt::Real2 r = loropt::Real2::identity();
    for (long long i = 0; i < n; ++i) r = r * m;
    return r;
}

inline loropt::Complex2 pow_direct(const loropt::Complex2& m, long long n) {
    loropt::Complex2 r = loropt::Complex2::identity();
    for (long long i = 0; i < n; ++i) r = r * m;
    return r;
}

inline loropt::Complex2 random_unit_det(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const loropt::Complex2 m{loropt::cplx(u(rng), u(rng)), loropt::cplx(u(rng), u(rng)),
                                 loropt::cplx(u(rng), u(rng)), loropt::cplx(u(rng), u(rng))};
        const loropt::cplx det = m.det();
        if (std::abs(det) < 0.1) continue;
        return (1.0 / std::sqrt(det)) * m;
    }
}

// Random Sp(2) element as a rotation-boost-rotation product.
inline loropt::Real2 random_sp2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::uniform_real_distribution<double> rap(-1.5, 1.5);
    const double a = angle(rng), g = rap(rng), b = angle(rng);
    const double ca = std::cos(0.5 * a), sa = std::sin(0.5 * a);
    const double cb = std::cos(0.5 * b), sb = std::sin(0.5 * b);
    const loropt::Real2 ra{ca, -sa, sa, ca};
    const loropt::Real2 rb{cb, -sb, sb, cb};
    const loropt::Real2 bo{std::exp(0.5 * g), 0.0, 0.0, std::exp(-0.5 * g)};
    return ra * bo * rb;
}

inline loropt::JonesVector random_jones(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const loropt::JonesVector v{loropt::cplx(u(rng), u(rng)), loropt::cplx(u(rng), u(rng))};
        if (std::abs(v.psi1) + std::abs(v.psi2) > 0.1) return v;
    }
}

// Random SU(1,1) element as a boundary/phase chain.
inline loropt::Complex2 random_su11(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::uniform_real_distribution<double> rap(-1.5, 1.5);
    const double p1 = angle(rng), e = rap(rng), p2 = angle(rng);
    const auto phase_med = [](double phi) {
        return loropt::Complex2{std::polar(1.0, -0.5 * phi), 0.0, 0.0, std::polar(1.0, 0.5 * phi)};
    };
    const double ch = std::cosh(0.5 * e), sh = std::sinh(0.5 * e);
    const loropt::Complex2 bd{ch, sh, sh, ch};
    return phase_med(p1) * bd * phase_med(p2);
}

}  // namespace oracle
