#include <doctest.h>

#include <cmath>

#include "loropt/cavity.hpp"
#include "oracles.hpp"

using namespace loropt;

TEST_CASE("cavity_cycle: frozen values") {
    // x = 1: C = ((0,-1),(1,0)), C^2 = -I
    CHECK(max_abs_diff(cavity_cycle(1.0), -Real2::identity()) == 0.0);
    // x = 2: triangular square
    CHECK(max_abs_diff(cavity_cycle(2.0), Real2{1.0, 0.0, 4.0, 1.0}) == 0.0);
    CHECK(std::abs(cavity_cycle(1.7).det() - 1.0) < 1e-14);
    CHECK_THROWS_AS(cavity_cycle(-1.0), std::domain_error);
}

TEST_CASE("run_cavity: x = 1 closes after two cycles") {
    const CavityReport rep = run_cavity({1.0, 2, false});
    CHECK(rep.stable);
    CHECK(rep.branch == CoreFactorization::Branch::Elliptic);
    CHECK(max_abs_diff(rep.matrix, Real2::identity()) < 1e-13);
    // per complete cycle the rotation argument is 2 phi = 2 pi
    CHECK(rep.parameter == doctest::Approx(2.0 * std::acos(-1.0)).epsilon(1e-14));
}

TEST_CASE("run_cavity: unstable x = 3 matches direct multiplication and growth rate") {
    const CavityReport rep = run_cavity({3.0, 4, false});
    CHECK(!rep.stable);
    CHECK(rep.branch == CoreFactorization::Branch::Hyperbolic);
    CHECK(max_abs_diff(rep.matrix, oracle::pow_direct(core(3.0), 8)) <
          1e-9 * rep.matrix.max_abs());
    // entries ~ e^{N chi} with chi = 2 arccosh 2
    const double chi = 2.0 * std::acosh(2.0);
    CHECK(rep.growth_exponent == doctest::Approx(4.0 * chi).epsilon(1e-14));
    CHECK(rep.matrix.max_abs() > 0.2 * std::exp(rep.growth_exponent));
    CHECK(rep.matrix.max_abs() < 5.0 * std::exp(rep.growth_exponent));
}

TEST_CASE("run_cavity: parabolic boundary grows linearly") {
    const CavityReport rep = run_cavity({2.0, 7, false});
    CHECK(!rep.stable);
    CHECK(rep.branch == CoreFactorization::Branch::Parabolic);
    CHECK(rep.matrix.c == doctest::Approx(4.0 * 7.0).epsilon(1e-13));
    CHECK(rep.parameter == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("closed form equals direct multiplication across the x grid") {
    for (double x : {0.3, 0.9, 1.0, 1.5, 1.99, 2.0, 2.5, 4.0}) {
        const Real2 c = core(x);
        for (long long n : {1LL, 4LL, 16LL, 32LL}) {
            const CavityReport rep = run_cavity({x, n, false});
            const Real2 direct = oracle::pow_direct(c, 2 * n);
            CHECK(max_abs_diff(rep.matrix, direct) < 1e-9 * std::max(1.0, direct.max_abs()));
        }
    }
}

TEST_CASE("half-cycle mode powers C itself") {
    const CavityReport rep = run_cavity({1.3, 5, true});
    CHECK(max_abs_diff(rep.matrix, oracle::pow_direct(core(1.3), 5)) < 1e-10);
}

TEST_CASE("stable cavities stay bounded out to a million cycles in O(1)") {
    for (double x : {0.3, 0.9, 1.5, 1.99}) {
        const CoreFactorization fc = factor_core(x);
        const double bound = 2.0 * std::cosh(fc.eta);
        for (long long n : {1000LL, 1000000LL}) {
            const CavityReport rep = run_cavity({x, n, false});
            CHECK(rep.stable);
            CHECK(rep.matrix.max_abs() <= bound + 1e-9);
        }
    }
}

TEST_CASE("unstable overflow is flagged instead of producing non-finite entries") {
    const CavityReport rep = run_cavity({4.0, 1000000, false});
    CHECK(rep.matrix_overflow);
    CHECK(rep.growth_exponent > 700.0);
    CHECK(std::isfinite(rep.matrix.max_abs()));
}
