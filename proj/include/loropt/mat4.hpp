#pragma once

#include <array>

#include "loropt/mat2.hpp"

namespace loropt {

/// Four-vector in the (t, z, x, y) component order, natural units.
struct FourVector {
    double t{}, z{}, x{}, y{};
    double minkowski_norm2() const { return t * t - z * z - x * x - y * y; }
    double euclid_norm2() const { return t * t + z * z + x * x + y * y; }
};

/// Real four-by-four matrix acting on (t, z, x, y).  Carrier for Lorentz
/// transformations and Mueller matrices; also used as a plain real 4x4
/// where the generator algebra needs one.
struct Lorentz4 {
    std::array<std::array<double, 4>, 4> m{};

    static Lorentz4 identity();

    Lorentz4 operator*(const Lorentz4& o) const;
    Lorentz4 operator+(const Lorentz4& o) const;
    Lorentz4 operator-(const Lorentz4& o) const;
    Lorentz4 transpose() const;
    FourVector apply(const FourVector& v) const;

    double det() const;
    double max_abs() const;
};

Lorentz4 operator*(double s, const Lorentz4& m);

double max_abs_diff(const Lorentz4& x, const Lorentz4& y);

/// ||L^T g L - g||_inf with g = diag(1,-1,-1,-1).
double metric_defect(const Lorentz4& l);

/// exp(A) by scaling and squaring with a Taylor core.
Lorentz4 expm(const Lorentz4& a);

/// Complex four-by-four; the 4x4 generator algebra lives here (the printed
/// generators have entries 0 and +-i, so the real Lorentz4 cannot hold them).
struct Complex4 {
    std::array<std::array<cplx, 4>, 4> m{};

    static Complex4 identity();

    Complex4 operator*(const Complex4& o) const;
    Complex4 operator+(const Complex4& o) const;
    Complex4 operator-(const Complex4& o) const;
    Complex4 operator-() const;

    double max_abs() const;
    Lorentz4 real_part() const;
    Lorentz4 imag_part() const;
    bool is_real(double tol) const;
};

Complex4 operator*(cplx s, const Complex4& m);
Complex4 operator*(double s, const Complex4& m);
Complex4 to_complex(const Lorentz4& m);

double max_abs_diff(const Complex4& x, const Complex4& y);

}  // namespace loropt
