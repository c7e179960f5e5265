#pragma once

#include <complex>
#include <stdexcept>

namespace loropt {

using cplx = std::complex<double>;

// Default check tolerances.  Determinant-style checks are relative to the
// matrix scale; every entry point that validates input takes the tolerance
// as a parameter so callers (and the CLI) can override it.
inline constexpr double kTolDet = 1e-12;
inline constexpr double kTolOrth = 1e-10;
inline constexpr double kTolHerm = 1e-12;

struct Real2;

/// Two-by-two complex matrix, row-major ((a,b),(c,d)).
struct Complex2 {
    cplx a{}, b{}, c{}, d{};

    static Complex2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    Complex2 operator*(const Complex2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Complex2 operator+(const Complex2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Complex2 operator-(const Complex2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Complex2 operator-() const { return {-a, -b, -c, -d}; }

    Complex2 transpose() const { return {a, c, b, d}; }
    Complex2 conjugate() const {
        return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)};
    }
    Complex2 dagger() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    /// Adjugate over determinant; requires det != 0.
    Complex2 inverse() const;

    double max_abs() const;
    bool is_real(double tol) const;
    Real2 real_part() const;
};

Complex2 operator*(cplx s, const Complex2& m);
Complex2 operator*(double s, const Complex2& m);

/// Two-by-two real matrix, row-major ((a,b),(c,d)); the Sp(2)/ABCD carrier.
struct Real2 {
    double a{}, b{}, c{}, d{};

    static Real2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Real2 operator*(const Real2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Real2 operator+(const Real2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Real2 operator-(const Real2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Real2 operator-() const { return {-a, -b, -c, -d}; }

    Real2 transpose() const { return {a, c, b, d}; }
    Real2 inverse() const;
    double max_abs() const;
    Complex2 as_complex() const { return {a, b, c, d}; }
};

Real2 operator*(double s, const Real2& m);

double max_abs_diff(const Complex2& x, const Complex2& y);
double max_abs_diff(const Real2& x, const Real2& y);

/// |det - 1| relative to the squared matrix scale (floored at 1).
double unit_det_defect(const Complex2& m);
double unit_det_defect(const Real2& m);

void require_unit_det(const Complex2& m, double tol = kTolDet, const char* who = "matrix");
void require_unit_det(const Real2& m, double tol = kTolDet, const char* who = "matrix");
void require_finite(double v, const char* who);

}  // namespace loropt
