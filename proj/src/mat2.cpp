#include "loropt/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace loropt {

Complex2 Complex2::inverse() const {
    const cplx dt = det();
    if (std::abs(dt) == 0.0)
        throw std::domain_error("Complex2::inverse: singular matrix");
    const cplx inv = 1.0 / dt;
    return {d * inv, -b * inv, -c * inv, a * inv};
}

double Complex2::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool Complex2::is_real(double tol) const {
    const double scale = std::max(1.0, max_abs());
    const double im = std::max({std::abs(a.imag()), std::abs(b.imag()),
                                std::abs(c.imag()), std::abs(d.imag())});
    return im <= tol * scale;
}

Real2 Complex2::real_part() const { return {a.real(), b.real(), c.real(), d.real()}; }

Complex2 operator*(cplx s, const Complex2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
Complex2 operator*(double s, const Complex2& m) { return cplx(s, 0.0) * m; }

Real2 Real2::inverse() const {
    const double dt = det();
    if (dt == 0.0)
        throw std::domain_error("Real2::inverse: singular matrix");
    const double inv = 1.0 / dt;
    return {d * inv, -b * inv, -c * inv, a * inv};
}

double Real2::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Real2 operator*(double s, const Real2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

double max_abs_diff(const Complex2& x, const Complex2& y) { return (x - y).max_abs(); }
double max_abs_diff(const Real2& x, const Real2& y) { return (x - y).max_abs(); }

double unit_det_defect(const Complex2& m) {
    const double scale = std::max(1.0, m.max_abs() * m.max_abs());
    return std::abs(m.det() - 1.0) / scale;
}

double unit_det_defect(const Real2& m) {
    const double scale = std::max(1.0, m.max_abs() * m.max_abs());
    return std::abs(m.det() - 1.0) / scale;
}

void require_unit_det(const Complex2& m, double tol, const char* who) {
    if (!(unit_det_defect(m) <= tol))
        throw std::domain_error(std::string(who) + ": determinant is not 1");
}

void require_unit_det(const Real2& m, double tol, const char* who) {
    if (!(unit_det_defect(m) <= tol))
        throw std::domain_error(std::string(who) + ": determinant is not 1");
}

void require_finite(double v, const char* who) {
    if (!std::isfinite(v))
        throw std::domain_error(std::string(who) + ": non-finite parameter");
}

}  // namespace loropt
