#include "loropt/mat4.hpp"

#include <algorithm>
#include <cmath>

namespace loropt {

Lorentz4 Lorentz4::identity() {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
}

Lorentz4 Lorentz4::operator*(const Lorentz4& o) const {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Lorentz4 Lorentz4::operator+(const Lorentz4& o) const {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

Lorentz4 Lorentz4::operator-(const Lorentz4& o) const {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

Lorentz4 Lorentz4::transpose() const {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

FourVector Lorentz4::apply(const FourVector& v) const {
    const std::array<double, 4> in{v.t, v.z, v.x, v.y};
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) out[i] += m[i][k] * in[k];
    return {out[0], out[1], out[2], out[3]};
}

double Lorentz4::det() const {
    // Cofactor expansion along the first row.
    auto det3 = [this](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

double Lorentz4::max_abs() const {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(m[i][j]));
    return r;
}

Lorentz4 operator*(double s, const Lorentz4& a) {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
}

double max_abs_diff(const Lorentz4& x, const Lorentz4& y) { return (x - y).max_abs(); }

double metric_defect(const Lorentz4& l) {
    Lorentz4 g;
    g.m[0][0] = 1.0;
    g.m[1][1] = g.m[2][2] = g.m[3][3] = -1.0;
    return max_abs_diff(l.transpose() * g * l, g);
}

Lorentz4 expm(const Lorentz4& a) {
    // Scale so the Taylor core converges fast, then square back.
    const double norm = a.max_abs();
    int squarings = 0;
    Lorentz4 scaled = a;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        scaled = std::ldexp(1.0, -squarings) * a;
    }
    Lorentz4 result = Lorentz4::identity();
    Lorentz4 term = Lorentz4::identity();
    for (int k = 1; k <= 20; ++k) {
        term = (1.0 / k) * (term * scaled);
        result = result + term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

Complex4 Complex4::identity() {
    Complex4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
}

Complex4 Complex4::operator*(const Complex4& o) const {
    Complex4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Complex4 Complex4::operator+(const Complex4& o) const {
    Complex4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

Complex4 Complex4::operator-(const Complex4& o) const {
    Complex4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

Complex4 Complex4::operator-() const {
    Complex4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = -m[i][j];
    return r;
}

double Complex4::max_abs() const {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(m[i][j]));
    return r;
}

Lorentz4 Complex4::real_part() const {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j].real();
    return r;
}

Lorentz4 Complex4::imag_part() const {
    Lorentz4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j].imag();
    return r;
}

bool Complex4::is_real(double tol) const {
    return imag_part().max_abs() <= tol * std::max(1.0, max_abs());
}

Complex4 operator*(cplx s, const Complex4& a) {
    Complex4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
}

Complex4 operator*(double s, const Complex4& a) { return cplx(s, 0.0) * a; }

Complex4 to_complex(const Lorentz4& a) {
    Complex4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = a.m[i][j];
    return r;
}

double max_abs_diff(const Complex4& x, const Complex4& y) { return (x - y).max_abs(); }

}  // namespace loropt
