#include "loropt/mat_core.hpp"

#include <cmath>

namespace loropt {

namespace {
constexpr cplx kI{0.0, 1.0};
// exp(+-eta/2) overflows past eta ~ 1418; reject well before that.
constexpr double kBoostLimit = 1400.0;
}  // namespace

Complex2 phase(double phi) {
    require_finite(phi, "phase");
    return {std::polar(1.0, 0.5 * phi), 0.0, 0.0, std::polar(1.0, -0.5 * phi)};
}

Real2 rotation(double theta) {
    require_finite(theta, "rotation");
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    return {c, -s, s, c};
}

Real2 boost_z(double eta) {
    require_finite(eta, "boost_z");
    if (std::abs(eta) > kBoostLimit)
        throw std::range_error("boost_z: rapidity overflows the exponential");
    return {std::exp(0.5 * eta), 0.0, 0.0, std::exp(-0.5 * eta)};
}

Real2 boost_x(double chi) {
    require_finite(chi, "boost_x");
    if (std::abs(chi) > kBoostLimit)
        throw std::range_error("boost_x: rapidity overflows the exponential");
    const double ch = std::cosh(0.5 * chi), sh = std::sinh(0.5 * chi);
    return {ch, sh, sh, ch};
}

Complex2 commutator(const Complex2& a, const Complex2& b) { return a * b - b * a; }
Complex4 commutator(const Complex4& a, const Complex4& b) { return a * b - b * a; }

std::array<Complex2, 3> pauli() {
    const Complex2 s1{1.0, 0.0, 0.0, -1.0};
    const Complex2 s2{0.0, 1.0, 1.0, 0.0};
    const Complex2 s3{0.0, -kI, kI, 0.0};
    return {s1, s2, s3};
}

SpinorGenerators spinor_generators() {
    SpinorGenerators g;
    const auto sigma = pauli();
    for (int k = 0; k < 3; ++k) {
        g.J[k] = 0.5 * sigma[k];
        g.K[k] = (0.5 * kI) * sigma[k];
        g.Kdot[k] = (-0.5 * kI) * sigma[k];
    }
    return g;
}

VectorGenerators vector_generators() {
    // Index order (t, z, x, y) = (0, 1, 2, 3).
    VectorGenerators g;
    g.J[0].m[1][3] = kI;
    g.J[0].m[3][1] = -kI;
    g.J[1].m[1][2] = -kI;
    g.J[1].m[2][1] = kI;
    g.J[2].m[2][3] = -kI;
    g.J[2].m[3][2] = kI;
    g.K[0].m[0][2] = kI;
    g.K[0].m[2][0] = kI;
    g.K[1].m[0][3] = kI;
    g.K[1].m[3][0] = kI;
    g.K[2].m[0][1] = kI;
    g.K[2].m[1][0] = kI;
    return g;
}

namespace {
int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

template <class M>
M eps_combination(const std::array<M, 3>& basis, int i, int j, cplx factor) {
    M out{};
    for (int k = 0; k < 3; ++k) {
        const int e = levi_civita(i, j, k);
        if (e != 0) out = out + (factor * cplx(e)) * basis[k];
    }
    return out;
}

template <class M>
double table_defect(const std::array<M, 3>& J, const std::array<M, 3>& K) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            worst = std::max(worst,
                             max_abs_diff(commutator(J[i], J[j]), eps_combination(J, i, j, kI)));
            worst = std::max(worst,
                             max_abs_diff(commutator(K[i], K[j]), eps_combination(J, i, j, -kI)));
            worst = std::max(worst,
                             max_abs_diff(commutator(J[i], K[j]), eps_combination(K, i, j, kI)));
        }
    return worst;
}
}  // namespace

double spinor_table_defect() {
    const auto g = spinor_generators();
    return std::max(table_defect(g.J, g.K), table_defect(g.J, g.Kdot));
}

double vector_table_defect() {
    const auto g = vector_generators();
    return table_defect(g.J, g.K);
}

Complex2 exp_generator_spinor(const std::array<double, 3>& theta,
                              const std::array<double, 3>& eta) {
    for (int k = 0; k < 3; ++k) {
        require_finite(theta[k], "exp_generator");
        require_finite(eta[k], "exp_generator");
        if (std::abs(eta[k]) > kBoostLimit)
            throw std::range_error("exp_generator: rapidity overflows the exponential");
    }
    const auto sigma = pauli();
    Complex2 arg{};
    for (int k = 0; k < 3; ++k)
        arg = arg + (-0.5 * kI * (cplx(theta[k]) + kI * cplx(eta[k]))) * sigma[k];
    // arg is traceless, so arg^2 = -det(arg) I and the exponential closes:
    // exp(arg) = cosh(mu) I + sinh(mu)/mu arg with mu^2 = -det(arg).
    const cplx mu = std::sqrt(-arg.det());
    if (std::abs(mu.real()) > 700.0)
        throw std::range_error("exp_generator: rapidity overflows the exponential");
    cplx ch, shc;
    if (std::abs(mu) < 1e-4) {
        const cplx mu2 = mu * mu;
        ch = 1.0 + mu2 * (0.5 + mu2 / 24.0);
        shc = 1.0 + mu2 * (1.0 / 6.0 + mu2 / 120.0);
    } else {
        ch = std::cosh(mu);
        shc = std::sinh(mu) / mu;
    }
    return ch * Complex2::identity() + shc * arg;
}

Lorentz4 exp_generator_vector(const std::array<double, 3>& theta,
                              const std::array<double, 3>& eta) {
    for (int k = 0; k < 3; ++k) {
        require_finite(theta[k], "exp_generator");
        require_finite(eta[k], "exp_generator");
    }
    if (std::sqrt(eta[0] * eta[0] + eta[1] * eta[1] + eta[2] * eta[2]) > 700.0)
        throw std::range_error("exp_generator: rapidity overflows the exponential");
    const auto g = vector_generators();
    Complex4 arg{};
    for (int k = 0; k < 3; ++k)
        arg = arg + (-kI * cplx(theta[k])) * g.J[k] + (-kI * cplx(eta[k])) * g.K[k];
    // -i (theta J + eta K) is real entrywise; exponentiate as a real matrix.
    return expm(arg.real_part());
}

Complex2 coherency_from_fourvector(const FourVector& v) {
    return {cplx(v.t + v.z, 0.0), cplx(v.x, -v.y), cplx(v.x, v.y), cplx(v.t - v.z, 0.0)};
}

FourVector fourvector_from_coherency(const Complex2& c, double tol) {
    const double scale = std::max(1.0, c.max_abs());
    const double herm = std::max({std::abs(c.b - std::conj(c.c)),
                                  std::abs(c.a.imag()), std::abs(c.d.imag())});
    if (herm > tol * scale)
        throw std::domain_error("fourvector_from_coherency: matrix is not Hermitian");
    return {0.5 * (c.a.real() + c.d.real()), 0.5 * (c.a.real() - c.d.real()),
            0.5 * (c.b.real() + c.c.real()), 0.5 * (c.c.imag() - c.b.imag())};
}

Lorentz4 induced_lorentz(const Complex2& l, double tol) {
    require_unit_det(l, tol, "induced_lorentz");
    const Complex2 ldag = l.dagger();
    Lorentz4 out;
    const FourVector basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int j = 0; j < 4; ++j) {
        const Complex2 img = l * coherency_from_fourvector(basis[j]) * ldag;
        // The conjugate of a Hermitian matrix is Hermitian; extracting through
        // the real parts symmetrizes away the rounding residue.
        out.m[0][j] = 0.5 * (img.a.real() + img.d.real());
        out.m[1][j] = 0.5 * (img.a.real() - img.d.real());
        out.m[2][j] = 0.5 * (img.b.real() + img.c.real());
        out.m[3][j] = 0.5 * (img.c.imag() - img.b.imag());
    }
    return out;
}

}  // namespace loropt
