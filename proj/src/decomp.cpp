#include "loropt/decomp.hpp"

#include <cmath>

#include "loropt/lens_optics.hpp"

namespace loropt {

namespace {
constexpr cplx kI{0.0, 1.0};

void push_gap(std::vector<LensElement>& v, double z) {
    if (z == 0.0) return;
    if (!v.empty() && v.back().kind == LensElement::Kind::Gap) {
        v.back().value += z;
        if (v.back().value == 0.0) v.pop_back();
        return;
    }
    v.push_back({LensElement::Kind::Gap, z});
}

void push_lens(std::vector<LensElement>& v, double f) {
    v.push_back({LensElement::Kind::Lens, f});
}

// T((a-1)/c) L(-1/c) T((d-1)/c): exact one-lens realization for c != 0.
// For a rotation target this reduces to the shear identity with
// t = -tan(phi/4) and f = -1/sin(phi/2).
void push_one_lens_form(std::vector<LensElement>& v, const Real2& m) {
    push_gap(v, (m.a - 1.0) / m.c);
    push_lens(v, -1.0 / m.c);
    push_gap(v, (m.d - 1.0) / m.c);
}
}  // namespace

BargmannTriple bargmann(const Real2& m, double tol) {
    require_unit_det(m, tol, "bargmann");
    // M M^T = R(alpha) diag(e^gamma, e^-gamma) R(-alpha).
    const double p = m.a * m.a + m.b * m.b;
    const double q = m.a * m.c + m.b * m.d;
    const double r = m.c * m.c + m.d * m.d;
    const double h = std::hypot(0.5 * (p - r), q);

    BargmannTriple t;
    if (h <= 1e-13 * (p + r)) {
        t.alpha = 2.0 * std::atan2(m.c, m.a);  // already a rotation
        return t;
    }
    t.alpha = std::atan2(2.0 * q, p - r);
    t.gamma = std::log(0.5 * (p + r) + h);
    const Real2 rb = boost_z(-t.gamma) * rotation(-t.alpha) * m;
    t.beta = 2.0 * std::atan2(0.5 * (rb.c - rb.b), 0.5 * (rb.a + rb.d));
    return t;
}

Real2 bargmann_reconstruct(const BargmannTriple& t) {
    return rotation(t.alpha) * boost_z(t.gamma) * rotation(t.beta);
}

std::pair<Real2, Real2> symmetric_rotation_split(const Real2& m, double tol) {
    const BargmannTriple t = bargmann(m, tol);
    const Real2 sym = rotation(t.alpha) * boost_z(t.gamma) * rotation(-t.alpha);
    const Real2 rot = rotation(t.alpha + t.beta);
    return {sym, rot};
}

int LensChain::lens_count() const {
    int n = 0;
    for (const auto& e : elements)
        if (e.kind == LensElement::Kind::Lens) ++n;
    return n;
}

bool LensChain::has_virtual_gap() const {
    for (const auto& e : elements)
        if (e.kind == LensElement::Kind::Gap && e.value < 0.0) return true;
    return false;
}

Real2 LensChain::product() const {
    Real2 r = Real2::identity();
    for (const auto& e : elements)
        r = r * (e.kind == LensElement::Kind::Lens ? lens(e.value) : translate(e.value));
    return r;
}

LensChain synthesize_lenses(const Real2& m, double tol) {
    require_unit_det(m, tol, "synthesize_lenses");
    LensChain chain;
    auto& el = chain.elements;
    const double scale = 1.0 + std::abs(m.a) + std::abs(m.d);

    if (m.c == 0.0 && m.a == 1.0 && m.d == 1.0) {
        push_gap(el, m.b);
        return chain;
    }
    if (m.b == 0.0 && m.a == 1.0 && m.d == 1.0) {
        push_lens(el, -1.0 / m.c);
        return chain;
    }
    if (std::abs(m.c) >= 1e-3 * scale) {
        push_one_lens_form(el, m);
        return chain;
    }

    // Lower-left too small for a stable one-lens form; regularize so the
    // inner factor has lower-left -1, then peel the regularizing lenses off.
    if (std::abs(m.a) >= 1e-3 * scale) {
        const double ginv = (m.c + 1.0) / m.a;  // L with slope -ginv
        const Real2 reg{1.0, 0.0, -ginv, 1.0};
        push_lens(el, -1.0 / ginv);  // inverse of reg
        push_one_lens_form(el, reg * m);
        return chain;
    }
    if (std::abs(m.d) >= 1e-3 * scale) {
        const double ginv = (m.c + 1.0) / m.d;
        const Real2 reg{1.0, 0.0, -ginv, 1.0};
        push_one_lens_form(el, m * reg);
        push_lens(el, -1.0 / ginv);
        return chain;
    }

    // Both diagonal entries tiny: det = 1 forces b != 0.  Sandwich with a
    // common lens slope q solving b q^2 - (a+d) q + c = target.
    const double target = m.b > 0.0 ? 1.0 : -1.0;
    const double tr = m.a + m.d;
    const double disc = tr * tr - 4.0 * m.b * (m.c - target);
    const double root = std::sqrt(disc);
    const double q = (tr + (tr >= 0.0 ? root : -root)) / (2.0 * m.b);
    const Real2 reg{1.0, 0.0, -q, 1.0};
    push_lens(el, -1.0 / q);  // inverse of reg as a lens: ((1,0),(q,1))
    push_one_lens_form(el, reg * m * reg);
    push_lens(el, -1.0 / q);
    return chain;
}

Complex2 su11_sp2_conjugator() {
    const cplx e = std::polar(1.0 / std::sqrt(2.0), 0.25 * std::acos(-1.0));
    return {e, e, -std::conj(e), std::conj(e)};
}

Complex2 su11_sp2_conjugator_inverse() {
    // det C = 1, so the inverse is the adjugate.
    const Complex2 c = su11_sp2_conjugator();
    return {c.d, -c.b, -c.c, c.a};
}

Real2 su11_to_sp2(const Complex2& w, double tol) {
    require_unit_det(w, tol, "su11_to_sp2");
    const Complex2 v = su11_sp2_conjugator() * w * su11_sp2_conjugator_inverse();
    if (!v.is_real(1e-9))
        throw std::domain_error("su11_to_sp2: conjugate is not real; input outside SU(1,1)");
    return v.real_part();
}

Complex2 sp2_to_su11(const Real2& v, double tol) {
    require_unit_det(v, tol, "sp2_to_su11");
    return su11_sp2_conjugator_inverse() * v.as_complex() * su11_sp2_conjugator();
}

double iwasawa_angle(double eta) {
    require_finite(eta, "iwasawa_angle");
    return 0.5 * std::asin(std::tanh(eta));
}

Real2 iwasawa_matrix(double eta) {
    const double theta = iwasawa_angle(eta);
    const double half_pi = 0.5 * std::acos(-1.0);
    return rotation(2.0 * theta + half_pi) * boost_z(2.0 * eta) *
           rotation(2.0 * theta - half_pi);
}

PowerForm analyze_power(const Real2& m, double tol, double parabolic_tol) {
    require_unit_det(m, tol, "analyze_power");
    PowerForm f;
    const double tr = m.trace();

    if (std::abs(std::abs(tr) - 2.0) <= parabolic_tol) {
        f.cls = PowerForm::Cls::Parabolic;
        f.sign = tr < 0.0 ? -1 : 1;
        f.nilpotent = (f.sign < 0 ? -m : m) - Real2::identity();
        f.conjugator = Real2::identity();
        return f;
    }

    if (std::abs(tr) < 2.0) {
        // M = cos(th/2) I + sin(th/2) G with G^2 = -I; conjugate G to the
        // standard complex structure ((0,-1),(1,0)).
        f.cls = PowerForm::Cls::Elliptic;
        const double ch = 0.5 * tr;
        double sh = std::sqrt(1.0 - ch * ch);
        Real2 g = (1.0 / sh) * (m - ch * Real2::identity());
        const bool use_e1 = std::abs(g.c) >= std::abs(g.b);
        double delta = use_e1 ? g.c : -g.b;
        if (delta < 0.0) {
            sh = -sh;
            g = -g;
            delta = -delta;
        }
        const double rn = 1.0 / std::sqrt(delta);
        f.conjugator = use_e1 ? Real2{rn, g.a * rn, 0.0, g.c * rn}
                              : Real2{0.0, g.b * rn, rn, g.d * rn};
        f.param = 2.0 * std::atan2(sh, ch);
        return f;
    }

    // |tr| > 2: M = sign (cosh(chi/2) I + sinh(chi/2) G) with G^2 = I;
    // conjugate G to ((0,1),(1,0)) through its eigenvectors.
    f.cls = PowerForm::Cls::Hyperbolic;
    f.sign = tr < 0.0 ? -1 : 1;
    const Real2 p = f.sign < 0 ? -m : m;
    const double ch = 0.5 * std::abs(tr);
    const double sh = std::sqrt(ch * ch - 1.0);
    const Real2 g = (1.0 / sh) * (p - ch * Real2::identity());
    f.param = 2.0 * std::asinh(sh);

    auto column = [](const Real2& a, int j) {
        return std::array<double, 2>{j == 0 ? a.a : a.b, j == 0 ? a.c : a.d};
    };
    auto pick = [&column](const Real2& a) {
        const auto c0 = column(a, 0), c1 = column(a, 1);
        const double n0 = std::hypot(c0[0], c0[1]), n1 = std::hypot(c1[0], c1[1]);
        auto c = n0 >= n1 ? c0 : c1;
        const double n = n0 >= n1 ? n0 : n1;
        return std::array<double, 2>{c[0] / n, c[1] / n};
    };
    const Real2 gp = g + Real2::identity();
    const Real2 gm = g - Real2::identity();
    auto up = pick(gp);
    auto um = pick(gm);
    double delta = 0.5 * (up[1] * um[0] - up[0] * um[1]);  // det of [(up+um)/2,(up-um)/2]
    if (delta < 0.0) {
        um[0] = -um[0];
        um[1] = -um[1];
        delta = -delta;
    }
    const double rn = 1.0 / std::sqrt(delta);
    f.conjugator = Real2{0.5 * (up[0] + um[0]) * rn, 0.5 * (up[0] - um[0]) * rn,
                         0.5 * (up[1] + um[1]) * rn, 0.5 * (up[1] - um[1]) * rn};
    return f;
}

Real2 power_from_form(const PowerForm& f, long long n) {
    if (n < 0)
        throw std::domain_error("power_from_form: exponent must be nonnegative");
    const bool flip = f.sign < 0 && (n % 2 != 0);
    Real2 r;
    switch (f.cls) {
        case PowerForm::Cls::Parabolic:
            r = Real2::identity() + static_cast<double>(n) * f.nilpotent;
            break;
        case PowerForm::Cls::Elliptic:
            r = f.conjugator * rotation(static_cast<double>(n) * f.param) *
                f.conjugator.inverse();
            break;
        case PowerForm::Cls::Hyperbolic:
            r = f.conjugator * boost_x(static_cast<double>(n) * f.param) *
                f.conjugator.inverse();
            break;
    }
    return flip ? -r : r;
}

Real2 power_closed_form(const Real2& m, long long n, double tol) {
    return power_from_form(analyze_power(m, tol), n);
}

ConjugatorForm canonical_conjugator(const PowerForm& f, double tol) {
    ConjugatorForm out;
    if (f.cls == PowerForm::Cls::Parabolic) {
        out.pure_boost = false;
        out.matrix = Real2::identity();
        return out;
    }
    // Use up the gauge freedom (right rotations for the elliptic class,
    // right x-boosts for the hyperbolic one) to make the columns orthogonal,
    // which is exactly the R(rho) B(mu) shape.
    const Real2& s = f.conjugator;
    const double p = s.a * s.a + s.c * s.c;
    const double q = s.a * s.b + s.c * s.d;
    const double r = s.b * s.b + s.d * s.d;
    Real2 canon;
    if (f.cls == PowerForm::Cls::Elliptic) {
        canon = s * rotation(std::atan2(2.0 * q, p - r));
    } else {
        canon = s * boost_x(std::atanh(-2.0 * q / (p + r)));
    }
    const double pi = std::acos(-1.0);
    out.mu = 2.0 * std::log(std::hypot(canon.a, canon.c));
    out.rho = 2.0 * std::atan2(canon.c, canon.a);
    // -S is the same conjugation: fold rho into (-pi, pi].
    if (out.rho > pi) out.rho -= 2.0 * pi;
    if (out.rho <= -pi) out.rho += 2.0 * pi;
    // Elliptic gauge also allows swapping the columns (a further right
    // rotation by pi), which sends (rho, mu) to (rho - pi, -mu) and commutes
    // past R(theta); use it to bring rho into [-pi/2, pi/2].
    if (f.cls == PowerForm::Cls::Elliptic && std::abs(out.rho) > 0.5 * pi) {
        out.rho += out.rho > 0.0 ? -pi : pi;
        out.mu = -out.mu;
    }
    out.pure_boost = std::abs(std::sin(0.5 * out.rho)) <= tol;
    if (out.pure_boost) out.rho = 0.0;
    out.matrix = rotation(out.rho) * boost_z(out.mu);
    return out;
}

std::array<Complex2, 3> sp2_generators() {
    return {Complex2{0.5 * kI, 0.0, 0.0, -0.5 * kI},
            Complex2{0.0, 0.5 * kI, 0.5 * kI, 0.0},
            Complex2{0.0, -0.5 * kI, 0.5 * kI, 0.0}};
}

ShearGenerators shear_generators() {
    ShearGenerators g;
    g.x1 = {0.0, kI, 0.0, 0.0};
    g.x2 = {0.0, 0.0, kI, 0.0};
    g.x3 = {kI, 0.0, 0.0, -kI};

    // Resolve each X over (B1, B2, J).  All four matrices are pure
    // imaginary, so the system lives on the imaginary parts; the (a, b, c)
    // entries determine the coefficients and the d entry checks them.
    const auto basis = sp2_generators();
    const Complex2 xs[3] = {g.x1, g.x2, g.x3};
    g.solve_residual = 0.0;
    for (int k = 0; k < 3; ++k) {
        double a[3][4];
        const Complex2& x = xs[k];
        for (int i = 0; i < 3; ++i) {
            a[0][i] = basis[i].a.imag();
            a[1][i] = basis[i].b.imag();
            a[2][i] = basis[i].c.imag();
        }
        a[0][3] = x.a.imag();
        a[1][3] = x.b.imag();
        a[2][3] = x.c.imag();
        // Gaussian elimination with partial pivoting on the 3x4 tableau.
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int row = col + 1; row < 3; ++row)
                if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
            for (int j = 0; j < 4; ++j) std::swap(a[col][j], a[piv][j]);
            for (int row = 0; row < 3; ++row) {
                if (row == col) continue;
                const double fct = a[row][col] / a[col][col];
                for (int j = 0; j < 4; ++j) a[row][j] -= fct * a[col][j];
            }
        }
        for (int i = 0; i < 3; ++i) g.sp2_coefficients[k][i] = a[i][3] / a[i][i];

        Complex2 rebuilt{};
        for (int i = 0; i < 3; ++i) rebuilt = rebuilt + g.sp2_coefficients[k][i] * basis[i];
        g.solve_residual = std::max(g.solve_residual, max_abs_diff(rebuilt, x));
    }
    return g;
}

const char* power_class_name(PowerForm::Cls c) {
    switch (c) {
        case PowerForm::Cls::Elliptic: return "elliptic";
        case PowerForm::Cls::Parabolic: return "parabolic";
        case PowerForm::Cls::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

}  // namespace loropt
