#include "loropt/json_io.hpp"

namespace loropt::jsonio {

namespace {

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw std::domain_error("expected a number or an [re, im] pair");
}

double num_from_json(const json& j, const char* what) {
    if (!j.is_number()) throw std::domain_error(std::string("expected a number in ") + what);
    return j.get<double>();
}

}  // namespace

json to_json(const Real2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

json to_json(const Complex2& m) {
    return json::array({json::array({cplx_to_json(m.a), cplx_to_json(m.b)}),
                        json::array({cplx_to_json(m.c), cplx_to_json(m.d)})});
}

json to_json(const Lorentz4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(m.m[i][j]);
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Complex4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(cplx_to_json(m.m[i][j]));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const FourVector& v) { return json::array({v.t, v.z, v.x, v.y}); }

json to_json(const StokesVector& s) { return json::array({s.s0, s.s1, s.s2, s.s3}); }

json to_json(const JonesVector& v) {
    return json::array({cplx_to_json(v.psi1), cplx_to_json(v.psi2)});
}

json to_json(const CoherencyMatrix& c) {
    return json::array({json::array({cplx_to_json(c.s11), cplx_to_json(c.s12)}),
                        json::array({cplx_to_json(c.s21), cplx_to_json(c.s22)})});
}

json to_json(const BargmannTriple& t) {
    return json{{"alpha", t.alpha}, {"gamma", t.gamma}, {"beta", t.beta}};
}

json to_json(const LensChain& chain) {
    json out = json::array();
    for (const auto& e : chain.elements) {
        if (e.kind == LensElement::Kind::Lens)
            out.push_back(json{{"lens", e.value}});
        else
            out.push_back(json{{"gap", e.value}, {"virtual", e.value < 0.0}});
    }
    return out;
}

json to_json(const CoreFactorization& f) {
    return json{{"branch", branch_name(f.branch)},
                {"eta", f.eta},
                {"parameter", f.angle},
                {"reconstruction", to_json(f.reconstruction)}};
}

json to_json(const ContractionReport& r) {
    return json{{"eta", r.eta},
                {"error", r.error},
                {"limit", to_json(r.limit)},
                {"direction", "B G B^-1"},
                {"normalization", json::array({r.norm_j2, r.norm_j1})}};
}

json to_json(const CavityReport& r) {
    json out{{"x", r.x},
             {"stable", r.stable},
             {"branch", branch_name(r.branch)},
             {"eta", r.eta},
             {"parameter", r.parameter},
             {"growth_exponent", r.growth_exponent},
             {"cycles", r.cycles},
             {"half_cycles", r.half_cycles},
             {"matrix_overflow", r.matrix_overflow}};
    out["matrix"] = r.matrix_overflow ? json() : to_json(r.matrix);
    return out;
}

json to_json(const PeriodReport& r) {
    json out{{"eta", r.layers.eta},
             {"phi1", r.layers.phi1},
             {"phi2", r.layers.phi2},
             {"class", power_class_name(r.cls)},
             {"pure_boost", r.pure_boost},
             {"mu", r.mu},
             {"residual_rotation", r.residual_rotation},
             {"parameter", r.parameter},
             {"periods", r.periods},
             {"matrix_overflow", r.matrix_overflow}};
    out["matrix"] = r.matrix_overflow ? json() : to_json(r.matrix);
    return out;
}

json to_json(const IwasawaWitness& w) {
    return json{{"eta", w.eta},
                {"theta", w.theta},
                {"phi1", w.phi1},
                {"phi2", w.phi2},
                {"matrix", to_json(w.matrix)}};
}

Real2 real2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::domain_error("expected a 2x2 matrix as [[a,b],[c,d]]");
    return {num_from_json(j[0][0], "matrix"), num_from_json(j[0][1], "matrix"),
            num_from_json(j[1][0], "matrix"), num_from_json(j[1][1], "matrix")};
}

Complex2 complex2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::domain_error("expected a 2x2 matrix");
    return {cplx_from_json(j[0][0]), cplx_from_json(j[0][1]), cplx_from_json(j[1][0]),
            cplx_from_json(j[1][1])};
}

JonesVector jones_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::domain_error("expected a Jones vector as [[re,im],[re,im]]");
    return {cplx_from_json(j[0]), cplx_from_json(j[1])};
}

StokesVector stokes_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::domain_error("expected a Stokes vector as [S0,S1,S2,S3]");
    return {num_from_json(j[0], "stokes"), num_from_json(j[1], "stokes"),
            num_from_json(j[2], "stokes"), num_from_json(j[3], "stokes")};
}

}  // namespace loropt::jsonio
