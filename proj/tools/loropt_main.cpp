// loropt - command-line front end.  Every subcommand prints one JSON
// document on stdout (or to --out); domain errors produce a machine-readable
// {"error": {...}} on stderr with exit code 1, usage errors exit with 2.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "loropt/batch.hpp"
#include "loropt/json_io.hpp"

using loropt::jsonio::json;

namespace {

struct ScanSpec {
    std::string param;
    double start{}, stop{};
    int steps{};
};

ScanSpec parse_scan(const std::string& text) {
    ScanSpec s;
    const auto eq = text.find('=');
    const auto c1 = text.find(':', eq == std::string::npos ? 0 : eq);
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--scan", "expected <param>=<start>:<stop>:<steps>");
    try {
        s.param = text.substr(0, eq);
        s.start = std::stod(text.substr(eq + 1, c1 - eq - 1));
        s.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        s.steps = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--scan", "expected <param>=<start>:<stop>:<steps>");
    }
    if (s.steps < 1)
        throw CLI::ValidationError("--scan", "steps must be at least 1");
    return s;
}

// --matrix and --jones payloads: inline JSON, @file, or - for stdin.
json load_payload(const std::string& text) {
    std::string raw = text;
    if (text == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        raw = buf.str();
    } else if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw std::domain_error("cannot open input file " + text.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        raw = buf.str();
    }
    try {
        return json::parse(raw);
    } catch (const json::parse_error& e) {
        throw std::domain_error(std::string("malformed JSON payload: ") + e.what());
    }
}

std::vector<double> parse_csv(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::domain_error(std::string(what) + ": expected comma-separated numbers");
        }
    }
    if (out.empty())
        throw std::domain_error(std::string(what) + ": empty list");
    return out;
}

double env_tolerance() {
    if (const char* e = std::getenv("LOROPT_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(e, &end);
        if (end != e && v > 0.0) return v;
    }
    return loropt::kTolDet;
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump() << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::domain_error("cannot open output file " + out_path);
    out << doc.dump() << "\n";
}

json cavity_json(const loropt::CavityConfig& cfg) {
    return loropt::jsonio::to_json(loropt::run_cavity(cfg));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-by-two matrix toolkit for polarization, lens, cavity and multilayer optics"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = env_tolerance();
    std::string out_path;
    std::string scan_text;
    app.add_option("--tol", tol, "tolerance for input validation (env LOROPT_TOL)");
    app.add_option("--out", out_path, "write the JSON result to a file instead of stdout");

    std::function<json()> action;

    // generators
    auto* gen = app.add_subcommand("generators", "generator sets and their commutator tables");
    std::string rep = "spinor";
    bool check = false;
    gen->add_option("--rep", rep, "spinor or vector")
        ->check(CLI::IsMember({"spinor", "vector"}));
    gen->add_flag("--check", check, "verify the commutator tables instead of dumping");
    gen->callback([&] {
        action = [&]() -> json {
            if (check) {
                const double defect =
                    rep == "spinor" ? loropt::spinor_table_defect() : loropt::vector_table_defect();
                return json{{"commutators_ok", defect <= 1e-15}};
            }
            if (rep == "spinor") {
                const auto g = loropt::spinor_generators();
                const auto dump3 = [](const std::array<loropt::Complex2, 3>& set) {
                    json arr = json::array();
                    for (const auto& m : set) arr.push_back(loropt::jsonio::to_json(m));
                    return arr;
                };
                json j;
                j["rep"] = "spinor";
                j["J"] = dump3(g.J);
                j["K"] = dump3(g.K);
                j["Kdot"] = dump3(g.Kdot);
                return j;
            }
            const auto g = loropt::vector_generators();
            json j;
            j["rep"] = "vector";
            json js = json::array(), ks = json::array();
            for (const auto& m : g.J) js.push_back(loropt::jsonio::to_json(m));
            for (const auto& m : g.K) ks.push_back(loropt::jsonio::to_json(m));
            j["J"] = js;
            j["K"] = ks;
            return j;
        };
    });

    // contract
    auto* con = app.add_subcommand("contract", "infinite-momentum contraction report");
    std::string etas_text = "2,3,4,5,6,7,8,9,10,11,12";
    con->add_option("--etas", etas_text, "comma-separated rapidity ladder");
    con->callback([&] {
        action = [&]() -> json {
            return loropt::jsonio::to_json(loropt::contract(parse_csv(etas_text, "--etas")));
        };
    });

    // polarize
    auto* pol = app.add_subcommand("polarize", "Jones states to Stokes vectors and the coherence mass");
    std::vector<std::string> jones_texts;
    std::string weights_text, pol_matrix_text;
    // allow_extra_args(false): keep bracketed JSON values intact, one per flag
    pol->add_option("--jones", jones_texts, "Jones vector as [[re,im],[re,im]] (repeatable for mixtures)")
        ->required()
        ->allow_extra_args(false);
    pol->add_option("--weights", weights_text, "comma-separated mixture weights");
    pol->add_option("--matrix", pol_matrix_text, "Jones matrix applied to every state");
    pol->callback([&] {
        action = [&]() -> json {
            std::vector<loropt::JonesVector> states;
            for (const auto& t : jones_texts)
                states.push_back(loropt::jsonio::jones_from_json(load_payload(t)));
            if (!pol_matrix_text.empty()) {
                const loropt::Complex2 m =
                    loropt::jsonio::complex2_from_json(load_payload(pol_matrix_text));
                for (auto& s : states) s = loropt::apply_jones(m, s);
            }
            std::vector<double> weights(states.size(), 1.0);
            if (!weights_text.empty()) weights = parse_csv(weights_text, "--weights");
            const auto coh = loropt::coherency_mix(weights, states);
            const auto stokes = loropt::stokes_from_coherency(coh);
            const auto mass = loropt::coherence_mass(stokes);
            json j;
            json states_json = json::array();
            for (const auto& s : states) states_json.push_back(loropt::jsonio::to_json(s));
            j["jones"] = states_json;
            j["weights"] = weights;
            j["coherency"] = loropt::jsonio::to_json(coh);
            j["stokes"] = loropt::jsonio::to_json(stokes);
            j["coherence_mass"] = mass.m;
            j["state"] = mass.label();
            return j;
        };
    });

    // lens
    auto* len = app.add_subcommand("lens", "one-lens system matrix and imaging flag");
    double z1 = 0.0, fl = 1.0, z2 = 0.0;
    len->add_option("--z1", z1, "object distance");
    len->add_option("--f", fl, "focal length");
    len->add_option("--z2", z2, "image distance");
    len->callback([&] {
        action = [&]() -> json {
            const auto point = [&](double pz1, double pf, double pz2) {
                const loropt::Real2 m = loropt::one_lens(pz1, pf, pz2);
                return json{{"z1", pz1},
                            {"f", pf},
                            {"z2", pz2},
                            {"matrix", loropt::jsonio::to_json(m)},
                            {"imaging", loropt::is_imaging(pz1, pf, pz2)}};
            };
            if (scan_text.empty()) return point(z1, fl, z2);
            const ScanSpec s = parse_scan(scan_text);
            const auto grid = loropt::batch::linspace(s.start, s.stop, s.steps);
            std::function<json(double)> f;
            if (s.param == "z1")
                f = [&](double v) { return point(v, fl, z2); };
            else if (s.param == "f")
                f = [&](double v) { return point(z1, v, z2); };
            else if (s.param == "z2")
                f = [&](double v) { return point(z1, fl, v); };
            else
                throw std::domain_error("lens: scannable parameters are z1, f, z2");
            return json(loropt::batch::parallel_map(grid, f));
        };
    });

    // core
    auto* cor = app.add_subcommand("core", "dimensionless core matrix and its factorization");
    double core_x = 1.0;
    cor->add_option("--x", core_x, "dimensionless z/f");
    cor->callback([&] {
        action = [&]() -> json {
            const auto point = [](double x) {
                json j{{"x", x}, {"matrix", loropt::jsonio::to_json(loropt::core(x))}};
                const json fact = loropt::jsonio::to_json(loropt::factor_core(x));
                for (auto it = fact.begin(); it != fact.end(); ++it) j[it.key()] = it.value();
                return j;
            };
            if (scan_text.empty()) return point(core_x);
            const ScanSpec s = parse_scan(scan_text);
            if (s.param != "x")
                throw std::domain_error("core: the only scannable parameter is x");
            const auto grid = loropt::batch::linspace(s.start, s.stop, s.steps);
            return json(loropt::batch::parallel_map(grid, point));
        };
    });

    // decompose
    auto* dec = app.add_subcommand("decompose", "Bargmann triple, lens chain, or Iwasawa witness");
    std::string kind, dec_matrix_text;
    double dec_eta = 0.0;
    dec->add_option("--kind", kind, "bargmann, lenses, or iwasawa")
        ->required()
        ->check(CLI::IsMember({"bargmann", "lenses", "iwasawa"}));
    dec->add_option("--matrix", dec_matrix_text, "real 2x2 input for bargmann/lenses");
    dec->add_option("--eta", dec_eta, "boost parameter for the iwasawa witness");
    dec->callback([&] {
        action = [&]() -> json {
            if (kind == "iwasawa") {
                const double theta = loropt::iwasawa_angle(dec_eta);
                return json{{"kind", "iwasawa"},
                            {"eta", dec_eta},
                            {"theta", theta},
                            {"matrix", loropt::jsonio::to_json(loropt::iwasawa_matrix(dec_eta))}};
            }
            if (dec_matrix_text.empty())
                throw std::domain_error("decompose: --matrix is required for this kind");
            const loropt::Real2 m =
                loropt::jsonio::real2_from_json(load_payload(dec_matrix_text));
            if (kind == "bargmann") {
                const auto t = loropt::bargmann(m, tol);
                json j{{"kind", "bargmann"}, {"matrix", loropt::jsonio::to_json(m)}};
                const json triple = loropt::jsonio::to_json(t);
                for (auto it = triple.begin(); it != triple.end(); ++it) j[it.key()] = it.value();
                j["reconstruction"] = loropt::jsonio::to_json(loropt::bargmann_reconstruct(t));
                return j;
            }
            const auto chain = loropt::synthesize_lenses(m, tol);
            return json{{"kind", "lenses"},
                        {"matrix", loropt::jsonio::to_json(m)},
                        {"chain", loropt::jsonio::to_json(chain)},
                        {"lens_count", chain.lens_count()},
                        {"virtual", chain.has_virtual_gap()},
                        {"product", loropt::jsonio::to_json(chain.product())}};
        };
    });

    // cavity
    auto* cav = app.add_subcommand("cavity", "N-cycle laser cavity report");
    double cav_x = 1.0;
    long long cycles = 1;
    bool half = false;
    cav->add_option("--x", cav_x, "dimensionless z/f");
    cav->add_option("--cycles", cycles, "number of complete cycles (each is C^2)");
    cav->add_flag("--half-cycles", half, "count single passes C instead of C^2");
    cav->callback([&] {
        action = [&]() -> json {
            if (scan_text.empty()) return cavity_json({cav_x, cycles, half});
            const ScanSpec s = parse_scan(scan_text);
            if (s.param != "x")
                throw std::domain_error("cavity: the only scannable parameter is x");
            const auto grid = loropt::batch::linspace(s.start, s.stop, s.steps);
            return json(loropt::batch::parallel_map(
                grid, [&](double v) { return cavity_json({v, cycles, half}); }));
        };
    });

    // multilayer
    auto* mul = app.add_subcommand("multilayer", "N-period multilayer report");
    loropt::LayerPair layers;
    long long periods = 1;
    bool want_iwasawa = false;
    mul->add_option("--eta", layers.eta, "boundary parameter");
    mul->add_option("--phi1", layers.phi1, "phase thickness of medium 1");
    mul->add_option("--phi2", layers.phi2, "phase thickness of medium 2");
    mul->add_option("--periods", periods, "number of periods");
    mul->add_flag("--iwasawa", want_iwasawa, "also scan for the triangular Iwasawa witness");
    mul->callback([&] {
        action = [&]() -> json {
            const auto point = [&](const loropt::LayerPair& p) {
                json j = loropt::jsonio::to_json(loropt::run_periods(p, periods));
                if (want_iwasawa) {
                    const auto w = loropt::iwasawa_scan(p);
                    j["iwasawa"] = w ? loropt::jsonio::to_json(*w) : json();
                }
                return j;
            };
            if (scan_text.empty()) return point(layers);
            const ScanSpec s = parse_scan(scan_text);
            char which;
            if (s.param == "eta")
                which = 'e';
            else if (s.param == "phi1")
                which = '1';
            else if (s.param == "phi2")
                which = '2';
            else
                throw std::domain_error("multilayer: scannable parameters are eta, phi1, phi2");
            const auto grid = loropt::batch::linspace(s.start, s.stop, s.steps);
            return json(loropt::batch::parallel_map(grid, [&](double v) {
                loropt::LayerPair p = layers;
                if (which == 'e') p.eta = v;
                if (which == '1') p.phi1 = v;
                if (which == '2') p.phi2 = v;
                return point(p);
            }));
        };
    });

    // power
    auto* pow = app.add_subcommand("power", "closed-form N-th power of a unimodular matrix");
    std::string pow_matrix_text;
    long long pow_n = 1;
    pow->add_option("--matrix", pow_matrix_text, "real 2x2 with determinant 1")->required();
    pow->add_option("--n", pow_n, "exponent (nonnegative)");
    pow->callback([&] {
        action = [&]() -> json {
            const loropt::Real2 m = loropt::jsonio::real2_from_json(load_payload(pow_matrix_text));
            return loropt::jsonio::to_json(loropt::power_closed_form(m, pow_n, tol));
        };
    });

    for (auto* sub : {len, cor, cav, mul})
        sub->add_option("--scan", scan_text, "<param>=<start>:<stop>:<steps> sweep");
    (void)gen;
    (void)con;
    (void)pol;
    (void)dec;
    (void)pow;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        emit(action(), out_path);
    } catch (const std::range_error& e) {
        std::cerr << json{{"error", {{"kind", "range"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
