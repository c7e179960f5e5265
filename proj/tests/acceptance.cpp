// Acceptance suite: one pass/fail line per criterion.
// Usage: loropt_acceptance <path-to-cli> <golden-dir>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "loropt/batch.hpp"
#include "loropt/json_io.hpp"
#include "oracles.hpp"

using namespace loropt;

namespace {

std::string g_cli_path;
std::string g_golden_dir;
std::vector<std::string> g_details;

void fail(const std::string& detail) { g_details.push_back(detail); }

void expect(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
}

const double kPi = std::acos(-1.0);

// ---- criterion 1: generator commutator tables ----------------------------
bool criterion_generator_tables() {
    expect(spinor_table_defect() <= 1e-15, "spinor J/K table defect above 1e-15");
    expect(vector_table_defect() <= 1e-15, "vector J/K table defect above 1e-15");

    const auto g = massless_generators();
    const cplx i{0.0, 1.0};
    expect(commutator(g.n1, g.n2).max_abs() <= 1e-15, "[N1,N2] != 0");
    expect(max_abs_diff(commutator(g.j3, g.n1), i * g.n2) <= 1e-15, "[J3,N1] != iN2");
    expect(max_abs_diff(commutator(g.j3, g.n2), -i * g.n1) <= 1e-15, "[J3,N2] != -iN1");

    // Shear algebra of the printed generators.  [X1,X2] = iX3 pins the
    // normalization; the remaining brackets then carry the factor 2.
    const ShearGenerators sg = shear_generators();
    expect(max_abs_diff(commutator(sg.x1, sg.x2), i * sg.x3) <= 1e-15, "[X1,X2] != iX3");
    expect(max_abs_diff(commutator(sg.x1, sg.x3), -2.0 * i * sg.x1) <= 1e-15,
           "[X1,X3] != -2iX1");
    expect(max_abs_diff(commutator(sg.x2, sg.x3), 2.0 * i * sg.x2) <= 1e-15,
           "[X2,X3] != 2iX2");
    expect(sg.solve_residual <= 1e-14, "shear generators are not Sp(2) combinations");

    const auto sp2 = sp2_generators();
    expect(max_abs_diff(commutator(sp2[0], sp2[1]), -i * sp2[2]) <= 1e-15, "[B1,B2] != -iJ");
    return g_details.empty();
}

// ---- criterion 2: covering homomorphism -----------------------------------
bool criterion_covering_homomorphism() {
    std::mt19937_64 rng(1001);
    double worst_hom = 0.0, worst_metric = 0.0, worst_kernel = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Complex2 l1 = oracle::random_unit_det(rng);
        const Complex2 l2 = oracle::random_unit_det(rng);
        const Lorentz4 a = induced_lorentz(l1);
        worst_hom = std::max(worst_hom,
                             max_abs_diff(induced_lorentz(l1 * l2), a * induced_lorentz(l2)));
        worst_metric = std::max(worst_metric, metric_defect(a));
        worst_kernel = std::max(worst_kernel, max_abs_diff(induced_lorentz(-l1), a));
    }
    expect(worst_hom <= 1e-10, "homomorphism defect " + std::to_string(worst_hom));
    expect(worst_metric <= 1e-10, "metric defect " + std::to_string(worst_metric));
    expect(worst_kernel == 0.0, "kernel: L and -L induce different matrices");
    return g_details.empty();
}

// ---- criterion 3: group contraction ---------------------------------------
bool criterion_contraction() {
    std::vector<double> ladder;
    for (double e = 3.0; e <= 10.01; e += 0.5) ladder.push_back(e);
    const ContractionReport rep = contract(ladder);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(ladder.size());
    for (std::size_t k = 0; k < ladder.size(); ++k) {
        sx += ladder[k];
        sy += std::log(rep.error[k]);
        sxx += ladder[k] * ladder[k];
        sxy += ladder[k] * std::log(rep.error[k]);
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    expect(std::abs(slope + 2.0) <= 0.1, "log-error slope " + std::to_string(slope));

    const ContractionReport r12 = contract({12.0});
    const double err12 = max_abs_diff(r12.limit, massless_generators().n1);
    expect(err12 <= 1e-8, "limit error at eta=12 is " + std::to_string(err12));
    return g_details.empty();
}

// ---- criterion 4: polarization route equivalence ---------------------------
bool criterion_polarization() {
    std::mt19937_64 rng(1004);
    double worst_route = 0.0, worst_m2 = 0.0;
    for (int k = 0; k < 500; ++k) {
        const JonesVector v = oracle::random_jones(rng);
        const Complex2 l = oracle::random_unit_det(rng);
        const StokesVector via_jones = stokes_of(apply_jones(l, v));
        const StokesVector via_mueller = apply_mueller(mueller(l), stokes_of(v));
        worst_route = std::max({worst_route, std::abs(via_jones.s0 - via_mueller.s0),
                                std::abs(via_jones.s1 - via_mueller.s1),
                                std::abs(via_jones.s2 - via_mueller.s2),
                                std::abs(via_jones.s3 - via_mueller.s3)});

        const StokesVector s = stokes_of(v);
        const StokesVector ls = apply_mueller(mueller(l), s);
        worst_m2 = std::max(worst_m2,
                            std::abs(ls.minkowski_norm2() - s.minkowski_norm2()));

        // three-way purity: pure state <=> det coherency 0 <=> M = 0
        const CoherencyMatrix c = coherency_of(v);
        const double scale = std::max(1.0, s.s0 * s.s0);
        expect(std::abs(c.det()) <= 1e-12 * scale, "pure state has nonzero coherency det");
        expect(coherence_mass(s).state == PolarizationState::Pure,
               "pure state not classified pure");
    }
    expect(worst_route <= 1e-10, "route defect " + std::to_string(worst_route));
    expect(worst_m2 <= 1e-10, "M^2 not invariant: " + std::to_string(worst_m2));

    // mixed and random corners
    expect(coherence_mass({1, 0, 0, 0}).state == PolarizationState::CompletelyRandom,
           "unpolarized state not classified completely random");
    const CoherencyMatrix mix =
        coherency_mix({0.7, 0.3}, {JonesVector{1, 0}, JonesVector{0, 1}});
    expect(coherence_mass(stokes_from_coherency(mix)).state ==
               PolarizationState::PartiallyMixed,
           "mixture not classified partially mixed");
    return g_details.empty();
}

// ---- criterion 5: imaging condition ----------------------------------------
bool criterion_imaging() {
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> u(0.5, 5.0);
    for (int k = 0; k < 100; ++k) {
        const double z1 = u(rng), z2 = u(rng);
        const double f = 1.0 / (1.0 / z1 + 1.0 / z2);
        const double ur = std::abs(one_lens(z1, f, z2).b);
        expect(ur <= 1e-12 * (z1 + z2), "imaging upper-right " + std::to_string(ur));
        const double perturbed = std::abs(one_lens(z1, f * 1.001, z2).b);
        expect(perturbed > 1e-6, "perturbed triple too close to imaging");
    }
    return g_details.empty();
}

// ---- criterion 6: core factorization ---------------------------------------
bool criterion_core_factorization() {
    auto xs = batch::linspace(0.01, 1.99, 8000);
    const auto hi = batch::linspace(2.01, 6.0, 8000);
    xs.insert(xs.end(), hi.begin(), hi.end());
    const double worst = batch::core_reconstruction_max_error(xs);
    expect(worst <= 1e-11, "grid reconstruction error " + std::to_string(worst));

    for (double x : {2.0, 2.0 - 5e-7, 2.0 + 5e-7}) {
        const CoreFactorization f = factor_core(x);
        expect(f.branch == CoreFactorization::Branch::Parabolic, "window not parabolic");
        expect(f.reconstruction.b == 0.0 && f.reconstruction.a == 1.0 &&
                   f.reconstruction.d == 1.0,
               "window reconstruction not exactly triangular");
    }

    // last decade toward 2 from below: eta grows, phi shrinks, monotonically
    double prev_eta = -1.0, prev_phi = 1e9;
    bool monotone = true;
    for (int k = 0; k < 40; ++k) {
        const double x = 2.0 - std::pow(10.0, -1.0 - 4.0 * k / 39.0);  // 1e-1 .. 1e-5
        const CoreFactorization f = factor_core(x);
        monotone = monotone && f.eta > prev_eta && f.angle < prev_phi;
        prev_eta = f.eta;
        prev_phi = f.angle;
    }
    expect(monotone, "eta/phi not monotone approaching the parabolic point");
    expect(prev_eta > 4.0 && prev_phi < 0.02, "eta does not diverge / phi does not vanish");
    return g_details.empty();
}

// ---- criterion 7: Bargmann and lens synthesis -------------------------------
bool criterion_bargmann_and_lenses() {
    std::mt19937_64 rng(1007);
    double worst_rt = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Real2 m = oracle::random_sp2(rng);
        worst_rt = std::max(worst_rt, max_abs_diff(bargmann_reconstruct(bargmann(m)), m));
    }
    expect(worst_rt <= 1e-12, "bargmann round trip " + std::to_string(worst_rt));

    double worst_chain = 0.0;
    int worst_count = 0;
    for (int k = 0; k < 200; ++k) {
        const Real2 m = oracle::random_sp2(rng);
        const LensChain chain = synthesize_lenses(m);
        worst_count = std::max(worst_count, chain.lens_count());
        worst_chain = std::max(worst_chain, max_abs_diff(chain.product(), m));
    }
    expect(worst_count <= 3, "chain used more than three lenses");
    expect(worst_chain <= 1e-10, "chain product error " + std::to_string(worst_chain));
    return g_details.empty();
}

// ---- criterion 8: closed-form powers ----------------------------------------
bool criterion_powers() {
    const std::vector<Real2> samples{core(0.5), core(1.5),  core(1.99), core(2.0),
                                     core(2.5), core(4.0),  rotation(2.1),
                                     Real2{1.0, -2.0, 0.0, 1.0}};
    for (const Real2& m : samples) {
        for (long long n : {0LL, 1LL, 5LL, 17LL, 32LL}) {
            const Real2 closed = power_closed_form(m, n);
            const Real2 direct = oracle::pow_direct(m, n);
            const double err = max_abs_diff(closed, direct);
            expect(err <= 1e-9 * std::max(1.0, direct.max_abs()),
                   "power error " + std::to_string(err));
        }
    }

    const CavityReport unit = run_cavity({1.0, 2, false});
    expect(max_abs_diff(unit.matrix, Real2::identity()) <= 1e-12,
           "x=1, N=2 does not close to the identity");

    for (double x : {0.3, 0.9, 1.5, 1.99}) {
        const auto t0 = std::chrono::steady_clock::now();
        const CavityReport rep = run_cavity({x, 1000000, false});
        const auto t1 = std::chrono::steady_clock::now();
        const double bound = 2.0 * std::cosh(factor_core(x).eta);
        expect(rep.stable && rep.matrix.max_abs() <= bound + 1e-9,
               "stable cavity unbounded at N=1e6");
        expect(std::chrono::duration<double>(t1 - t0).count() < 0.01,
               "N=1e6 evaluation is not O(1)");
    }
    return g_details.empty();
}

// ---- criterion 9: SU(1,1) <-> Sp(2) conjugation ------------------------------
bool criterion_conjugation() {
    std::mt19937_64 rng(1009);
    double worst_rt = 0.0, worst_route = 0.0;
    for (int k = 0; k < 500; ++k) {
        const Complex2 w = oracle::random_su11(rng);
        worst_rt = std::max(worst_rt, max_abs_diff(sp2_to_su11(su11_to_sp2(w)), w));

        std::uniform_real_distribution<double> ue(-1.2, 1.2), up(-3.0, 3.0);
        const LayerPair p{ue(rng), up(rng), up(rng)};
        worst_route =
            std::max(worst_route, max_abs_diff(period_sp2(p), su11_to_sp2(period(p))));
    }
    expect(worst_rt <= 1e-12, "conjugation round trip " + std::to_string(worst_rt));
    expect(worst_route <= 1e-12, "period route equality " + std::to_string(worst_route));
    return g_details.empty();
}

// ---- criterion 10: Iwasawa witness -------------------------------------------
bool criterion_iwasawa() {
    const double eta1 = std::log(1.0 + std::sqrt(2.0));  // sinh eta = 1
    expect(std::abs(iwasawa_angle(eta1) - kPi / 8.0) <= 1e-12, "theta at sinh eta = 1");
    expect(max_abs_diff(iwasawa_matrix(eta1), Real2{1.0, 0.0, 2.0, 1.0}) <= 1e-12,
           "assembled matrix at sinh eta = 1");

    for (double e : batch::linspace(0.0, 3.0, 31)) {
        const Real2 m = iwasawa_matrix(e);
        expect(std::abs(m.c - 2.0 * std::sinh(e)) <= 1e-12 * std::max(1.0, std::cosh(e)),
               "lower-left != 2 sinh eta at eta " + std::to_string(e));
        expect(std::abs(m.b) <= 1e-12 * std::max(1.0, std::cosh(e)),
               "upper-right does not vanish at eta " + std::to_string(e));
    }
    return g_details.empty();
}

// ---- criterion 11: CLI determinism -------------------------------------------
struct RunResult {
    int status{};
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        r.status = -1;
        return r;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    std::fclose(f);
    return out;
}

bool criterion_cli() {
    const std::array<std::pair<std::string, std::string>, 3> cases{
        {{"generators --rep spinor --check", "generators_check.json"},
         {"cavity --x 1.0 --cycles 2", "cavity_x1_n2.json"},
         {"power --matrix [[1,1],[0,1]] --n 5", "power_shear_n5.json"}}};

    for (const auto& [args, golden_name] : cases) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        expect(first.status == 0, "CLI exited " + std::to_string(first.status) + ": " + args);
        expect(first.out == second.out, "CLI output not deterministic: " + args);
        const std::string golden = slurp(g_golden_dir + "/" + golden_name);
        expect(!golden.empty(), "missing golden file " + golden_name);
        expect(first.out == golden, "CLI output differs from golden " + golden_name);
    }

    // exit-code contract: usage errors 2, domain errors 1 with an error object
    expect(run_cli("no-such-command").status == 2, "unknown subcommand should exit 2");
    expect(run_cli("power --matrix [[2,0],[0,1]] --n 3").status == 1,
           "non-unimodular input should exit 1");
    expect(run_cli("core --x -1").status == 1, "domain error should exit 1");
    return g_details.empty();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    if (argc > 2) g_golden_dir = argv[2];

    struct Criterion {
        const char* name;
        std::function<bool()> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria{
        {"1 generator commutator tables", criterion_generator_tables, 1.0},
        {"2 covering homomorphism", criterion_covering_homomorphism, 5.0},
        {"3 O(3)->E(2) contraction", criterion_contraction, 5.0},
        {"4 polarization routes and M^2", criterion_polarization, 5.0},
        {"5 imaging condition", criterion_imaging, 5.0},
        {"6 core factorization", criterion_core_factorization, 5.0},
        {"7 Bargmann and lens synthesis", criterion_bargmann_and_lenses, 5.0},
        {"8 closed-form powers", criterion_powers, 5.0},
        {"9 SU(1,1)<->Sp(2) conjugation", criterion_conjugation, 5.0},
        {"10 Iwasawa witness", criterion_iwasawa, 5.0},
        {"11 CLI determinism", criterion_cli, 30.0},
    };

    int failures = 0;
    const auto suite_start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        g_details.clear();
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) {
            ok = false;
            fail("runtime " + std::to_string(secs) + " s over budget");
        }
        std::printf("%s criterion %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.name, secs);
        for (const auto& d : g_details) std::printf("       %s\n", d.c_str());
        if (!ok) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::printf("%d/%zu criteria passed in %.2f s\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    if (total >= 60.0) {
        std::printf("FAIL suite runtime budget (60 s)\n");
        ++failures;
    }
    return failures == 0 ? 0 : 1;
}
