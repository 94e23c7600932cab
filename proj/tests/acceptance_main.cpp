// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the CLI binary path (used by the determinism criterion).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace rotspec;
using namespace testsupport;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// 1. pressure/variational suite
void criterion1() {
    std::mt19937_64 rng(20260810);
    double worst = 0;
    auto run = [&](const TransitionGraph& g, const CylinderPotential& phi) {
        for (int i = 0; i < 100; ++i) {
            auto v = random_direction(rng, phi.dimension(), 5.0);
            PressureReport rep = pressure(g, phi, v);
            double h = measure_entropy(g, rep.equilibrium);
            Vec rv = measure_rotation_vector(g, rep.equilibrium, phi);
            double lin = 0;
            for (size_t k = 0; k < v.size(); ++k) lin += v[k] * rv[k];
            worst = std::max(worst, std::abs(rep.pressure - h - lin));
        }
    };
    TransitionGraph f2 = full_shift(2), gm = golden_mean_shift();
    run(f2, label_potential(f2));
    run(gm, label_potential(gm));
    auto rnd = random_irreducible_system(20260810);
    run(rnd.graph, rnd.potential);

    double p0_f2 = std::abs(pressure(f2, label_potential(f2), {0.0}).pressure -
                            topological_entropy(f2));
    double p0_gm = std::abs(pressure(gm, label_potential(gm), {0.0}).pressure -
                            topological_entropy(gm));
    double p0_rnd = std::abs(pressure(rnd.graph, rnd.potential, {0.0, 0.0}).pressure -
                             topological_entropy(rnd.graph));
    double gm_ref = std::abs(topological_entropy(gm) - 0.481212);
    bool pass = worst <= 1e-8 && p0_f2 <= 1e-10 && p0_gm <= 1e-10 && p0_rnd <= 1e-10 &&
                gm_ref <= 1e-6;
    report(1, "pressure/variational suite", pass,
           "max |P-h-<v,rv>| = " + fmt(worst) + ", golden h_top err = " + fmt(gm_ref));
}

// 2. closed-form localized entropy
void criterion2() {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    RotationPolytope P = rotation_set(g, phi);
    double worst = 0;
    for (int j = 1; j <= 99; ++j) {
        double w = j / 100.0;
        auto le = localized_entropy(g, phi, {w}, P);
        worst = std::max(worst, std::abs(le.H - binary_entropy(w)));
    }
    auto mid = localized_entropy(g, phi, {0.5}, P);
    bool boundary_ok = true;
    for (double w : {0.0, 1.0}) {
        auto le = localized_entropy(g, phi, {w}, P);
        if (!le.boundary || le.H > 1e-6) boundary_ok = false;
    }
    bool pass = worst <= 1e-6 && std::abs(mid.H - std::log(2.0)) <= 1e-9 && boundary_ok;
    report(2, "closed-form localized entropy (99-point grid)", pass,
           "max |H - binary entropy| = " + fmt(worst));
}

// 3. rotation-set exactness
void criterion3() {
    std::mt19937_64 rng(333);
    double worst = 0;
    auto run = [&](const TransitionGraph& g, const CylinderPotential& phi) {
        RotationPolytope P = rotation_set(g, phi);
        for (int i = 0; i < 200; ++i) {
            auto v = random_direction(rng, phi.dimension(), 1.0);
            double n = norm(v);
            if (n < 1e-9) continue;
            for (double& x : v) x /= n;
            double hull = -1e300;
            for (const Vec& vert : P.vertices) hull = std::max(hull, dot(v, vert));
            worst = std::max(worst, std::abs(hull - support_function(g, phi, v)));
        }
    };
    TransitionGraph f2 = full_shift(2), gm = golden_mean_shift();
    run(f2, label_potential(f2));
    run(gm, label_potential(gm));
    auto pair_sys = pair_potential_system();
    run(pair_sys.graph, pair_sys.potential);
    auto diag = diagonal_degenerate_system();
    run(diag.graph, diag.potential);
    auto rnd = random_irreducible_system(97);
    run(rnd.graph, rnd.potential);
    report(3, "rotation-set exactness (hull vs support function)", worst <= 1e-9,
           "max deviation over 200 directions x 5 systems = " + fmt(worst));
}

// 4. spectrum law at an interior point
void criterion4() {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    DistanceTarget tgt;
    tgt.orbit_words = {{0}, {1}};
    auto dp = distance_potential(g, phi, tgt, 2);
    SpectrumScan scan = spectrum_scan(dp.recode.graph, dp.recode.potential, {0.5}, 64);

    bool h0 = scan.H.front() == 0.0 && scan.grid.front() == 0.0;
    double max_err = std::abs(scan.H_w - std::log(2.0));
    double conc = 0;
    for (size_t i = 1; i + 1 < scan.grid.size(); ++i) {
        double x0 = scan.grid[i - 1], x1 = scan.grid[i], x2 = scan.grid[i + 1];
        double t = (x1 - x0) / (x2 - x0);
        conc = std::max(conc, (1 - t) * scan.H[i - 1] + t * scan.H[i + 1] - scan.H[i]);
    }
    bool pass = h0 && max_err <= 1e-5 && conc <= 1e-6 && scan.max_sorted_gap <= 0.03;
    report(4, "interior spectrum law [0, H(w)]", pass,
           "max err = " + fmt(max_err) + ", concavity slack = " + fmt(conc) +
               ", sorted gap = " + fmt(scan.max_sorted_gap));
}

// 5. boundary gallery: singleton and full interval
void criterion5() {
    auto singleton = boundary_example_singleton(2, {0});
    bool s_ok = true;
    for (const auto& r : singleton.verdicts) s_ok = s_ok && r.pass;

    auto full = boundary_example_full_interval(2, golden_mean_shift(), 1, 64);
    bool f_ok = true;
    double hY_err = 1, gap = 1;
    for (const auto& r : full.verdicts) {
        f_ok = f_ok && r.pass;
        if (r.claim == "H(w) equals h_top(Y)") hY_err = std::abs(r.measured - 0.481212);
        if (r.claim == "coverage gap") gap = r.measured;
    }
    bool pass = s_ok && f_ok && hY_err <= 1e-6 && gap <= 0.02;
    report(5, "boundary spectra: singleton and full interval", pass,
           "H(w) err = " + fmt(hY_err) + ", coverage gap = " + fmt(gap));
}

// 6. interior perturbation surgery
void criterion6() {
    auto sys = pair_potential_system();
    std::vector<MarkovMeasure> seeds;
    {
        MarkovMeasure a;  // rv (0.25, 0)
        a.kernel = {2.0 / 3, 1.0 / 3, 1.0, 0.0};
        a.stationary = {0.75, 0.25};
        MarkovMeasure b;  // rv (1/3, 0)
        b.kernel = {0.5, 0.5, 1.0, 0.0};
        b.stationary = {2.0 / 3, 1.0 / 3};
        MarkovMeasure c;  // rv (2/3, 1/3)
        c.kernel = {0.0, 1.0, 0.5, 0.5};
        c.stationary = {1.0 / 3, 2.0 / 3};
        seeds = {a, b, c};
    }
    bool pass = true;
    std::string detail;
    for (double eps : {0.2, 0.05}) {
        for (size_t i = 0; i < seeds.size(); ++i) {
            try {
                PerturbationReport rep = perturb_to_interior(sys.graph, sys.potential, seeds[i], eps);
                bool ok = rep.class_before == PointClass::boundary &&
                          rep.class_after == PointClass::interior && rep.sup_norm_change < eps;
                if (!ok) {
                    pass = false;
                    detail += "case " + std::to_string(i) + " eps " + fmt(eps) + " failed; ";
                }
            } catch (const std::exception& ex) {
                pass = false;
                detail += std::string("exception: ") + ex.what() + "; ";
            }
        }
    }
    report(6, "interior perturbation surgery (3 seeds x eps {0.2, 0.05})", pass, detail);
}

// 7. coordinate extension
void criterion7() {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    PressureReport mme = pressure(g, phi, {0.0});
    auto phi_next = [&](const std::vector<int>& word) {
        double a = g.edge(word[0]).label, b = g.edge(word[1]).label;
        return std::vector<double>{a * b};
    };
    try {
        ExtensionReport rep = extend_coordinates(g, phi, {0.5}, mme.equilibrium, phi_next, 2);
        bool interior = rep.class_after == PointClass::interior && !rep.surgery_applied;
        bool range = rep.scan.range_min == 0.0 &&
                     rep.scan.range_max >= std::log(2.0) - 0.02 &&
                     rep.scan.max_sorted_gap <= 0.02;
        report(7, "coordinate extension keeps w interior", interior && range,
               "scan range [" + fmt(rep.scan.range_min) + ", " + fmt(rep.scan.range_max) +
                   "], gap = " + fmt(rep.scan.max_sorted_gap));
    } catch (const std::exception& ex) {
        report(7, "coordinate extension keeps w interior", false, ex.what());
    }
}

// 8. ergodic trace
void criterion8() {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    DistanceTarget tgt;
    tgt.orbit_words = {{0}, {1}};
    auto dp = distance_potential(g, phi, tgt, 2);
    ErgodicTrace tr = ergodic_spectrum_trace(dp.recode.graph, dp.recode.potential, {0.5}, 128);
    double vi = 0;
    for (const auto& p : tr.points) {
        Vec rv = measure_rotation_vector(dp.recode.graph, p.certificate, dp.recode.potential);
        double lin = 0;
        for (size_t k = 0; k < p.direction.size(); ++k) lin += p.direction[k] * rv[k];
        vi = std::max(vi, std::abs(p.pressure - p.entropy - lin));
    }
    bool cover = tr.covered_min <= 0.05 && tr.covered_max >= std::log(2.0) - 1e-4 &&
                 tr.max_sorted_gap <= 0.02;
    report(8, "ergodic trace covers (0.05, ln 2]", cover && vi <= 1e-8,
           "covered [" + fmt(tr.covered_min) + ", " + fmt(tr.covered_max) + "], gap = " +
               fmt(tr.max_sorted_gap) + ", max variational defect = " + fmt(vi));
}

// 9. loop-family machinery
void criterion9() {
    LoopFamily fam{{{0}, {0, 1}}};
    double h = topological_entropy(sofic_closure(fam, 2));
    bool sofic_ok = std::abs(h - 0.481212) <= 1e-6;

    bool monotone_n = true, decreasing_j = true, inequality = false;
    double prev_sup = 1e300;
    for (int js : {1, 2, 3, 4, 5}) {
        BranchLoopSpec spec;
        spec.alphabet = 2;
        spec.stream1 = {{}, {0}};
        spec.stream2 = {{}, {1}};
        spec.j1_star = js;
        spec.j2_star = js;
        spec.return_label1 = 1;
        spec.return_label2 = 0;
        spec.depth_n = 8;
        BranchLoopSystem sys = build_figure1_system(spec);
        for (size_t i = 1; i < sys.entropies.size(); ++i)
            if (sys.entropies[i] < sys.entropies[i - 1] - 1e-12) monotone_n = false;
        double sup = *std::max_element(sys.entropies.begin(), sys.entropies.end());
        if (sup > prev_sup + 1e-12) decreasing_j = false;
        prev_sup = sup;
        if (figure1_inequality(sys, 0.4, 0.5, 0.05).pass) inequality = true;
    }
    bool pass = sofic_ok && monotone_n && decreasing_j && inequality;
    report(9, "loop families: sofic closure entropy and truncation table", pass,
           "closure entropy err = " + fmt(std::abs(h - 0.481212)));
}

// 10. CLI determinism
void criterion10(const char* cli) {
    if (!cli) {
        report(10, "CLI determinism", false, "no CLI path given");
        return;
    }
    std::string dir = "acceptance_tmp";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    {
        std::ofstream sys_file(dir + "/full2.sys");
        sys_file << "[meta]\nname=full-2-shift\nalphabet=2\n[vertices]\nq0\n[edges]\n"
                    "q0 -> q0 label=0 phi=0\nq0 -> q0 label=1 phi=1\n";
    }
    auto run = [&](const std::string& out) {
        std::string cmd = std::string(cli) + " spectrum-scan " + dir + "/full2.sys --w 0.5 " +
                          "--aux dist:orbits=0,1 --window 2 --grid 24 --seed 7 --out " + dir +
                          "/" + out;
        return std::system(cmd.c_str());
    };
    auto slurp = [&](const std::string& p) {
        std::ifstream in(dir + "/" + p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    int rc1 = run("a.csv"), rc2 = run("b.csv");
    std::string a = slurp("a.csv"), b = slurp("b.csv");

    auto run_rot = [&](const std::string& out) {
        std::string cmd = std::string(cli) + " rotation-set " + dir + "/full2.sys --seed 7 --out " +
                          dir + "/" + out;
        return std::system(cmd.c_str());
    };
    int rc3 = run_rot("r1.csv"), rc4 = run_rot("r2.csv");
    std::string r1 = slurp("r1.csv"), r2 = slurp("r2.csv");

    bool pass = rc1 == 0 && rc2 == 0 && rc3 == 0 && rc4 == 0 && !a.empty() && a == b &&
                !r1.empty() && r1 == r2;
    report(10, "CLI determinism (byte-identical reruns)", pass,
           pass ? "spectrum-scan and rotation-set outputs identical" : "outputs differ or run failed");
    std::system(("rm -rf " + dir).c_str());
}

}  // namespace

int main(int argc, char** argv) {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10(argc > 1 ? argv[1] : nullptr);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures ? 1 : 0;
}
