// rotspec — command-line frontend.
//
// Exit codes: 0 success, 1 input/validation error, 2 numerical failure.
// All output is deterministic for fixed flags and seed.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rotspec/rotspec.hpp"

namespace {

using namespace rotspec;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << content;
}

Vec parse_vec(const std::string& s) {
    Vec v;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (...) {
            throw std::invalid_argument("bad numeric value '" + tok + "' in --w");
        }
    }
    if (v.empty()) throw std::invalid_argument("--w is empty");
    return v;
}

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> w;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("orbit words are digit strings");
        w.push_back(c - '0');
    }
    if (w.empty()) throw std::invalid_argument("empty orbit word");
    return w;
}

LabelStream parse_stream(const std::string& s) {
    // "head:cycle", both digit strings; head may be empty
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("stream format is head:cycle (digit strings)");
    LabelStream st;
    for (char c : s.substr(0, colon)) st.head.push_back(c - '0');
    for (char c : s.substr(colon + 1)) st.cycle.push_back(c - '0');
    if (st.cycle.empty()) throw std::invalid_argument("stream cycle part must be nonempty");
    return st;
}

// --aux dist:orbits=<w1>,<w2>,... | dist:caratheodory
struct AuxSpec {
    bool caratheodory = false;
    std::vector<std::vector<int>> orbit_words;
};

AuxSpec parse_aux(const std::string& s) {
    AuxSpec spec;
    const std::string p1 = "dist:orbits=";
    if (s == "dist:caratheodory") {
        spec.caratheodory = true;
        return spec;
    }
    if (s.rfind(p1, 0) == 0) {
        std::istringstream in(s.substr(p1.size()));
        std::string tok;
        while (std::getline(in, tok, ',')) spec.orbit_words.push_back(parse_word(tok));
        if (spec.orbit_words.empty()) throw std::invalid_argument("--aux lists no orbits");
        return spec;
    }
    throw std::invalid_argument("--aux must be dist:orbits=<w,...> or dist:caratheodory");
}

// Build the extended (Phi, dist) system for scan/trace subcommands.
DistancePotential build_aux(const ParsedSystem& sys, const AuxSpec& aux, const Vec& w,
                            int window_k, int max_period) {
    DistanceTarget tgt;
    if (aux.caratheodory) {
        RotationPolytope P = rotation_set(sys.graph, sys.potential);
        auto orbits = enumerate_periodic_orbits(sys.graph, max_period);
        std::vector<Vec> rvs;
        for (const auto& o : orbits) rvs.push_back(orbit_rotation_vector(sys.graph, sys.potential, o));
        CaratheodoryDecomposition dec = caratheodory_decompose(P, rvs, w);
        for (int idx : dec.orbit_indices) {
            std::vector<int> labels;
            for (int e : orbits[idx].edges()) labels.push_back(sys.graph.edge(e).label);
            tgt.orbit_words.push_back(labels);
        }
    } else {
        tgt.orbit_words = aux.orbit_words;
    }
    int k = window_k > 0 ? window_k : tgt.max_orbit_period();
    return distance_potential(sys.graph, sys.potential, tgt, k);
}

int run(int argc, char** argv) {
    CLI::App app{"rotation sets, localized entropy, and entropy spectra of shifts of finite type"};
    app.require_subcommand(1);

    std::string input, out_path, w_str, aux_str = "dist:caratheodory";
    int grid = 64, max_period = 12, window = 0;
    double tol = 1e-9;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("input", input, "system definition file")->required();
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--tol", tol, "classification tolerance");
        cmd->add_option("--seed", seed, "seed recorded for reproducibility");
        cmd->add_option("--max-period", max_period, "periodic orbit search bound");
        cmd->add_option("--grid", grid, "grid size");
        cmd->add_option("--window", window, "distance potential window radius k");
    };

    auto* c_rot = app.add_subcommand("rotation-set", "vertices + halfspaces of Rot(Phi)");
    add_common(c_rot, true);
    bool svg = false;
    std::string mark_w;
    c_rot->add_flag("--svg", svg, "also emit an SVG (2-dimensional sets only)");
    c_rot->add_option("--mark-w", mark_w, "marker point for the SVG");

    auto* c_loc = app.add_subcommand("localized-entropy", "H(w) for a single w or a 1-d sweep");
    add_common(c_loc, true);
    bool sweep = false;
    c_loc->add_option("--w", w_str, "target rotation vector (comma separated)");
    c_loc->add_flag("--sweep", sweep, "sweep the rotation interval (1-dimensional potentials)");

    auto* c_scan = app.add_subcommand("spectrum-scan", "H(w, x) over the fiber interval [0, b]");
    add_common(c_scan, true);
    c_scan->add_option("--w", w_str, "target rotation vector")->required();
    c_scan->add_option("--aux", aux_str, "auxiliary potential: dist:orbits=.. or dist:caratheodory");

    auto* c_trace = app.add_subcommand("ergodic-trace", "equilibrium entropies along the fiber");
    add_common(c_trace, true);
    c_trace->add_option("--w", w_str, "target rotation vector")->required();
    c_trace->add_option("--aux", aux_str, "auxiliary potential");

    auto* c_gal = app.add_subcommand("gallery", "boundary/perturbation/extension examples");
    std::string example_id;
    int gal_d = 2;
    std::string gal_orbit = "0", gal_y = "golden";
    double gal_eps = 0.05;
    c_gal->add_option("example", example_id, "singleton | full-interval | perturb | extend")
        ->required();
    add_common(c_gal, false);
    c_gal->add_option("--d", gal_d, "ambient full-shift alphabet size");
    c_gal->add_option("--orbit", gal_orbit, "periodic orbit word (singleton example)");
    c_gal->add_option("--y", gal_y, "sub-SFT for full-interval: golden | full2");
    c_gal->add_option("--eps", gal_eps, "perturbation budget");

    auto* c_fig = app.add_subcommand("figure1", "two-branch loop system entropy table");
    int j1 = 1, j2 = 1, fn = 4, fd = 2, ret1 = 1, ret2 = 0;
    double h1 = 0.4, h2 = 0.5, margin = 0.05;
    std::string stream1 = ":0", stream2 = ":1";
    add_common(c_fig, false);
    c_fig->add_option("--j1", j1, "first return index, branch 1");
    c_fig->add_option("--j2", j2, "first return index, branch 2");
    c_fig->add_option("--n", fn, "truncation depth");
    c_fig->add_option("--d", fd, "alphabet size");
    c_fig->add_option("--stream1", stream1, "branch 1 label stream head:cycle");
    c_fig->add_option("--stream2", stream2, "branch 2 label stream head:cycle");
    c_fig->add_option("--ret1", ret1, "branch 1 return edge label");
    c_fig->add_option("--ret2", ret2, "branch 2 return edge label");
    c_fig->add_option("--h1", h1, "target entropy h1");
    c_fig->add_option("--h2", h2, "target entropy h2");
    c_fig->add_option("--margin", margin, "inequality margin eps'");

    CLI11_PARSE(app, argc, argv);

    if (c_rot->parsed()) {
        ParsedSystem sys = parse_system(read_file(input));
        RotationPolytope P = rotation_set(sys.graph, sys.potential);
        write_output(out_path, polytope_csv(P));
        if (svg) {
            std::vector<std::pair<Vec, std::string>> markers;
            if (!mark_w.empty()) markers.emplace_back(parse_vec(mark_w), "w");
            std::string svg_path = out_path.empty() ? "rotation-set.svg" : out_path + ".svg";
            write_output(svg_path, polytope_svg(P, markers));
        }
        return 0;
    }
    if (c_loc->parsed()) {
        ParsedSystem sys = parse_system(read_file(input));
        std::ostringstream out;
        out << "w,H,v_norm,boundary_flag,residual\n";
        if (sweep) {
            if (sys.potential.dimension() != 1)
                throw std::invalid_argument("--sweep needs a 1-dimensional potential");
            auto profile = detail::entropy_profile(sys.graph, sys.potential, grid);
            RotationPolytope P = rotation_set(sys.graph, sys.potential);
            for (auto& [wv, h] : profile) {
                LocalizedEntropyResult le = localized_entropy(sys.graph, sys.potential, {wv}, P);
                out << csv_float(wv) << "," << csv_float(le.H) << "," << csv_float(norm(le.v_star))
                    << "," << (le.boundary ? 1 : 0) << "," << csv_float(le.gradient_residual)
                    << "\n";
            }
        } else {
            if (w_str.empty()) throw std::invalid_argument("--w is required without --sweep");
            Vec w = parse_vec(w_str);
            LocalizedEntropyResult le = localized_entropy(sys.graph, sys.potential, w);
            out << csv_float(w.size() == 1 ? w[0] : norm(w)) << "," << csv_float(le.H) << ","
                << csv_float(norm(le.v_star)) << "," << (le.boundary ? 1 : 0) << ","
                << csv_float(le.gradient_residual) << "\n";
        }
        write_output(out_path, out.str());
        return 0;
    }
    if (c_scan->parsed()) {
        ParsedSystem sys = parse_system(read_file(input));
        Vec w = parse_vec(w_str);
        DistancePotential dp = build_aux(sys, parse_aux(aux_str), w, window, max_period);
        SpectrumScan scan = spectrum_scan(dp.recode.graph, dp.recode.potential, w, grid);
        write_output(out_path, scan_csv(scan));
        return 0;
    }
    if (c_trace->parsed()) {
        ParsedSystem sys = parse_system(read_file(input));
        Vec w = parse_vec(w_str);
        DistancePotential dp = build_aux(sys, parse_aux(aux_str), w, window, max_period);
        ErgodicTrace tr = ergodic_spectrum_trace(dp.recode.graph, dp.recode.potential, w,
                                                 grid > 8 ? grid : 128);
        write_output(out_path, trace_csv(tr));
        return 0;
    }
    if (c_gal->parsed()) {
        std::vector<VerdictRow> rows;
        if (example_id == "singleton") {
            rows = boundary_example_singleton(gal_d, parse_word(gal_orbit)).verdicts;
        } else if (example_id == "full-interval") {
            TransitionGraph Y = gal_y == "golden" ? golden_mean_shift() : full_shift(2);
            if (gal_y == "full2" && gal_d < 3)
                throw std::invalid_argument("full2 sub-shift needs ambient d >= 3");
            rows = boundary_example_full_interval(gal_d, Y, 1, grid).verdicts;
        } else if (example_id == "perturb") {
            // worked system: full 2-shift with Phi = (x0, x0*x1), mu0 on the
            // lower edge of the rotation triangle
            TransitionGraph g2 = full_shift(2);
            auto raw = [&](const std::vector<int>& word) {
                double a = g2.edge(word[0]).label, b = g2.edge(word[1]).label;
                return std::vector<double>{a, a * b};
            };
            HigherBlockRecode rc = higher_block_recode(g2, 2, raw, 2);
            MarkovMeasure mu0;
            mu0.kernel = {2.0 / 3, 1.0 / 3, 1.0, 0.0};
            mu0.stationary = {0.75, 0.25};
            PerturbOptions popt;
            popt.max_period = max_period;
            PerturbationReport rep = perturb_to_interior(rc.graph, rc.potential, mu0, gal_eps, popt);
            rows.push_back(make_verdict("perturb", "before classification is boundary",
                                        rep.class_before == PointClass::boundary ? 1 : 0, 1, 0));
            rows.push_back(make_verdict("perturb", "after classification is interior",
                                        rep.class_after == PointClass::interior ? 1 : 0, 1, 0));
            rows.push_back(make_verdict("perturb", "sup-norm change below budget",
                                        rep.sup_norm_change < gal_eps ? 1 : 0, 1, 0));
        } else if (example_id == "extend") {
            TransitionGraph g2 = full_shift(2);
            CylinderPotential phi = label_potential(g2);
            PressureReport mme = pressure(g2, phi, {0.0});
            auto phi_next = [&](const std::vector<int>& word) {
                double a = g2.edge(word[0]).label, b = g2.edge(word[1]).label;
                return std::vector<double>{a * b};
            };
            ExtensionReport rep = extend_coordinates(g2, phi, {0.5}, mme.equilibrium, phi_next, 2);
            rows = rep.verdicts;
        } else {
            throw std::invalid_argument("unknown gallery example '" + example_id + "'");
        }
        write_output(out_path, verdicts_csv(rows));
        return 0;
    }
    if (c_fig->parsed()) {
        BranchLoopSpec spec;
        spec.alphabet = fd;
        spec.stream1 = parse_stream(stream1);
        spec.stream2 = parse_stream(stream2);
        spec.j1_star = j1;
        spec.j2_star = j2;
        spec.return_label1 = ret1;
        spec.return_label2 = ret2;
        spec.depth_n = fn;
        BranchLoopSystem sys = build_figure1_system(spec);
        std::ostringstream out;
        out << "n,loops,entropy\n";
        for (size_t i = 0; i < sys.truncations.size(); ++i)
            out << sys.truncations[i] << "," << sys.loop_counts[i] << ","
                << csv_float(sys.entropies[i]) << "\n";
        VerdictRow ineq = figure1_inequality(sys, h1, h2, margin);
        out << "# inequality sup_n h < min(h1,h2) - margin: " << (ineq.pass ? "pass" : "fail")
            << " (sup=" << csv_float(ineq.measured) << ", bound=" << csv_float(ineq.expected)
            << ")\n";
        write_output(out_path, out.str());
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: validation: " << ex.what() << "\n";
        return 1;
    } catch (const std::runtime_error& ex) {
        std::cerr << "error: numerical: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: internal: " << ex.what() << "\n";
        return 2;
    }
}
