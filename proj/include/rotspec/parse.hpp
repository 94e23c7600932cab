// parse.hpp — the system-definition document format.
//
//   [meta]
//   name=golden-mean
//   alphabet=2
//   [vertices]
//   a
//   b
//   [edges]
//   a -> a label=0 phi=0
//   a -> b label=1 phi=1
//   b -> a label=0 phi=0
//
// Sections may appear in any order; blank lines and lines starting with '#'
// are ignored. `label` and `phi` are optional but must be used consistently
// across edges. Emission is canonical, so emit(parse(doc)) round-trips
// byte-identically.

#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotspec/graph.hpp"
#include "rotspec/potential.hpp"

namespace rotspec {

struct ParsedSystem {
    TransitionGraph graph;
    CylinderPotential potential;
    std::string name;
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::string format17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

inline ParsedSystem parse_system(const std::string& document) {
    std::istringstream in(document);
    std::string line, section;
    std::vector<std::string> names;
    std::map<std::string, int> vertex_id;
    struct RawEdge {
        std::string src, dst;
        int label = -1;
        std::vector<double> phi;
        int line_no;
    };
    std::vector<RawEdge> raw;
    std::string name;
    int alphabet = 0;
    int line_no = 0;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("parse error (line " + std::to_string(line_no) + "): " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string s = detail::trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[' && s.back() == ']') {
            section = s.substr(1, s.size() - 2);
            if (section != "meta" && section != "vertices" && section != "edges")
                fail("unknown section [" + section + "]");
            continue;
        }
        if (section == "meta") {
            size_t eq = s.find('=');
            if (eq == std::string::npos) fail("expected key=value in [meta]");
            std::string key = detail::trim(s.substr(0, eq));
            std::string val = detail::trim(s.substr(eq + 1));
            if (key == "name")
                name = val;
            else if (key == "alphabet")
                alphabet = std::stoi(val);
            else
                fail("unknown meta key '" + key + "'");
        } else if (section == "vertices") {
            if (vertex_id.count(s)) fail("duplicate vertex '" + s + "'");
            vertex_id[s] = static_cast<int>(names.size());
            names.push_back(s);
        } else if (section == "edges") {
            std::istringstream es(s);
            RawEdge e;
            e.line_no = line_no;
            std::string arrow;
            if (!(es >> e.src >> arrow >> e.dst) || arrow != "->")
                fail("expected 'src -> dst [label=..] [phi=..]'");
            std::string tok;
            while (es >> tok) {
                size_t eq = tok.find('=');
                if (eq == std::string::npos) fail("expected key=value edge attribute");
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "label") {
                    try {
                        e.label = std::stoi(val);
                    } catch (...) {
                        fail("bad label '" + val + "'");
                    }
                } else if (key == "phi") {
                    std::istringstream vs(val);
                    std::string num;
                    while (std::getline(vs, num, ',')) {
                        try {
                            e.phi.push_back(std::stod(num));
                        } catch (...) {
                            fail("bad phi value '" + num + "'");
                        }
                    }
                } else {
                    fail("unknown edge attribute '" + key + "'");
                }
            }
            raw.push_back(std::move(e));
        } else {
            fail("content outside any section");
        }
    }

    if (names.empty()) throw std::invalid_argument("parse error: no vertices");
    std::vector<Edge> edges;
    std::vector<std::vector<double>> vals;
    int m = -1;
    for (const RawEdge& e : raw) {
        line_no = e.line_no;
        auto si = vertex_id.find(e.src);
        auto ti = vertex_id.find(e.dst);
        if (si == vertex_id.end()) fail("dangling vertex '" + e.src + "'");
        if (ti == vertex_id.end()) fail("dangling vertex '" + e.dst + "'");
        if (m < 0)
            m = static_cast<int>(e.phi.size());
        else if (m != static_cast<int>(e.phi.size()))
            fail("potential vector length mismatch across edges");
        edges.push_back({si->second, ti->second, e.label});
        vals.push_back(e.phi);
    }
    if (edges.empty()) throw std::invalid_argument("parse error: no edges");

    const int vertex_count = static_cast<int>(names.size());
    ParsedSystem sys{TransitionGraph(vertex_count, std::move(edges), alphabet, std::move(names)),
                     CylinderPotential(std::max(m, 0), std::move(vals)), name};
    return sys;
}

inline std::string emit_system(const TransitionGraph& g, const CylinderPotential& phi,
                               const std::string& name) {
    phi.check_graph(g);
    std::ostringstream out;
    out << "[meta]\n";
    if (!name.empty()) out << "name=" << name << "\n";
    if (g.alphabet() > 0) out << "alphabet=" << g.alphabet() << "\n";
    out << "[vertices]\n";
    std::vector<std::string> names = g.vertex_names();
    if (names.empty())
        for (int v = 0; v < g.vertex_count(); ++v) names.push_back("v" + std::to_string(v));
    for (const auto& n : names) out << n << "\n";
    out << "[edges]\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        out << names[ed.source] << " -> " << names[ed.target];
        if (ed.label >= 0) out << " label=" << ed.label;
        if (phi.dimension() > 0) {
            out << " phi=";
            const auto& v = phi.value(e);
            for (int k = 0; k < phi.dimension(); ++k) {
                if (k) out << ",";
                out << detail::format17(v[k]);
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace rotspec
