// report.hpp — CSV and SVG emission. Floating-point fields use 17 significant
// digits, '.' decimal separator, LF line endings; output is deterministic.

#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "rotspec/gallery.hpp"
#include "rotspec/parse.hpp"
#include "rotspec/rotation.hpp"
#include "rotspec/spectrum.hpp"

namespace rotspec {

inline std::string csv_float(double x) { return detail::format17(x); }

inline std::string scan_csv(const SpectrumScan& scan) {
    std::ostringstream out;
    out << "x,H,v_norm,boundary_flag,residual\n";
    for (size_t j = 0; j < scan.grid.size(); ++j) {
        out << csv_float(scan.grid[j]) << "," << csv_float(scan.H[j]) << ","
            << csv_float(scan.v_norm[j]) << "," << (scan.boundary_flag[j] ? 1 : 0) << ","
            << csv_float(scan.residual[j]) << "\n";
    }
    return out.str();
}

inline std::string trace_csv(const ErgodicTrace& tr) {
    std::ostringstream out;
    out << "s,entropy,rv_residual,v_norm\n";
    for (const TracePoint& p : tr.points)
        out << csv_float(p.s) << "," << csv_float(p.entropy) << "," << csv_float(p.rv_residual)
            << "," << csv_float(p.v_norm) << "\n";
    return out.str();
}

inline std::string verdicts_csv(const std::vector<VerdictRow>& rows) {
    std::ostringstream out;
    out << "example_id,claim,measured,expected,tolerance,pass\n";
    for (const VerdictRow& r : rows)
        out << r.example_id << "," << r.claim << "," << csv_float(r.measured) << ","
            << csv_float(r.expected) << "," << csv_float(r.tolerance) << ","
            << (r.pass ? "true" : "false") << "\n";
    return out.str();
}

inline std::string polytope_csv(const RotationPolytope& P) {
    std::ostringstream out;
    out << "kind";
    for (int k = 0; k < P.dimension; ++k) out << ",c" << k;
    out << ",offset\n";
    for (const Vec& v : P.vertices) {
        out << "vertex";
        for (double x : v) out << "," << csv_float(x);
        out << ",\n";
    }
    for (const Halfspace& h : P.halfspaces) {
        out << "halfspace";
        for (double x : h.direction) out << "," << csv_float(x);
        out << "," << csv_float(h.offset) << "\n";
    }
    return out.str();
}

// 2-dimensional rotation sets only: the hull polygon plus optional markers.
inline std::string polytope_svg(const RotationPolytope& P,
                                const std::vector<std::pair<Vec, std::string>>& markers = {}) {
    if (P.dimension != 2)
        throw std::invalid_argument("polytope_svg: SVG emission is only for 2-dimensional sets");
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const Vec& v : P.vertices) {
        xlo = std::min(xlo, v[0]);
        xhi = std::max(xhi, v[0]);
        ylo = std::min(ylo, v[1]);
        yhi = std::max(yhi, v[1]);
    }
    double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
    double pad = 0.1 * span;
    xlo -= pad; xhi += pad; ylo -= pad; yhi += pad;
    const double W = 480;
    auto px = [&](double x) { return (x - xlo) / (xhi - xlo) * W; };
    auto py = [&](double y) { return W - (y - ylo) / (yhi - ylo) * W; };

    // order hull vertices by angle around the centroid for the polygon path
    Vec c(2, 0.0);
    for (const Vec& v : P.vertices) {
        c[0] += v[0] / P.vertices.size();
        c[1] += v[1] / P.vertices.size();
    }
    std::vector<Vec> ordered = P.vertices;
    std::sort(ordered.begin(), ordered.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
    });

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W
        << "\" viewBox=\"0 0 " << W << " " << W << "\">\n";
    out << "<polygon points=\"";
    for (size_t i = 0; i < ordered.size(); ++i) {
        if (i) out << " ";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", px(ordered[i][0]), py(ordered[i][1]));
        out << buf;
    }
    out << "\" fill=\"#cfe2f3\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
    for (const Vec& v : P.vertices) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"#1f4e79\"/>\n",
                      px(v[0]), py(v[1]));
        out << buf;
    }
    for (const auto& [p, label] : markers) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"#c00000\"/>\n"
                      "<text x=\"%.3f\" y=\"%.3f\" font-size=\"12\">%s</text>\n",
                      px(p[0]), py(p[1]), px(p[0]) + 6, py(p[1]) - 6, label.c_str());
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace rotspec
