#include "untangle/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace untangle {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const CircularDrawing& d, const SvgOptions& opt) {
    const Graph& g = d.graph();
    const int n = d.size();
    const double c = opt.size / 2.0;
    const double r = opt.size * 0.4;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * i / n;
        const VertexId v = d.order()[i];
        x[v] = c + r * std::sin(t);
        y[v] = c - r * std::cos(t);
    }
    std::vector<bool> crossed(g.edge_count(), false);
    if (opt.highlight_crossings) {
        const auto& edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (chords_cross(edges[i], edges[j], d.positions())) crossed[i] = crossed[j] = true;
            }
        }
    }
    std::vector<bool> moved(n, false);
    for (VertexId v : opt.moved) {
        if (v >= 0 && v < n) moved[v] = true;
    }

    std::string out;
    const std::string s = std::to_string(opt.size);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s +
           " " + s + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<circle cx=\"" + fmt(c) + "\" cy=\"" + fmt(c) + "\" r=\"" + fmt(r) +
           "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    out += "<g stroke-width=\"2\">\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        out += "<line class=\"" + std::string(crossed[i] ? "edge crossing" : "edge") + "\" x1=\"" + fmt(x[e.a]) +
               "\" y1=\"" + fmt(y[e.a]) + "\" x2=\"" + fmt(x[e.b]) + "\" y2=\"" + fmt(y[e.b]) + "\" stroke=\"" +
               (crossed[i] ? "#d62728" : "#333333") + "\"/>\n";
    }
    out += "</g>\n";
    for (VertexId v = 0; v < n; ++v) {
        out += "<circle class=\"" + std::string(moved[v] ? "vertex moved" : "vertex") + "\" cx=\"" + fmt(x[v]) +
               "\" cy=\"" + fmt(y[v]) + "\" r=\"6\" " +
               (moved[v] ? "fill=\"white\" stroke=\"#ff7f0e\" stroke-width=\"3\"" : "fill=\"#1f77b4\"") + "/>\n";
    }
    if (opt.labels) {
        for (VertexId v = 0; v < n; ++v) {
            const double lx = c + (x[v] - c) * 1.15, ly = c + (y[v] - c) * 1.15;
            out += "<text x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
                   escape(g.name(v)) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace untangle
