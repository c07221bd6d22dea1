#include "logmink/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "logmink/errors.hpp"
#include "logmink/io.hpp"

namespace logmink {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

double body_radius(const SymmetricPolygon& P) {
    double r = 0.0;
    for (const Vec2& v : P.vertices) r = std::max({r, std::abs(v.x), std::abs(v.y)});
    return r;
}

// Document header with a centered viewBox; contents drawn in math
// orientation (y up) via the flip group.
std::string open_svg(double half_extent) {
    const double r = half_extent;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    s += num(-r) + " " + num(-r) + " " + num(2 * r) + " " + num(2 * r) + "\">\n";
    s += "<g transform=\"scale(1,-1)\">\n";
    return s;
}

const char* close_svg() { return "</g>\n</svg>\n"; }

std::string outline(const SymmetricPolygon& P, const char* stroke, double width,
                    double opacity = 1.0) {
    std::string d = "M " + num(P.vertices[0].x) + " " + num(P.vertices[0].y);
    for (std::size_t i = 1; i < P.vertices.size(); ++i)
        d += " L " + num(P.vertices[i].x) + " " + num(P.vertices[i].y);
    d += " Z";
    std::string s = "<path d=\"" + d + "\" fill=\"none\" stroke=\"";
    s += stroke;
    s += "\" stroke-width=\"" + num(width) + "\"";
    if (opacity != 1.0) s += " stroke-opacity=\"" + num(opacity) + "\"";
    s += "/>\n";
    return s;
}

std::string bar(Vec2 base, Vec2 dir, double len, const char* stroke, double width) {
    const Vec2 tip = base + len * dir;
    std::string s = "<line x1=\"" + num(base.x) + "\" y1=\"" + num(base.y) + "\" x2=\"" +
                    num(tip.x) + "\" y2=\"" + num(tip.y) + "\" stroke=\"";
    s += stroke;
    s += "\" stroke-width=\"" + num(width) + "\"/>\n";
    return s;
}

}  // namespace

std::string polygon_svg(const SymmetricPolygon& P) {
    const double r = body_radius(P);
    std::string s = open_svg(1.1 * r);
    s += outline(P, "#1f3b63", 0.012 * r);
    s += close_svg();
    return s;
}

std::string solve_svg(const SolveResult& result) {
    const SymmetricPolygon& P = result.body;
    const double r = body_radius(P);
    const double bar_len = 0.22 * r;
    const double gap = 0.02 * r;

    double max_mass = 0.0;
    for (std::size_t i = 0; i < P.pairs.size(); ++i)
        max_mass = std::max({max_mass, result.nu_mass[i], result.variational[i]});
    if (max_mass <= 0.0) max_mass = 1.0;

    std::string s = open_svg(1.45 * r);
    s += outline(P, "#1f3b63", 0.012 * r);
    for (std::size_t i = 0; i < P.pairs.size(); ++i) {
        const Vec2 u = direction(P.pairs[i].theta);
        const Vec2 tangent{-u.y, u.x};
        const double nu_len = bar_len * result.nu_mass[i] / max_mass;
        const double v_len = bar_len * result.variational[i] / max_mass;
        for (double side : {1.0, -1.0}) {
            // Root the glyphs just outside the supporting line of the facet.
            const Vec2 root = (side * (P.support[i] + 2.0 * gap)) * u;
            s += bar(root + gap * tangent, side * u, nu_len, "#31708f", 1.6 * gap);
            s += bar(root - gap * tangent, side * u, v_len, "#d9822b", 1.6 * gap);
        }
    }
    s += close_svg();
    return s;
}

std::string flow_svg(const std::vector<FlowFrame>& frames) {
    if (frames.empty()) throw ValidationError("flow_svg: no frames");
    double r = 0.0;
    for (const FlowFrame& f : frames) r = std::max(r, body_radius(f.body));

    std::string s = open_svg(1.25 * r);
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const double fade = frames.size() > 1 ? double(i) / double(frames.size() - 1) : 0.0;
        s += outline(frames[i].body, "#1f3b63", 0.010 * r, 1.0 - 0.6 * fade);
    }
    s += "</g>\n";  // labels upright, outside the flip group
    for (const FlowFrame& f : frames) {
        // Anchor each label at the frame's first vertex, pushed slightly out.
        const Vec2 v = 1.04 * f.body.vertices[0];
        s += "<text x=\"" + num(v.x) + "\" y=\"" + num(-v.y) + "\" font-size=\"" +
             num(0.05 * r) + "\" font-family=\"sans-serif\" fill=\"#444444\">t=" + num(f.t) +
             "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

void emit_svg(const SymmetricPolygon& P, const std::string& path) {
    write_text_file(path, polygon_svg(P));
}

void emit_svg(const SolveResult& result, const std::string& path) {
    write_text_file(path, solve_svg(result));
}

void emit_svg(const std::vector<FlowFrame>& frames, const std::string& path) {
    write_text_file(path, flow_svg(frames));
}

}  // namespace logmink
