#include "logmink/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "logmink/errors.hpp"

namespace logmink {

namespace {

using Edge = std::pair<int, int>;

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::size_t TriangleMesh::interior_count() const {
    std::size_t n = 0;
    for (char f : on_boundary)
        if (!f) ++n;
    return n;
}

TriangleMesh triangulate(const SymmetricPolygon& P, double h_max, std::size_t node_budget) {
    if (!std::isfinite(h_max) || !(h_max > 0.0))
        throw ValidationError("triangulate: h_max must be positive");
    if (h_max > P.diameter())
        throw ValidationError("triangulate: h_max exceeds the polygon diameter");

    TriangleMesh mesh;
    mesh.pair_count = int(P.pair_count());
    mesh.target_h = h_max;

    // Fan from the origin; the polygon walk is counterclockwise, so every
    // fan triangle is too.
    const int nv = int(P.vertices.size());
    mesh.points.push_back({0.0, 0.0});
    for (const Vec2& v : P.vertices) mesh.points.push_back(v);
    for (int j = 0; j < nv; ++j) {
        mesh.triangles.push_back({0, 1 + j, 1 + (j + 1) % nv});
        mesh.boundary.push_back({1 + j, 1 + (j + 1) % nv, P.edge_pair[j], P.edge_side[j]});
    }

    auto& pts = mesh.points;
    auto len2 = [&pts](Edge e) {
        const Vec2 d = pts[e.second] - pts[e.first];
        return dot(d, d);
    };
    // Deterministic longest edge: largest squared length, ties broken by the
    // lexicographically larger endpoint pair.
    auto longest_edge = [&](const std::array<int, 3>& t) {
        Edge best = make_edge(t[0], t[1]);
        double best_l = len2(best);
        for (int i = 1; i < 3; ++i) {
            const Edge e = make_edge(t[i], t[(i + 1) % 3]);
            const double l = len2(e);
            if (l > best_l || (l == best_l && e > best)) {
                best = e;
                best_l = l;
            }
        }
        return best;
    };

    const double h2 = h_max * h_max;
    while (true) {
        auto& tris = mesh.triangles;

        // Mark the longest edge of every violating triangle.
        std::set<Edge> marked;
        std::deque<int> work;
        for (int ti = 0; ti < int(tris.size()); ++ti) {
            const Edge le = longest_edge(tris[ti]);
            if (len2(le) > h2) marked.insert(le);
        }
        if (marked.empty()) break;

        // Close the marking so triangles split conformingly: whenever any
        // edge of a triangle is marked, its longest edge must be marked too.
        std::map<Edge, std::vector<int>> incident;
        for (int ti = 0; ti < int(tris.size()); ++ti)
            for (int i = 0; i < 3; ++i)
                incident[make_edge(tris[ti][i], tris[ti][(i + 1) % 3])].push_back(ti);
        for (int ti = 0; ti < int(tris.size()); ++ti) work.push_back(ti);
        while (!work.empty()) {
            const int ti = work.front();
            work.pop_front();
            const auto& t = tris[ti];
            bool any = false;
            for (int i = 0; i < 3 && !any; ++i)
                any = marked.count(make_edge(t[i], t[(i + 1) % 3])) > 0;
            if (!any) continue;
            const Edge le = longest_edge(t);
            if (marked.insert(le).second)
                for (int tj : incident[le]) work.push_back(tj);
        }

        if (pts.size() + marked.size() > node_budget)
            throw ResourceError("triangulate: node budget of " + std::to_string(node_budget) +
                                " points exceeded at h_max " + std::to_string(h_max));

        // One new point per marked edge, ids assigned in sorted edge order.
        std::map<Edge, int> midpoint;
        for (const Edge& e : marked) {
            midpoint[e] = int(pts.size());
            pts.push_back(0.5 * (pts[e.first] + pts[e.second]));
        }

        // Split triangles.  bisect(x, y, z) cuts edge (x, y) at its midpoint.
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() * 2);
        auto emit = [&next](int a, int b, int c) { next.push_back({a, b, c}); };
        for (const auto& t : tris) {
            std::array<bool, 3> is_marked{};
            int count = 0;
            for (int i = 0; i < 3; ++i) {
                is_marked[i] = marked.count(make_edge(t[i], t[(i + 1) % 3])) > 0;
                count += is_marked[i];
            }
            if (count == 0) {
                next.push_back(t);
                continue;
            }
            if (count == 3) {
                const int m01 = midpoint[make_edge(t[0], t[1])];
                const int m12 = midpoint[make_edge(t[1], t[2])];
                const int m20 = midpoint[make_edge(t[2], t[0])];
                emit(t[0], m01, m20);
                emit(t[1], m12, m01);
                emit(t[2], m20, m12);
                emit(m01, m12, m20);
                continue;
            }
            // The closure guarantees the longest edge is marked; rotate it
            // into position (a, b).
            const Edge le = longest_edge(t);
            int ia = 0;
            while (make_edge(t[ia], t[(ia + 1) % 3]) != le) ++ia;
            const int a = t[ia], b = t[(ia + 1) % 3], c = t[(ia + 2) % 3];
            const int m = midpoint[le];
            if (count == 1) {
                emit(a, m, c);
                emit(m, b, c);
                continue;
            }
            if (midpoint.count(make_edge(b, c))) {
                const int m2 = midpoint[make_edge(b, c)];
                emit(a, m, c);
                emit(b, m2, m);
                emit(m2, c, m);
            } else {
                const int m2 = midpoint[make_edge(c, a)];
                emit(m, b, c);
                emit(c, m2, m);
                emit(m2, a, m);
            }
        }
        tris.swap(next);

        // Boundary segments split with their edges and keep their facet tag.
        std::vector<BoundarySegment> nb;
        nb.reserve(mesh.boundary.size() * 2);
        for (const BoundarySegment& s : mesh.boundary) {
            const auto it = midpoint.find(make_edge(s.a, s.b));
            if (it == midpoint.end()) {
                nb.push_back(s);
            } else {
                nb.push_back({s.a, it->second, s.pair, s.side});
                nb.push_back({it->second, s.b, s.pair, s.side});
            }
        }
        mesh.boundary.swap(nb);
    }

    mesh.on_boundary.assign(mesh.points.size(), 0);
    for (const BoundarySegment& s : mesh.boundary) {
        mesh.on_boundary[s.a] = 1;
        mesh.on_boundary[s.b] = 1;
    }
    for (const auto& t : mesh.triangles)
        for (int i = 0; i < 3; ++i)
            mesh.max_edge = std::max(mesh.max_edge, std::sqrt(len2(make_edge(t[i], t[(i + 1) % 3]))));
    return mesh;
}

void validate(const TriangleMesh& mesh, const SymmetricPolygon& P) {
    const int np = int(mesh.points.size());
    if (np == 0 || mesh.triangles.empty()) throw ValidationError("mesh: empty");
    if (int(mesh.on_boundary.size()) != np) throw ValidationError("mesh: flag size mismatch");

    double scale = 1.0;
    for (const Vec2& p : mesh.points) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});

    double area_sum = 0.0;
    std::map<Edge, int> edge_count;
    for (const auto& t : mesh.triangles) {
        for (int v : t)
            if (v < 0 || v >= np) throw ValidationError("mesh: vertex id out of range");
        const double a2 = cross(mesh.points[t[1]] - mesh.points[t[0]],
                                mesh.points[t[2]] - mesh.points[t[0]]);
        if (!(a2 > 0.0)) throw ValidationError("mesh: triangle not positive ccw");
        area_sum += 0.5 * a2;
        for (int i = 0; i < 3; ++i) ++edge_count[make_edge(t[i], t[(i + 1) % 3])];
    }
    if (std::abs(area_sum - P.area()) > 1e-10 * P.area())
        throw ValidationError("mesh: triangle areas do not sum to the polygon area");

    std::set<Edge> boundary_edges;
    for (const BoundarySegment& s : mesh.boundary) boundary_edges.insert(make_edge(s.a, s.b));
    for (const auto& [e, c] : edge_count) {
        if (c > 2) throw ValidationError("mesh: edge shared by more than two triangles");
        if ((c == 1) != (boundary_edges.count(e) > 0))
            throw ValidationError("mesh: boundary segments disagree with edge incidence");
    }

    // Each boundary segment sits on its facet line; per-side facet lengths
    // add up to the polygon's edge length.
    std::vector<double> facet_len(2 * P.pair_count(), 0.0);
    for (const BoundarySegment& s : mesh.boundary) {
        const Vec2 n = double(s.side) * direction(P.pairs[s.pair].theta);
        for (int v : {s.a, s.b}) {
            if (!mesh.on_boundary[v]) throw ValidationError("mesh: boundary point not flagged");
            if (std::abs(dot(mesh.points[v], n) - P.support[s.pair]) > 1e-10 * scale)
                throw ValidationError("mesh: boundary point off its facet line");
        }
        facet_len[2 * s.pair + (s.side > 0 ? 0 : 1)] += norm(mesh.points[s.b] - mesh.points[s.a]);
    }
    for (std::size_t i = 0; i < P.pair_count(); ++i)
        for (int side = 0; side < 2; ++side)
            if (std::abs(facet_len[2 * i + side] - P.edge_length[i]) > 1e-10 * scale)
                throw ValidationError("mesh: facet boundary length mismatch");

    // A triangle touching the boundary keeps its opposite vertex interior.
    for (const auto& t : mesh.triangles)
        for (int i = 0; i < 3; ++i)
            if (boundary_edges.count(make_edge(t[i], t[(i + 1) % 3])) &&
                mesh.on_boundary[t[(i + 2) % 3]])
                throw ValidationError("mesh: boundary triangle has no interior vertex");

    if (mesh.max_edge > mesh.target_h)
        throw ValidationError("mesh: an edge exceeds the requested bound");
}

}  // namespace logmink
