#include "logmink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "logmink/errors.hpp"

namespace logmink {

namespace {


// Solve n1.x = c1, n2.x = c2; caller guarantees cross(n1, n2) != 0.
Vec2 line_intersection(Vec2 n1, double c1, Vec2 n2, double c2) {
    const double det = cross(n1, n2);
    return {(c1 * n2.y - c2 * n1.y) / det, (n1.x * c2 - n2.x * c1) / det};
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

// Distance from p to the polygon (0 when inside).
double point_polygon_distance(Vec2 p, const SymmetricPolygon& P) {
    bool inside = true;
    for (std::size_t j = 0; j < P.vertices.size() && inside; ++j) {
        const int i = P.edge_pair[j];
        const Vec2 n = double(P.edge_side[j]) * direction(P.pairs[i].theta);
        if (dot(p, n) > P.support[i]) inside = false;
    }
    if (inside) return 0.0;
    double d = std::numeric_limits<double>::infinity();
    const std::size_t nv = P.vertices.size();
    for (std::size_t j = 0; j < nv; ++j)
        d = std::min(d, point_segment_distance(p, P.vertices[j], P.vertices[(j + 1) % nv]));
    return d;
}

}  // namespace

double canonical_pair_angle(double theta) {
    if (!std::isfinite(theta)) throw ValidationError("direction angle must be finite");
    double r = std::fmod(theta, kPi);
    if (r < 0.0) r += kPi;
    if (kPi - r <= kAngleTol) r = 0.0;
    return r;
}

double SymmetricPolygon::area() const {
    double s = 0.0;
    const std::size_t nv = vertices.size();
    for (std::size_t j = 0; j < nv; ++j) s += cross(vertices[j], vertices[(j + 1) % nv]);
    return 0.5 * s;
}

double SymmetricPolygon::perimeter() const {
    double s = 0.0;
    const std::size_t nv = vertices.size();
    for (std::size_t j = 0; j < nv; ++j) s += norm(vertices[(j + 1) % nv] - vertices[j]);
    return s;
}

double SymmetricPolygon::diameter() const {
    // For an origin-symmetric body the farthest pair is antipodal.
    double r = 0.0;
    for (const Vec2& v : vertices) r = std::max(r, norm(v));
    return 2.0 * r;
}

SymmetricPolygon wulff_shape(std::span<const DirectionPair> pairs, std::span<const double> q) {
    const std::size_t m = pairs.size();
    if (q.size() != m) throw ValidationError("wulff_shape: pairs and q differ in length");
    if (m < 2) throw ValidationError("wulff_shape: at least two direction pairs required");
    for (std::size_t i = 0; i < m; ++i) {
        if (!std::isfinite(pairs[i].theta) || pairs[i].theta < 0.0 || pairs[i].theta >= kPi)
            throw ValidationError("wulff_shape: pair angle outside [0, pi)");
        if (i > 0 && !(pairs[i].theta - pairs[i - 1].theta > kAngleTol))
            throw ValidationError("wulff_shape: pair angles must be strictly increasing");
        if (!std::isfinite(q[i]) || !(q[i] > 0.0))
            throw ValidationError("wulff_shape: support numbers must be positive and finite");
    }

    struct HalfPlane {
        Vec2 n;
        double c;
        int pair;
    };

    // 2m halfplanes n.x <= c already sorted by normal angle: the + sides
    // cover [0, pi), the - sides [pi, 2 pi).
    std::vector<HalfPlane> hps;
    hps.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) hps.push_back({direction(pairs[i].theta), q[i], int(i)});
    for (std::size_t i = 0; i < m; ++i) hps.push_back({-direction(pairs[i].theta), q[i], int(i)});

    // Deque pass over the sorted normals.  A middle halfplane is popped when
    // the vertex of its wedge lies strictly outside the incoming halfplane;
    // degenerate wedges (parallel or reflex normals) are kept conservatively
    // and left to the signed-length walk below.
    auto wedge_outside = [](const HalfPlane& a, const HalfPlane& b, const HalfPlane& h) {
        const double det = cross(a.n, b.n);
        if (!(det > kAngleTol)) return false;
        const Vec2 v = line_intersection(a.n, a.c, b.n, b.c);
        return dot(h.n, v) > h.c + kAngleTol * (std::abs(h.c) + norm(v) + 1.0);
    };
    std::deque<HalfPlane> dq;
    for (const HalfPlane& h : hps) {
        while (dq.size() >= 2 && wedge_outside(dq[dq.size() - 2], dq.back(), h)) dq.pop_back();
        while (dq.size() >= 2 && wedge_outside(dq[0], dq[1], h)) dq.pop_front();
        dq.push_back(h);
    }
    while (dq.size() > 2 && wedge_outside(dq[dq.size() - 2], dq.back(), dq.front())) dq.pop_back();
    while (dq.size() > 2 && wedge_outside(dq[0], dq[1], dq.back())) dq.pop_front();

    // A pair is a candidate when either side survived; by symmetry the two
    // sides agree up to roundoff, and merging keeps the body exactly even.
    std::vector<int> act;
    {
        std::vector<char> seen(m, 0);
        for (const HalfPlane& h : dq) seen[h.pair] = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (seen[i]) act.push_back(int(i));
    }

    // Walk the upper chain of candidate facets: w[j] is the corner where
    // facet act[j] meets the next facet (the - side of act[0] after the
    // last).  A facet whose signed edge length is not positive is redundant;
    // drop the worst one and rewalk until all edges are genuine.
    std::vector<Vec2> w;
    std::vector<double> len;
    double scale = 1.0;
    auto rebuild = [&]() {
        const int k = int(act.size());
        w.assign(k, Vec2{});
        len.assign(k, 0.0);
        for (int j = 0; j < k; ++j) {
            const Vec2 n1 = direction(pairs[act[j]].theta);
            const double c1 = q[act[j]];
            Vec2 n2;
            double c2;
            if (j + 1 < k) {
                n2 = direction(pairs[act[j + 1]].theta);
                c2 = q[act[j + 1]];
            } else {
                n2 = -direction(pairs[act[0]].theta);
                c2 = q[act[0]];
            }
            w[j] = line_intersection(n1, c1, n2, c2);
        }
        scale = 1.0;
        for (const Vec2& v : w) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
        for (int j = 0; j < k; ++j) {
            const double th = pairs[act[j]].theta;
            const Vec2 t{-std::sin(th), std::cos(th)};
            const Vec2 prev = j > 0 ? w[j - 1] : -w[k - 1];
            len[j] = dot(w[j] - prev, t);
        }
    };
    rebuild();
    while (act.size() > 2) {
        const auto it = std::min_element(len.begin(), len.end());
        if (*it > kAngleTol * scale) break;
        act.erase(act.begin() + (it - len.begin()));
        rebuild();
    }

    const int k = int(act.size());
    SymmetricPolygon P;
    P.pairs.assign(pairs.begin(), pairs.end());
    P.support.assign(q.begin(), q.end());
    P.edge_length.assign(m, 0.0);
    P.vertices.resize(2 * k);
    P.vertices[0] = -w[k - 1];
    for (int j = 1; j < k; ++j) P.vertices[j] = w[j - 1];
    for (int j = 0; j < k; ++j) P.vertices[k + j] = -P.vertices[j];
    P.edge_pair.resize(2 * k);
    P.edge_side.resize(2 * k);
    for (int j = 0; j < 2 * k; ++j) {
        P.edge_pair[j] = act[j % k];
        P.edge_side[j] = j < k ? 1 : -1;
    }
    for (int j = 0; j < k; ++j) P.edge_length[act[j]] = len[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (P.edge_length[i] > 0.0) continue;
        double s = 0.0;
        for (const Vec2& v : P.vertices) s = std::max(s, dot(v, direction(pairs[i].theta)));
        P.support[i] = s;
    }
    return P;
}

double support_value(const SymmetricPolygon& P, double theta) {
    const Vec2 u = direction(theta);
    double s = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : P.vertices) s = std::max(s, dot(v, u));
    return s;
}

std::vector<double> surface_area_measure(const SymmetricPolygon& P) {
    std::vector<double> S(P.pair_count(), 0.0);
    for (std::size_t i = 0; i < S.size(); ++i) S[i] = 2.0 * P.edge_length[i];
    return S;
}

std::vector<double> cone_volume_measure(const SymmetricPolygon& P) {
    std::vector<double> V(P.pair_count(), 0.0);
    for (std::size_t i = 0; i < V.size(); ++i) V[i] = P.support[i] * P.edge_length[i];
    return V;
}

SymmetricPolygon dilate(const SymmetricPolygon& P, double c) {
    if (!std::isfinite(c) || !(c > 0.0)) throw ValidationError("dilate: factor must be positive");
    SymmetricPolygon Q = P;
    for (double& s : Q.support) s *= c;
    for (double& l : Q.edge_length) l *= c;
    for (Vec2& v : Q.vertices) v = c * v;
    return Q;
}

double hausdorff_distance(const SymmetricPolygon& P, const SymmetricPolygon& Q) {
    double d = 0.0;
    for (const Vec2& v : P.vertices) d = std::max(d, point_polygon_distance(v, Q));
    for (const Vec2& v : Q.vertices) d = std::max(d, point_polygon_distance(v, P));
    return d;
}

bool contains(const SymmetricPolygon& P, const SymmetricPolygon& Q, double tol) {
    for (const Vec2& v : Q.vertices)
        for (std::size_t i = 0; i < P.pair_count(); ++i)
            if (std::abs(dot(v, direction(P.pairs[i].theta))) > P.support[i] + tol) return false;
    return true;
}

void validate(const SymmetricPolygon& P) {
    const std::size_t m = P.pair_count();
    if (m < 2) throw ValidationError("polygon: fewer than two direction pairs");
    if (P.support.size() != m || P.edge_length.size() != m)
        throw ValidationError("polygon: per-pair array sizes disagree");
    const std::size_t nv = P.vertices.size();
    if (nv < 4 || nv % 2 != 0 || P.edge_pair.size() != nv || P.edge_side.size() != nv)
        throw ValidationError("polygon: vertex/edge array sizes disagree");
    for (std::size_t i = 0; i < m; ++i) {
        if (!std::isfinite(P.pairs[i].theta) || P.pairs[i].theta < 0.0 || P.pairs[i].theta >= kPi)
            throw ValidationError("polygon: pair angle outside [0, pi)");
        if (i > 0 && !(P.pairs[i].theta - P.pairs[i - 1].theta > kAngleTol))
            throw ValidationError("polygon: pair angles must be strictly increasing");
        if (!std::isfinite(P.support[i]) || !(P.support[i] > 0.0))
            throw ValidationError("polygon: support numbers must be positive");
        if (!(P.edge_length[i] >= 0.0)) throw ValidationError("polygon: negative edge length");
    }

    double scale = 1.0;
    for (const Vec2& v : P.vertices) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
    const std::size_t half = nv / 2;
    for (std::size_t j = 0; j < half; ++j) {
        const Vec2 a = P.vertices[j], b = P.vertices[j + half];
        if (a.x != -b.x || a.y != -b.y) throw ValidationError("polygon: central symmetry broken");
    }

    // Counterclockwise convex order.
    for (std::size_t j = 0; j < nv; ++j) {
        const Vec2 e1 = P.vertices[(j + 1) % nv] - P.vertices[j];
        const Vec2 e2 = P.vertices[(j + 2) % nv] - P.vertices[(j + 1) % nv];
        if (cross(e1, e2) < -1e-12 * scale * scale) throw ValidationError("polygon: not convex ccw");
    }
    const double A = P.area();
    if (!(A > 0.0)) throw ValidationError("polygon: nonpositive area");

    // Every boundary edge lies on its declared facet at the declared support.
    for (std::size_t j = 0; j < nv; ++j) {
        const int i = P.edge_pair[j];
        if (i < 0 || std::size_t(i) >= m || std::abs(P.edge_side[j]) != 1)
            throw ValidationError("polygon: edge facet reference out of range");
        const Vec2 n = double(P.edge_side[j]) * direction(P.pairs[i].theta);
        const Vec2 a = P.vertices[j], b = P.vertices[(j + 1) % nv];
        if (std::abs(dot(a, n) - P.support[i]) > 1e-9 * scale ||
            std::abs(dot(b, n) - P.support[i]) > 1e-9 * scale)
            throw ValidationError("polygon: edge does not lie on its facet");
        if (std::abs(norm(b - a) - P.edge_length[i]) > 1e-9 * scale)
            throw ValidationError("polygon: stored edge length disagrees with vertices");
    }

    // Supports reconstruct from vertices, and the cone identity holds.
    for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(support_value(P, P.pairs[i].theta) - P.support[i]) > 1e-9 * scale)
            throw ValidationError("polygon: support number disagrees with vertices");
    }
    double cone = 0.0;
    for (double v : cone_volume_measure(P)) cone += v;
    if (std::abs(cone - A) > 1e-10 * A)
        throw ValidationError("polygon: cone volume identity violated");
}

}  // namespace logmink
