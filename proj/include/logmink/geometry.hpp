#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace logmink {

inline constexpr double kPi = 3.14159265358979323846;

// Directions whose angles differ by less than this are the same direction.
inline constexpr double kAngleTol = 1e-12;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Unit vector at angle theta.
inline Vec2 direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

// An antipodal pair {u, -u} identified by the angle of u, kept in [0, pi).
struct DirectionPair {
    double theta = 0.0;
};

// Reduce an arbitrary angle to the canonical pair representative in [0, pi).
double canonical_pair_angle(double theta);

// Origin-symmetric convex polygon.  `pairs` is sorted by angle with
// duplicates (within kAngleTol) merged; every listed pair keeps an entry in
// `support` and `edge_length` even when its facet is absent from the
// boundary (edge_length 0, support = max of <v, u> over vertices).
//
// `vertices` walks the full boundary counterclockwise; central symmetry is
// exact by construction: vertices[k + m] == -vertices[k] for m = half the
// vertex count.  Edge k runs vertices[k] -> vertices[k+1 mod 2m] and lies on
// the facet of pair edge_pair[k], outward side edge_side[k] (+1 for normal
// u(theta), -1 for -u(theta)).
struct SymmetricPolygon {
    std::vector<DirectionPair> pairs;
    std::vector<double> support;
    std::vector<double> edge_length;
    std::vector<Vec2> vertices;
    std::vector<int> edge_pair;
    std::vector<int> edge_side;

    std::size_t pair_count() const { return pairs.size(); }
    double area() const;
    double perimeter() const;
    double diameter() const;
};

// Intersection of the slabs |<x, u(theta_i)>| <= q_i.  Requires at least two
// distinct pairs and strictly positive q.  Facets whose edge degenerates to
// a point (length below kAngleTol relative to the body scale) are reported
// as absent, not as zero-length boundary pieces.
SymmetricPolygon wulff_shape(std::span<const DirectionPair> pairs, std::span<const double> q);

// h_P(u(theta)) = max over vertices of <v, u(theta)>.
double support_value(const SymmetricPolygon& P, double theta);

// Per-pair surface area measure: S_i = total boundary length with outer
// normal +-u(theta_i), i.e. both edges of the pair combined.
std::vector<double> surface_area_measure(const SymmetricPolygon& P);

// Per-pair cone volume measure V_i = h_i S_i / 2; the entries sum to the
// area.
std::vector<double> cone_volume_measure(const SymmetricPolygon& P);

// Scale about the origin by c > 0; supports and vertices scale exactly.
SymmetricPolygon dilate(const SymmetricPolygon& P, double c);

// Symmetric Hausdorff distance.  Exact for polygons: the maximum over both
// vertex sets of the distance to the other body, where point-to-polygon
// distance uses the boundary segments.
double hausdorff_distance(const SymmetricPolygon& P, const SymmetricPolygon& Q);

// Whether Q subset of P, up to slack: every vertex of Q satisfies every facet
// inequality of P within `tol`.
bool contains(const SymmetricPolygon& P, const SymmetricPolygon& Q, double tol = 1e-12);

// Throws ValidationError when structural invariants fail: positive supports,
// exact central symmetry, counterclockwise convex vertex order, support
// reconstruction, and the cone volume identity sum V_i = area.
void validate(const SymmetricPolygon& P);

}  // namespace logmink
