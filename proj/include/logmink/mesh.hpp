#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "logmink/geometry.hpp"

namespace logmink {

// A mesh edge lying on the polygon boundary, oriented like the boundary walk
// (a before b counterclockwise), tagged with the facet it belongs to.
struct BoundarySegment {
    int a = 0;
    int b = 0;
    int pair = 0;  // index into the polygon's pair list
    int side = 1;  // +1: outward normal u(theta), -1: outward normal -u(theta)
};

struct TriangleMesh {
    std::vector<Vec2> points;
    std::vector<std::array<int, 3>> triangles;  // counterclockwise
    std::vector<BoundarySegment> boundary;
    std::vector<char> on_boundary;  // per point
    int pair_count = 0;
    double target_h = 0.0;  // requested edge bound
    double max_edge = 0.0;  // achieved longest edge

    std::size_t interior_count() const;
};

// Fan triangulation from the origin refined by rounds of longest-edge
// bisection until every edge is at most h_max.  Each round marks the longest
// edge of every triangle that still violates the bound, closes the marking
// so no hanging nodes arise (whenever any edge of a triangle is marked, its
// longest edge is too), and splits by the number of marked edges (1: bisect,
// 2: bisect twice, 3: regular four-way).  Midpoints are placed exactly at
// edge midpoints, so boundary midpoints stay on their facet line.
//
// Throws ResourceError when the refinement would exceed node_budget points.
TriangleMesh triangulate(const SymmetricPolygon& P, double h_max,
                         std::size_t node_budget = 2000000);

// Structural checks used by tests: positive triangle areas, area sum equal
// to the polygon area, every edge shared by at most two triangles, boundary
// segments exactly the once-used edges, per-facet boundary length equal to
// the polygon edge length, and max_edge <= target_h.
void validate(const TriangleMesh& mesh, const SymmetricPolygon& P);

}  // namespace logmink
