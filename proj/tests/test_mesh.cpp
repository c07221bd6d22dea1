#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "logmink/errors.hpp"
#include "logmink/mesh.hpp"

using namespace logmink;

namespace {

std::size_t boundary_segments_on(const TriangleMesh& mesh) { return mesh.boundary.size(); }

}  // namespace

TEST_CASE("square refinement doubles boundary segments per halving") {
    SymmetricPolygon S = testutil::square();
    const std::pair<double, std::size_t> cases[] = {{1.0, 8}, {0.5, 16}, {0.25, 32}};
    for (auto [h, want] : cases) {
        TriangleMesh mesh = triangulate(S, h);
        CHECK_NOTHROW(validate(mesh, S));
        CHECK(boundary_segments_on(mesh) == want);
        CHECK(mesh.max_edge <= h + 1e-12);
    }
}

TEST_CASE("64-gon boundary segment counts at two resolutions") {
    SymmetricPolygon P = testutil::regular_gon(32);  // 64 edges
    TriangleMesh coarse = triangulate(P, 0.05);
    CHECK_NOTHROW(validate(coarse, P));
    CHECK(boundary_segments_on(coarse) == 128);
    TriangleMesh fine = triangulate(P, 0.025);
    CHECK_NOTHROW(validate(fine, P));
    CHECK(boundary_segments_on(fine) == 256);
}

TEST_CASE("mesh area matches polygon area exactly up to roundoff") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        SymmetricPolygon P = testutil::random_body(rng);
        TriangleMesh mesh = triangulate(P, 0.2 * P.diameter());
        CHECK_NOTHROW(validate(mesh, P));
        double area = 0.0;
        for (const auto& tri : mesh.triangles) {
            const Vec2 a = mesh.points[tri[0]], b = mesh.points[tri[1]], c = mesh.points[tri[2]];
            area += 0.5 * cross(b - a, c - a);
        }
        CHECK(area == doctest::Approx(P.area()).epsilon(1e-12));
    }
}

TEST_CASE("boundary segments partition each facet") {
    SymmetricPolygon P = testutil::regular_gon(8);
    TriangleMesh mesh = triangulate(P, 0.11);
    std::vector<double> facet_len(P.pair_count(), 0.0);
    for (const BoundarySegment& s : mesh.boundary) {
        REQUIRE(s.pair >= 0);
        REQUIRE(std::size_t(s.pair) < P.pair_count());
        REQUIRE((s.side == 1 || s.side == -1));
        const Vec2 d = mesh.points[s.b] - mesh.points[s.a];
        facet_len[s.pair] += norm(d);
        // Both endpoints lie on the declared support line.
        const Vec2 n = double(s.side) * direction(P.pairs[s.pair].theta);
        CHECK(std::abs(dot(mesh.points[s.a], n) - P.support[s.pair]) <= 1e-12);
        CHECK(std::abs(dot(mesh.points[s.b], n) - P.support[s.pair]) <= 1e-12);
    }
    for (std::size_t i = 0; i < P.pair_count(); ++i)
        CHECK(facet_len[i] == doctest::Approx(2.0 * P.edge_length[i]).epsilon(1e-12));
}

TEST_CASE("triangulation is deterministic") {
    std::mt19937_64 rng(11);
    SymmetricPolygon P = testutil::random_body(rng);
    TriangleMesh a = triangulate(P, 0.07);
    TriangleMesh b = triangulate(P, 0.07);
    REQUIRE(a.points.size() == b.points.size());
    REQUIRE(a.triangles.size() == b.triangles.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }
    CHECK(a.triangles == b.triangles);
}

TEST_CASE("triangulate rejects nonsense budgets and bounds") {
    SymmetricPolygon S = testutil::square();
    CHECK_THROWS_AS(triangulate(S, 0.0), ValidationError);
    CHECK_THROWS_AS(triangulate(S, -1.0), ValidationError);
    CHECK_THROWS_AS(triangulate(S, 10.0), ValidationError);  // above the diameter
    CHECK_THROWS_AS(triangulate(S, 0.01, 50), ResourceError);
}

TEST_CASE("interior nodes are counted correctly") {
    SymmetricPolygon S = testutil::square();
    TriangleMesh mesh = triangulate(S, 0.5);
    std::size_t boundary_nodes = 0;
    for (char c : mesh.on_boundary) boundary_nodes += c != 0;
    CHECK(mesh.interior_count() + boundary_nodes == mesh.points.size());
    CHECK(boundary_nodes == 16);  // matches the 16 boundary segments
    CHECK(mesh.interior_count() >= 1);
}
