#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "logmink/errors.hpp"
#include "logmink/geometry.hpp"

using namespace logmink;
using testutil::rel_err;

TEST_CASE("canonical pair angle folds antipodes together") {
    CHECK(canonical_pair_angle(0.0) == 0.0);
    CHECK(canonical_pair_angle(kPi) == 0.0);
    CHECK(canonical_pair_angle(-kPi / 2.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(canonical_pair_angle(kPi / 3.0 + 7.0 * kPi) ==
          doctest::Approx(kPi / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(canonical_pair_angle(std::nan("")), ValidationError);
}

TEST_CASE("wulff shape of two axis pairs is the square") {
    SymmetricPolygon P = testutil::square();
    REQUIRE(P.pair_count() == 2);
    REQUIRE(P.vertices.size() == 4);
    for (const Vec2& v : P.vertices) {
        CHECK(std::abs(v.x) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(v.y) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(P.edge_length[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(P.edge_length[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(P.area() == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(P.perimeter() == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(P.diameter() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK_NOTHROW(validate(P));
}

TEST_CASE("wulff shape drops dominated facets") {
    // The diagonal pair at support sqrt(2) passes through the square's
    // corners; pushed further out it cannot touch the body.
    std::vector<DirectionPair> dirs{{0.0}, {kPi / 4.0}, {kPi / 2.0}};
    std::vector<double> q{1.0, 1.6, 1.0};
    SymmetricPolygon P = wulff_shape(dirs, q);
    REQUIRE(P.pair_count() == 3);
    CHECK(P.edge_length[1] == 0.0);
    CHECK(P.vertices.size() == 4);
    CHECK(P.area() == doctest::Approx(4.0).epsilon(1e-14));
    // Support of the body in the dominated direction is clipped to the
    // corner value, both as stored and as recomputed from the vertices.
    CHECK(P.support[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(support_value(P, kPi / 4.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK_NOTHROW(validate(P));
}

TEST_CASE("wulff shape rejects bad input") {
    std::vector<DirectionPair> one{{0.0}};
    std::vector<double> q1{1.0};
    CHECK_THROWS_AS(wulff_shape(one, q1), ValidationError);
    std::vector<DirectionPair> dirs{{0.0}, {kPi / 2.0}};
    std::vector<double> qneg{1.0, -1.0};
    CHECK_THROWS_AS(wulff_shape(dirs, qneg), ValidationError);
    std::vector<double> qmis{1.0};
    CHECK_THROWS_AS(wulff_shape(dirs, qmis), ValidationError);
    std::vector<DirectionPair> dup{{0.3}, {0.3}};
    std::vector<double> q2{1.0, 1.0};
    CHECK_THROWS_AS(wulff_shape(dup, q2), ValidationError);
}

TEST_CASE("wulff shape is idempotent on its own support vector") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 200; ++t) {
        SymmetricPolygon P = testutil::random_body(rng);
        SymmetricPolygon Q = wulff_shape(P.pairs, P.support);
        REQUIRE(Q.pair_count() == P.pair_count());
        for (std::size_t i = 0; i < P.pair_count(); ++i) {
            CHECK(Q.support[i] == doctest::Approx(P.support[i]).epsilon(1e-12));
            CHECK(Q.edge_length[i] == doctest::Approx(P.edge_length[i]).epsilon(1e-10));
        }
        CHECK(hausdorff_distance(P, Q) <= 1e-10 * P.diameter());
    }
}

TEST_CASE("random bodies validate and satisfy the cone identity") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 1000; ++t) {
        SymmetricPolygon P = testutil::random_body(rng, 2, 9);
        CHECK_NOTHROW(validate(P));
        double cone = 0.0;
        for (double v : cone_volume_measure(P)) cone += v;
        CHECK(cone == doctest::Approx(P.area()).epsilon(1e-12));
        double surf = 0.0;
        for (double s : surface_area_measure(P)) surf += s;
        CHECK(surf == doctest::Approx(P.perimeter()).epsilon(1e-12));
        // Support function from vertices agrees with the stored values.
        for (std::size_t i = 0; i < P.pair_count(); ++i)
            CHECK(support_value(P, P.pairs[i].theta) ==
                  doctest::Approx(P.support[i]).epsilon(1e-11));
    }
}

TEST_CASE("regular polygon area and perimeter match closed forms") {
    for (int m : {3, 8, 64, 128}) {
        SymmetricPolygon P = testutil::regular_gon(m);
        const int n = 2 * m;
        const double want_area = n * std::tan(kPi / n);
        const double want_perim = 2.0 * n * std::tan(kPi / n);
        CHECK(rel_err(P.area(), want_area) <= 1e-12);
        CHECK(rel_err(P.perimeter(), want_perim) <= 1e-12);
    }
}

TEST_CASE("dilate scales supports, lengths, area and vertices") {
    std::mt19937_64 rng(5);
    SymmetricPolygon P = testutil::random_body(rng);
    const double c = 2.75;
    SymmetricPolygon Q = dilate(P, c);
    CHECK(Q.area() == doctest::Approx(c * c * P.area()).epsilon(1e-13));
    CHECK(Q.perimeter() == doctest::Approx(c * P.perimeter()).epsilon(1e-13));
    for (std::size_t i = 0; i < P.pair_count(); ++i)
        CHECK(Q.support[i] == doctest::Approx(c * P.support[i]).epsilon(1e-14));
    CHECK_NOTHROW(validate(Q));
    CHECK_THROWS_AS(dilate(P, 0.0), ValidationError);
    CHECK_THROWS_AS(dilate(P, -1.0), ValidationError);
}

TEST_CASE("hausdorff distance behaves like a metric on bodies") {
    std::mt19937_64 rng(23);
    SymmetricPolygon A = testutil::random_body(rng);
    SymmetricPolygon B = testutil::random_body(rng);
    SymmetricPolygon C = testutil::random_body(rng);
    CHECK(hausdorff_distance(A, A) == 0.0);
    CHECK(hausdorff_distance(A, B) == doctest::Approx(hausdorff_distance(B, A)).epsilon(1e-14));
    CHECK(hausdorff_distance(A, C) <=
          hausdorff_distance(A, B) + hausdorff_distance(B, C) + 1e-12);
    // Dilation of a body is at distance |c-1| * (max vertex norm).
    const double c = 1.5;
    double rmax = 0.0;
    for (const Vec2& v : A.vertices) rmax = std::max(rmax, norm(v));
    CHECK(hausdorff_distance(A, dilate(A, c)) ==
          doctest::Approx((c - 1.0) * rmax).epsilon(1e-12));
}

TEST_CASE("containment test respects nesting") {
    std::mt19937_64 rng(42);
    SymmetricPolygon P = testutil::random_body(rng);
    SymmetricPolygon big = dilate(P, 2.0);
    CHECK(contains(big, P));
    CHECK(!contains(P, big));
    CHECK(contains(P, P, 1e-12));
}
