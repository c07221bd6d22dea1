#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "logmink/errors.hpp"
#include "logmink/measure.hpp"

using namespace logmink;

TEST_CASE("make_even_measure canonicalizes angles and merges duplicates") {
    // theta = pi + 0.4 is the same pair as 0.4; the two masses merge.
    std::array<double, 3> th{0.4, kPi + 0.4, 2.0};
    std::array<double, 3> ms{1.0, 2.5, 1.0};
    EvenMeasure nu = make_even_measure(th, ms);
    REQUIRE(nu.pairs.size() == 2);
    CHECK(nu.pairs[0].theta == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(nu.pairs[1].theta == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(nu.mass[0] == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(nu.mass[1] == 1.0);
    CHECK(nu.total() == doctest::Approx(4.5).epsilon(1e-15));
}

TEST_CASE("make_even_measure sorts and drops zero masses") {
    std::array<double, 4> th{2.9, 0.1, 1.5, 0.7};
    std::array<double, 4> ms{1.0, 2.0, 0.0, 3.0};
    EvenMeasure nu = make_even_measure(th, ms);
    REQUIRE(nu.pairs.size() == 3);
    CHECK(nu.pairs[0].theta == doctest::Approx(0.1));
    CHECK(nu.pairs[1].theta == doctest::Approx(0.7));
    CHECK(nu.pairs[2].theta == doctest::Approx(2.9));
    CHECK(nu.mass[0] == 2.0);
    CHECK(nu.mass[1] == 3.0);
    CHECK(nu.mass[2] == 1.0);
}

TEST_CASE("make_even_measure rejects bad entries") {
    std::array<double, 2> th{0.0, 1.0};
    std::array<double, 2> neg{1.0, -0.5};
    CHECK_THROWS_AS(make_even_measure(th, neg), ValidationError);
    std::array<double, 2> nan{1.0, std::nan("")};
    CHECK_THROWS_AS(make_even_measure(th, nan), ValidationError);
    std::array<double, 1> th1{0.5};
    std::array<double, 1> ms0{0.0};
    // Dropping the only entry leaves an empty measure.
    CHECK_THROWS_AS(make_even_measure(th1, ms0), ValidationError);
    std::array<double, 2> mis{1.0, 1.0};
    std::array<double, 1> one{1.0};
    CHECK_THROWS_AS(make_even_measure(mis, one), ValidationError);
}

TEST_CASE("sscc accepts the uniform triple and rejects the lopsided one") {
    std::array<double, 3> th{0.0, 1.0, 2.0};
    std::array<double, 3> ok{1.0, 1.0, 1.0};
    SsccReport r = check_sscc(make_even_measure(th, ok));
    CHECK(r.pass);
    CHECK(r.max_fraction == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r.violations.empty());

    std::array<double, 3> bad{3.0, 1.0, 1.0};
    SsccReport f = check_sscc(make_even_measure(th, bad));
    CHECK(!f.pass);
    REQUIRE(f.violations.size() == 1);
    CHECK(f.violations[0].pair_index == 0);
    CHECK(f.violations[0].theta == 0.0);
    CHECK(f.violations[0].fraction == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(f.text().find("no solution exists") != std::string::npos);
}

TEST_CASE("sscc comparison is exact at one half") {
    // 1 + 1 + 2: the third pair carries exactly half the mass, which the
    // strict inequality must reject.  All values are powers of two, so the
    // fractions are exact.
    std::array<double, 3> th{0.0, 1.0, 2.0};
    std::array<double, 3> half{1.0, 1.0, 2.0};
    SsccReport r = check_sscc(make_even_measure(th, half));
    CHECK(!r.pass);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].fraction == 0.5);

    std::array<double, 3> under{1.0, 1.0, 1.9375};
    CHECK(check_sscc(make_even_measure(th, under)).pass);
}

TEST_CASE("sscc fails every measure on fewer than three pairs") {
    std::array<double, 2> th2{0.2, 1.7};
    std::array<double, 2> ms2{1.0, 1.0};
    SsccReport r2 = check_sscc(make_even_measure(th2, ms2));
    CHECK(!r2.pass);
    CHECK(r2.violations.size() == 2);  // both pairs carry exactly half
    std::array<double, 1> th1{0.9};
    std::array<double, 1> ms1{4.0};
    CHECK(!check_sscc(make_even_measure(th1, ms1)).pass);
}

TEST_CASE("sscc verdict is scale invariant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> m_dist(1, 6);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> mass(0.125, 4.0);
    const double factors[] = {0.25, 2.0, 1024.0, 0x1p-30};
    for (int t = 0; t < 200; ++t) {
        const int m = m_dist(rng);
        std::vector<double> th(m), ms(m);
        for (int i = 0; i < m; ++i) {
            th[i] = angle(rng);
            ms[i] = mass(rng);
        }
        EvenMeasure nu;
        try {
            nu = make_even_measure(th, ms);
        } catch (const ValidationError&) {
            continue;  // angles merged below two pairs; draw again
        }
        const bool base = check_sscc(nu).pass;
        for (double c : factors) {
            EvenMeasure scaled = nu;
            for (double& v : scaled.mass) v *= c;
            CHECK(check_sscc(scaled).pass == base);
        }
    }
}
