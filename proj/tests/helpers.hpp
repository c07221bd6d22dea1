#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "logmink/geometry.hpp"

namespace testutil {

using logmink::DirectionPair;
using logmink::SymmetricPolygon;

// Regular 2m-gon with apothem 1 from m uniformly spread direction pairs.
inline SymmetricPolygon regular_gon(int pairs) {
    std::vector<DirectionPair> dirs(pairs);
    std::vector<double> q(pairs, 1.0);
    for (int j = 0; j < pairs; ++j) dirs[j] = {j * logmink::kPi / pairs};
    return logmink::wulff_shape(dirs, q);
}

inline SymmetricPolygon square() {
    return logmink::wulff_shape(std::vector<DirectionPair>{{0.0}, {logmink::kPi / 2.0}},
                                std::vector<double>{1.0, 1.0});
}

// Random symmetric polygon with angle gaps >= 0.06 and supports in
// [0.6, 1.8]; facets may be inactive.
inline SymmetricPolygon random_body(std::mt19937_64& rng, int min_pairs = 3, int max_pairs = 8) {
    std::uniform_int_distribution<int> m_dist(min_pairs, max_pairs);
    std::uniform_real_distribution<double> angle(0.0, logmink::kPi);
    std::uniform_real_distribution<double> supp(0.6, 1.8);
    for (;;) {
        const int m = m_dist(rng);
        std::vector<double> th(m);
        for (double& t : th) t = angle(rng);
        std::sort(th.begin(), th.end());
        bool spaced = th.front() + logmink::kPi - th.back() >= 0.06;
        for (int i = 1; i < m && spaced; ++i) spaced = th[i] - th[i - 1] >= 0.06;
        if (!spaced) continue;
        std::vector<DirectionPair> pairs(m);
        std::vector<double> q(m);
        for (int i = 0; i < m; ++i) {
            pairs[i] = {th[i]};
            q[i] = supp(rng);
        }
        return logmink::wulff_shape(pairs, q);
    }
}

// All facets active with healthy edge lengths.
inline bool clean_body(const SymmetricPolygon& P) {
    const double scale = 0.5 * P.diameter();
    return *std::min_element(P.edge_length.begin(), P.edge_length.end()) >= 0.05 * scale;
}

inline SymmetricPolygon random_clean_body(std::mt19937_64& rng, int min_pairs = 3,
                                          int max_pairs = 8) {
    for (;;) {
        SymmetricPolygon P = random_body(rng, min_pairs, max_pairs);
        if (clean_body(P)) return P;
    }
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace testutil
