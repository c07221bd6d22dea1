#pragma once

#include <span>
#include <string>
#include <vector>

#include "logmink/geometry.hpp"

namespace logmink {

// Even (origin-symmetric) discrete measure on the unit circle: mass[i] is
// the combined weight of the antipodal pair +-u(pairs[i].theta).
struct EvenMeasure {
    std::vector<DirectionPair> pairs;  // sorted, distinct, angles in [0, pi)
    std::vector<double> mass;          // strictly positive

    double total() const;
};

// Canonicalize raw (theta, mass) entries: angles are reduced to [0, pi),
// entries closer than kAngleTol are merged by summing their masses, zero
// masses are dropped silently, and negative ones are a ValidationError.
EvenMeasure make_even_measure(std::span<const double> thetas, std::span<const double> masses);

struct SsccViolation {
    std::size_t pair_index = 0;
    double theta = 0.0;
    double fraction = 0.0;  // pair mass / total
};

// Strict subspace concentration check: in the plane the condition reduces to
// every antipodal pair carrying strictly less than half the total mass.  The
// comparison is exact; no epsilon is applied.
struct SsccReport {
    bool pass = false;
    double max_fraction = 0.0;
    std::vector<SsccViolation> violations;

    std::string text() const;
};

SsccReport check_sscc(const EvenMeasure& nu);

}  // namespace logmink
