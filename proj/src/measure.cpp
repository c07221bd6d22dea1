#include "logmink/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "logmink/errors.hpp"

namespace logmink {

double EvenMeasure::total() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

EvenMeasure make_even_measure(std::span<const double> thetas, std::span<const double> masses) {
    if (thetas.size() != masses.size())
        throw ValidationError("measure: angle and mass lists differ in length");
    std::vector<std::pair<double, double>> entries;
    entries.reserve(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (!std::isfinite(masses[i]) || masses[i] < 0.0)
            throw ValidationError("measure: mass at entry " + std::to_string(i) +
                                  " must be finite and nonnegative");
        if (masses[i] == 0.0) continue;
        entries.emplace_back(canonical_pair_angle(thetas[i]), masses[i]);
    }
    std::sort(entries.begin(), entries.end());

    EvenMeasure nu;
    for (const auto& [theta, mass] : entries) {
        if (!nu.pairs.empty() && theta - nu.pairs.back().theta <= kAngleTol)
            nu.mass.back() += mass;
        else {
            nu.pairs.push_back({theta});
            nu.mass.push_back(mass);
        }
    }
    if (nu.pairs.empty()) throw ValidationError("measure: no pairs with positive mass");
    return nu;
}

SsccReport check_sscc(const EvenMeasure& nu) {
    SsccReport report;
    const double half = 0.5 * nu.total();
    for (std::size_t i = 0; i < nu.mass.size(); ++i) {
        const double fraction = nu.mass[i] / nu.total();
        report.max_fraction = std::max(report.max_fraction, fraction);
        if (!(nu.mass[i] < half))
            report.violations.push_back({i, nu.pairs[i].theta, fraction});
    }
    report.pass = report.violations.empty();
    return report;
}

std::string SsccReport::text() const {
    std::ostringstream os;
    os.precision(12);
    if (pass) {
        os << "subspace concentration: PASS (largest pair fraction " << max_fraction << " < 1/2)";
        return os.str();
    }
    os << "subspace concentration: FAIL;";
    for (const SsccViolation& v : violations)
        os << " pair " << v.pair_index << " (theta " << v.theta << ") carries fraction "
           << v.fraction << " >= 1/2;";
    os << " no solution exists for this measure";
    return os.str();
}

}  // namespace logmink
