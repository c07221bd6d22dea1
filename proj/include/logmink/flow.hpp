#pragma once

#include <functional>
#include <string>
#include <vector>

#include "logmink/measure.hpp"
#include "logmink/solver.hpp"

namespace logmink {

// Midpoint discretization of an even density on the circle into `pairs`
// antipodal pairs: theta_j = (j + 1/2) pi / pairs, each carrying the mass
// phi(theta_j) pi / pairs of its angular cell.
EvenMeasure discretize_density(const std::function<double(double)>& phi, int pairs = 64);

// A self-similar shrinking family K(t) = scale(t) K(0) driven by a
// functional of degree alpha, with speed weight phi and extinction at
// death_time: scale(t) = ((death_time - t) / death_time)^(1/alpha).
struct FlowSpec {
    FunctionalDescriptor functional;  // volume or torsion
    double death_time = 1.0;
    EvenMeasure weight;
    std::vector<double> frame_times;  // each in [0, death_time)
};

struct FlowFrame {
    double t = 0.0;
    double scale = 1.0;
    SymmetricPolygon body;
};

struct FlowSolution {
    FlowSpec spec;
    SolveResult profile;  // K(0): the solved log-Minkowski body for the weight
    std::vector<FlowFrame> frames;
};

// Solves the log-Minkowski problem for the weight and dilates the resulting
// profile through the requested frame times.
FlowSolution build_self_similar(const FlowSpec& spec, const SolveOptions& opts = {});

struct FlowVerification {
    // max_i |w_i - V_i(K0)| / |w|, recomputed from the stored body.
    double measure_residual = 0.0;
    // |recomputed - recorded| residual; zero when evaluation is deterministic.
    double recompute_gap = 0.0;
    // Surface density under dilation by 1/2 against the homogeneity power
    // alpha - 1, relative to the per-pair density.
    double density_scaling_error = 0.0;
    // max over frames of |F(K(t)) - |w| (T-t)/T| relative to the expected value.
    double exponent_error = 0.0;
    // max over frames of |scale^alpha T - (T-t)| / T.
    double scale_algebra_error = 0.0;
    // max over frames of hausdorff(K(t), scale(t) K0) / diameter.
    double frame_dilation_error = 0.0;

    bool pass = false;
    std::string text() const;
};

// Pass thresholds: the recomputed residual must reproduce the recorded one
// (1e-14), the scale algebra and frame dilation are exact to 1e-12, density
// scaling is allowed 3e-2, and the exponent check gets the functional's own
// accuracy: 1e-9 for the volume flow, 2e-2 for torsion.
FlowVerification verify_self_similar(const FlowSolution& sol);

}  // namespace logmink
