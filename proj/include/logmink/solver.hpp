#pragma once

#include <span>
#include <string>
#include <vector>

#include "logmink/functional.hpp"
#include "logmink/geometry.hpp"
#include "logmink/measure.hpp"

namespace logmink {

struct SolveOptions {
    double tol_grad = 1e-3;     // stop when the sup-norm gradient drops below
    int max_iters = 500;
    double initial_step = 0.5;  // backtracking starts here and halves
    double min_support = 1e-6;  // relative to the geometric mean of q; a
                                // candidate whose Wulff support falls below
                                // this is a degenerate step and is rejected
    double fem_h = 0.0;         // <= 0: pinned at the initial body
};

enum class SolveStatus {
    Converged,       // gradient below tol_grad (or stalled within 10x of it)
    Stalled,         // no decreasing step found and the gradient is large
    IterationLimit,  // max_iters exhausted
};

struct SolveResult {
    SymmetricPolygon body;            // K0, scaled so the variational total
                                      // matches the measure total
    FunctionalDescriptor functional;  // records the mesh size used at K0
    std::vector<double> nu_mass;      // aligned with body.pairs
    std::vector<double> variational;  // V at K0
    std::vector<double> density;      // associated surface measure at K0
    double f_value = 0.0;             // F(K0)
    double residual_linf = 0.0;       // max_i |nu_i - V_i| / total mass
    double grad_linf = 0.0;
    double objective = 0.0;           // sum nu_i log h_i at K0
    std::vector<double> gamma_trace;  // objective at accepted iterates;
                                      // nonincreasing by construction
    int iterations = 0;
    SolveStatus status = SolveStatus::Converged;
    std::string message;

    bool converged() const { return status == SolveStatus::Converged; }
};

// sum nu_i log h_P(u_i); requires P built over the measure's pairs.
double phi_objective(const EvenMeasure& nu, const SymmetricPolygon& P);

// Gamma(q) = F([q])^(-1/alpha) * exp(sum nuhat_i log q_i), the scale-free
// descent objective; the measure is normalized internally.
double gamma_value(const EvenMeasure& nu, const FunctionalDescriptor& F,
                   std::span<const double> q);

// Gradient of log Gamma in the log-support coordinates at a body (the Wulff
// shape of the current q): nuhat_i - V_i / F.  Vanishes exactly at bodies
// whose normalized variational measure equals the normalized input measure.
std::vector<double> gamma_gradient(const EvenMeasure& nu, const FunctionalDescriptor& F,
                                   const SymmetricPolygon& P);

// Projected gradient descent for the even logarithmic Minkowski problem
// V_F,K = nu: iterates live in g = log q, every accepted step is projected
// onto genuine support numbers via the Wulff shape, and backtracking accepts
// only strict decrease of Gamma.  Refuses measures that concentrate half or
// more of their mass on a pair (SubspaceConcentrationError).  Nonconvergence
// is reported in the result status, with the trace intact.
SolveResult solve_log_minkowski(const EvenMeasure& nu, const FunctionalDescriptor& F,
                                const SolveOptions& opts = {});

}  // namespace logmink
