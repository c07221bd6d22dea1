#include "logmink/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "logmink/errors.hpp"

namespace logmink {

namespace {

constexpr double kMinStep = 1e-12;
constexpr double kStallGraceFactor = 10.0;  // stalls within this of tol_grad count as converged

std::string grad_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::vector<double> normalized_mass(const EvenMeasure& nu) {
    const double total = nu.total();
    if (!(total > 0.0)) throw ValidationError("solver: measure has no mass");
    std::vector<double> nuhat(nu.mass);
    for (double& m : nuhat) m /= total;
    return nuhat;
}

double gamma_of(double f_value, double alpha, std::span<const double> nuhat,
                std::span<const double> g) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += nuhat[i] * g[i];
    return std::pow(f_value, -1.0 / alpha) * std::exp(s);
}

void check_alignment(const EvenMeasure& nu, std::size_t m) {
    if (nu.pairs.size() != m) throw ValidationError("solver: pair count mismatch");
}

}  // namespace

double phi_objective(const EvenMeasure& nu, const SymmetricPolygon& P) {
    check_alignment(nu, P.pair_count());
    double s = 0.0;
    for (std::size_t i = 0; i < nu.mass.size(); ++i) {
        if (std::abs(nu.pairs[i].theta - P.pairs[i].theta) > kAngleTol)
            throw ValidationError("phi_objective: pair angles disagree");
        s += nu.mass[i] * std::log(P.support[i]);
    }
    return s;
}

double gamma_value(const EvenMeasure& nu, const FunctionalDescriptor& F,
                   std::span<const double> q) {
    check_alignment(nu, q.size());
    const std::vector<double> nuhat = normalized_mass(nu);
    std::vector<double> g(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!(q[i] > 0.0)) throw ValidationError("gamma_value: support numbers must be positive");
        g[i] = std::log(q[i]);
    }
    const SymmetricPolygon P = wulff_shape(nu.pairs, q);
    return gamma_of(evaluate(F, P), F.alpha, nuhat, g);
}

std::vector<double> gamma_gradient(const EvenMeasure& nu, const FunctionalDescriptor& F,
                                   const SymmetricPolygon& P) {
    check_alignment(nu, P.pair_count());
    const std::vector<double> nuhat = normalized_mass(nu);
    const Analysis a = analyze(F, P);
    std::vector<double> grad(P.pair_count());
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = nuhat[i] - a.variational[i] / a.value;
    return grad;
}

SolveResult solve_log_minkowski(const EvenMeasure& nu, const FunctionalDescriptor& F0,
                                const SolveOptions& opts) {
    const SsccReport sscc = check_sscc(nu);
    if (!sscc.pass) throw SubspaceConcentrationError(sscc.text());

    const std::size_t m = nu.pairs.size();
    const double total = nu.total();
    const std::vector<double> nuhat = normalized_mass(nu);

    // Pin the mesh resolution once, at the initial body, so every candidate
    // is analyzed at a consistent absolute resolution.
    FunctionalDescriptor F = F0;
    if (opts.fem_h > 0.0) F.fem_h = opts.fem_h;
    std::vector<double> g(m, 0.0), q(m, 1.0);
    SymmetricPolygon P = wulff_shape(nu.pairs, q);
    if (!(F.fem_h > 0.0)) F.fem_h = resolved_fem_h(F, P);

    auto project = [&](const SymmetricPolygon& body, std::vector<double>& into) {
        for (std::size_t i = 0; i < m; ++i) into[i] = std::log(body.support[i]);
    };
    project(P, g);
    Analysis a = analyze(F, P);
    double gamma_cur = gamma_of(a.value, F.alpha, nuhat, g);

    SolveResult res;
    res.gamma_trace.push_back(gamma_cur);
    res.status = SolveStatus::IterationLimit;
    res.message = "iteration limit of " + std::to_string(opts.max_iters) + " reached";

    std::vector<double> grad(m), g_try(m), q_try(m);
    for (int iter = 1; iter <= opts.max_iters; ++iter) {
        double grad_linf = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            grad[i] = nuhat[i] - a.variational[i] / a.value;
            grad_linf = std::max(grad_linf, std::abs(grad[i]));
        }
        if (grad_linf <= opts.tol_grad) {
            res.status = SolveStatus::Converged;
            res.message = "gradient below tolerance";
            break;
        }

        // Backtracking on strict decrease of Gamma.  A candidate collapsing
        // a support number below min_support (relative to the geometric mean
        // of q) is a degenerate step and is halved away.
        bool accepted = false;
        for (double s = opts.initial_step; s >= kMinStep; s *= 0.5) {
            double log_mean = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                g_try[i] = g[i] - s * grad[i];
                q_try[i] = std::exp(g_try[i]);
                log_mean += g_try[i];
            }
            const double geo_mean = std::exp(log_mean / double(m));
            SymmetricPolygon P_try = wulff_shape(nu.pairs, q_try);
            if (*std::min_element(P_try.support.begin(), P_try.support.end()) <
                opts.min_support * geo_mean)
                continue;
            Analysis a_try;
            try {
                a_try = analyze(F, P_try);
            } catch (const AccuracyError& e) {
                throw AccuracyError(std::string(e.what()) + " (solver iteration " +
                                    std::to_string(iter) + ")");
            } catch (const NumericError& e) {
                throw NumericError(std::string(e.what()) + " (solver iteration " +
                                   std::to_string(iter) + ")");
            }
            const double gamma_try = gamma_of(a_try.value, F.alpha, nuhat, g_try);
            if (gamma_try < gamma_cur) {
                // Accept and project onto genuine support numbers.  The
                // projected body is the candidate itself, so its analysis is
                // reused and the projected Gamma can only shrink further
                // (h <= q coordinatewise).
                P = std::move(P_try);
                a = std::move(a_try);
                project(P, g);
                gamma_cur = gamma_of(a.value, F.alpha, nuhat, g);
                res.gamma_trace.push_back(gamma_cur);
                res.iterations = iter;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (grad_linf <= kStallGraceFactor * opts.tol_grad) {
                res.status = SolveStatus::Converged;
                res.message = "no decreasing step at the mesh noise floor; gradient " +
                              grad_str(grad_linf) + " within grace of tolerance";
            } else {
                res.status = SolveStatus::Stalled;
                res.message = "no decreasing step found; gradient still " +
                              grad_str(grad_linf);
            }
            break;
        }
    }

    // Rescale so the variational total matches the measure total, and
    // analyze the final body at the correspondingly scaled resolution.
    const double c = std::pow(total / a.value, 1.0 / F.alpha);
    res.body = dilate(P, c);
    F.fem_h *= c;
    res.functional = F;
    const Analysis a0 = analyze(F, res.body);
    res.nu_mass = nu.mass;
    res.variational = a0.variational;
    res.density = a0.density;
    res.f_value = a0.value;
    res.objective = phi_objective(nu, res.body);
    res.residual_linf = 0.0;
    res.grad_linf = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        res.residual_linf = std::max(res.residual_linf,
                                     std::abs(nu.mass[i] - a0.variational[i]) / total);
        res.grad_linf = std::max(res.grad_linf,
                                 std::abs(nuhat[i] - a0.variational[i] / a0.value));
    }
    return res;
}

}  // namespace logmink
