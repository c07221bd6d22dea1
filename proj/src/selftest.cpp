#include "logmink/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "logmink/errors.hpp"
#include "logmink/flow.hpp"
#include "logmink/functional.hpp"
#include "logmink/geometry.hpp"
#include "logmink/measure.hpp"
#include "logmink/oracles.hpp"
#include "logmink/solver.hpp"

namespace logmink {

namespace {

constexpr std::uint64_t kSeed = 0x10f2c0de11ULL;

std::string fnum(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

double rel_gap(double got, double want) { return std::abs(got - want) / std::abs(want); }

SymmetricPolygon random_body(std::mt19937_64& rng, int min_pairs = 3, int max_pairs = 8,
                             double log_spread = 0.0) {
    std::uniform_int_distribution<int> m_dist(min_pairs, max_pairs);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> supp(0.6, 1.8);
    std::uniform_real_distribution<double> logq(-log_spread, log_spread);
    for (;;) {
        const int m = m_dist(rng);
        std::vector<double> th(m);
        for (double& t : th) t = angle(rng);
        std::sort(th.begin(), th.end());
        bool spaced = th.front() + kPi - th.back() >= 0.06;
        for (int i = 1; i < m && spaced; ++i) spaced = th[i] - th[i - 1] >= 0.06;
        if (!spaced) continue;

        std::vector<DirectionPair> pairs(m);
        std::vector<double> q(m);
        for (int i = 0; i < m; ++i) {
            pairs[i] = {th[i]};
            q[i] = log_spread > 0.0 ? std::exp(logq(rng)) : supp(rng);
        }
        return wulff_shape(pairs, q);
    }
}

// Every facet active with a healthy edge; keeps support perturbations from
// changing the active set.
bool clean_body(const SymmetricPolygon& P) {
    const double scale = 0.5 * P.diameter();
    double shortest = std::numeric_limits<double>::infinity();
    for (double len : P.edge_length) shortest = std::min(shortest, len);
    return shortest >= 0.05 * scale;
}

EvenMeasure uniform_pairs_measure(int pairs, double total) {
    std::vector<double> th(pairs), mass(pairs, total / pairs);
    for (int j = 0; j < pairs; ++j) th[j] = j * kPi / pairs;
    return make_even_measure(th, mass);
}

// Hausdorff distance between a polygon and the origin-centered disc of
// radius R: sup-norm gap of the support functions, which the polygon attains
// at a vertex (above) or a facet normal (below).
double disc_hausdorff(const SymmetricPolygon& P, double R) {
    double vmax = 0.0;
    for (const Vec2& v : P.vertices) vmax = std::max(vmax, norm(v));
    double hmin = std::numeric_limits<double>::infinity();
    for (double h : P.support) hmin = std::min(hmin, h);
    return std::max(vmax - R, R - hmin);
}

struct Context {
    bool pool_ready = false;
    std::vector<SymmetricPolygon> pool;              // 100 random bodies
    std::array<std::vector<Analysis>, 3> pool_eval;  // per FunctionalKind
    std::vector<SymmetricPolygon> clean20;           // fully active bodies
    std::mt19937_64 rng{kSeed};
    std::vector<std::pair<std::string, std::vector<double>>> traces;

    void ensure_pool() {
        if (pool_ready) return;
        pool.reserve(100);
        for (int i = 0; i < 100; ++i) pool.push_back(random_body(rng));
        for (FunctionalKind kind :
             {FunctionalKind::Volume, FunctionalKind::Torsion, FunctionalKind::Eigenvalue}) {
            auto& evals = pool_eval[std::size_t(kind)];
            evals.reserve(100);
            const FunctionalDescriptor F = FunctionalDescriptor::make(kind);
            for (const SymmetricPolygon& P : pool) evals.push_back(analyze(F, P));
        }
        while (clean20.size() < 20) {
            SymmetricPolygon P = random_body(rng);
            if (clean_body(P)) clean20.push_back(std::move(P));
        }
        pool_ready = true;
    }
};

template <typename Fn>
CriterionResult run_criterion(int id, std::string name, Fn&& fn) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::tie(r.pass, r.detail) = fn();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// --- criterion bodies -----------------------------------------------------

std::pair<bool, std::string> criterion_hexagon(Context& ctx) {
    const EvenMeasure nu = make_even_measure(std::array{0.0, kPi / 3.0, 2.0 * kPi / 3.0},
                                             std::array{2.0, 2.0, 2.0});
    const SolveResult r = solve_log_minkowski(nu, FunctionalDescriptor::make(FunctionalKind::Volume));
    ctx.traces.emplace_back("hexagon solve", r.gamma_trace);

    const double target = std::pow(3.0, 0.25);
    double support_err = 0.0;
    for (double h : r.body.support) support_err = std::max(support_err, std::abs(h - target));

    const auto bf = oracles::brute_force_volume_logmink({0.0, kPi / 3.0, 2.0 * kPi / 3.0},
                                                        {2.0, 2.0, 2.0});
    const double objective_gap = std::abs(r.objective - bf.objective_phi);

    const bool pass = r.converged() && support_err <= 1e-6 && r.residual_linf <= 1e-8 &&
                      objective_gap <= 1e-6;
    return {pass, "support err " + fnum(support_err) + " vs 3^(1/4); residual " +
                      fnum(r.residual_linf) + "; objective gap " + fnum(objective_gap)};
}

std::pair<bool, std::string> criterion_disc_recovery(Context& ctx, FunctionalKind kind,
                                                     double total, const char* label) {
    const auto t0 = std::chrono::steady_clock::now();
    const EvenMeasure nu = uniform_pairs_measure(64, total);
    const SolveResult r = solve_log_minkowski(nu, FunctionalDescriptor::make(kind));
    ctx.traces.emplace_back(std::string(label) + " solve", r.gamma_trace);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const double dist = disc_hausdorff(r.body, 1.0);
    const bool pass =
        r.converged() && dist <= 2e-2 && r.residual_linf <= 2e-2 && seconds <= 300.0;
    return {pass, "hausdorff to unit disc " + fnum(dist) + "; residual " + fnum(r.residual_linf) +
                      "; " + fnum(seconds) + "s of 300s"};
}

std::pair<bool, std::string> criterion_fem_accuracy() {
    const SymmetricPolygon square =
        wulff_shape(std::array{DirectionPair{0.0}, DirectionPair{kPi / 2.0}}, std::array{1.0, 1.0});
    std::vector<DirectionPair> gon_pairs(128);
    std::vector<double> gon_q(128, 1.0);
    for (int j = 0; j < 128; ++j) gon_pairs[j] = {j * kPi / 128.0};
    const SymmetricPolygon gon = wulff_shape(gon_pairs, gon_q);

    const double tau_sq = evaluate(FunctionalDescriptor::make(FunctionalKind::Torsion), square);
    const double lam_sq = evaluate(FunctionalDescriptor::make(FunctionalKind::Eigenvalue), square);
    const double tau_gon = evaluate(FunctionalDescriptor::make(FunctionalKind::Torsion), gon);
    const double lam_gon = evaluate(FunctionalDescriptor::make(FunctionalKind::Eigenvalue), gon);

    const double e1 = rel_gap(tau_sq, oracles::square_torsion(2.0).value);
    const double e2 = rel_gap(lam_sq, oracles::rect_eigen(2.0, 2.0).value);
    const double e3 = rel_gap(tau_gon, oracles::disc_torsion(1.0).value);
    const double e4 = rel_gap(lam_gon, oracles::disc_eigen(1.0).value);

    const bool pass = e1 <= 1e-2 && e2 <= 1e-2 && e3 <= 1e-2 && e4 <= 1e-2;
    return {pass, "rel err: square tau " + fnum(e1) + ", square lambda " + fnum(e2) +
                      ", 256-gon tau " + fnum(e3) + ", 256-gon lambda " + fnum(e4)};
}

std::pair<bool, std::string> criterion_representation(Context& ctx) {
    ctx.ensure_pool();
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 3; ++k) {
        for (const Analysis& a : ctx.pool_eval[k]) {
            double sum = 0.0;
            for (double v : a.variational) sum += v;
            worst[k] = std::max(worst[k], rel_gap(sum, a.value));
        }
    }
    const bool pass = worst[0] <= 1e-10 && worst[1] <= 2e-2 && worst[2] <= 2e-2;
    return {pass, "max |sum V - F|/F over 100 bodies: volume " + fnum(worst[0]) + ", torsion " +
                      fnum(worst[1]) + ", eigenvalue " + fnum(worst[2])};
}

std::pair<bool, std::string> criterion_hadamard(Context& ctx) {
    ctx.ensure_pool();
    std::uniform_real_distribution<double> f_dist(-1.0, 1.0);
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    const std::array<double, 3> tol{1e-6, 1e-2, 1e-2};
    // Volume is evaluated in exact arithmetic, so the step only has to beat
    // the quotient's t^2 truncation; the mesh-based functionals keep t=1e-3,
    // large enough that remeshing jitter stays subdominant.
    const std::array<double, 3> step{1e-5, 1e-3, 1e-3};

    for (std::size_t k = 0; k < 3; ++k) {
        const FunctionalKind kind = FunctionalKind(k);
        const double t = step[k];
        for (const SymmetricPolygon& P : ctx.clean20) {
            FunctionalDescriptor F = FunctionalDescriptor::make(kind);
            // One mesh size for all probes of this body, at half the default
            // resolution: the difference quotient divides discretization
            // jitter between the two perturbed meshes by 2t, so the FD side
            // needs the quadratic mesh error pushed below that amplification.
            F.fem_h = 0.5 * resolved_fem_h(F, P);
            const Analysis base = analyze(F, P);
            const std::size_t m = P.pair_count();

            // Reject perturbations with a near-vanishing derivative so the
            // relative comparison stays conditioned.
            std::vector<double> f(m);
            double analytic = 0.0;
            for (int attempt = 0; attempt < 100; ++attempt) {
                for (double& c : f) c = f_dist(ctx.rng);
                analytic = 0.0;
                for (std::size_t i = 0; i < m; ++i) analytic += f[i] * base.variational[i];
                analytic *= F.alpha;
                if (std::abs(analytic) >= 0.15 * std::abs(F.alpha) * base.value) break;
            }

            const auto shifted = [&](double s) {
                std::vector<double> q(m);
                for (std::size_t i = 0; i < m; ++i) q[i] = P.support[i] * std::exp(s * f[i]);
                return evaluate(F, wulff_shape(P.pairs, q));
            };
            const double fd = (shifted(t) - shifted(-t)) / (2.0 * t);
            worst[k] = std::max(worst[k], std::abs(fd - analytic) / std::abs(analytic));
        }
    }
    const bool pass = worst[0] <= tol[0] && worst[1] <= tol[1] && worst[2] <= tol[2];
    return {pass, "max rel err over 20 (P,f): volume " + fnum(worst[0]) + ", torsion " +
                      fnum(worst[1]) + ", eigenvalue " + fnum(worst[2])};
}

std::pair<bool, std::string> criterion_monotonicity(Context& ctx) {
    ctx.ensure_pool();
    const double slack = 1e-2;
    std::uniform_real_distribution<double> shrink(0.45, 0.85);

    bool nested_ok = true;
    double worst_margin = 0.0;  // most negative oriented gap, relative
    for (int i = 0; i < 50; ++i) {
        const SymmetricPolygon& Q = ctx.pool[i];
        const std::size_t m = Q.pair_count();
        std::vector<double> q(m);
        for (std::size_t j = 0; j < m; ++j) q[j] = Q.support[j] * shrink(ctx.rng);
        const SymmetricPolygon P = wulff_shape(Q.pairs, q);
        if (!contains(Q, P, 1e-9)) {
            nested_ok = false;
            break;
        }

        const double dv = (ctx.pool_eval[0][i].value - P.area()) / P.area();
        const double dt =
            (ctx.pool_eval[1][i].value -
             evaluate(FunctionalDescriptor::make(FunctionalKind::Torsion), P)) /
            ctx.pool_eval[1][i].value;
        const double lam_p = evaluate(FunctionalDescriptor::make(FunctionalKind::Eigenvalue), P);
        const double de = (lam_p - ctx.pool_eval[2][i].value) / lam_p;
        worst_margin = std::min({worst_margin, dv, dt, de});
        nested_ok = nested_ok && dv >= -slack && dt >= -slack && de >= -slack;
    }

    // Equal-area disc comparisons on the full pool.
    double worst_iso = 0.0;
    for (std::size_t i = 0; i < ctx.pool.size(); ++i) {
        const double R = std::sqrt(ctx.pool[i].area() / kPi);
        const double tau_disc = oracles::disc_torsion(R).value;
        const double lam_disc = oracles::disc_eigen(R).value;
        const double mt = (tau_disc - ctx.pool_eval[1][i].value) / tau_disc;
        const double me = (ctx.pool_eval[2][i].value - lam_disc) / lam_disc;
        worst_iso = std::min({worst_iso, mt, me});
    }

    const bool pass = nested_ok && worst_iso >= -slack;
    return {pass, "50 nested pairs worst oriented margin " + fnum(worst_margin) +
                      "; disc comparisons on 100 bodies worst margin " + fnum(worst_iso)};
}

std::pair<bool, std::string> criterion_homogeneity(Context& ctx) {
    ctx.ensure_pool();
    const std::array<double, 3> tol{1e-10, 1e-2, 1e-2};
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 3; ++k) {
        const FunctionalDescriptor F = FunctionalDescriptor::make(FunctionalKind(k));
        for (int i = 0; i < 6; ++i) {
            const double base = ctx.pool_eval[k][i].value;
            for (double c : {0.5, 2.0, 3.0}) {
                const double scaled = evaluate(F, dilate(ctx.pool[i], c));
                worst[k] = std::max(worst[k], rel_gap(scaled, std::pow(c, F.alpha) * base));
            }
        }
    }

    // Sum of the log-Gamma gradient = 1 - sum V / F: bounded by the
    // representation tolerance.
    std::uniform_real_distribution<double> mass_dist(0.5, 1.5);
    std::array<double, 3> grad_sum{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 3; ++k) {
        const FunctionalDescriptor F = FunctionalDescriptor::make(FunctionalKind(k));
        for (int i = 0; i < 6; ++i) {
            const SymmetricPolygon& P = ctx.pool[i];
            std::vector<double> th(P.pair_count()), mass(P.pair_count());
            for (std::size_t j = 0; j < P.pair_count(); ++j) {
                th[j] = P.pairs[j].theta;
                mass[j] = mass_dist(ctx.rng);
            }
            const std::vector<double> grad =
                gamma_gradient(make_even_measure(th, mass), F, P);
            double sum = 0.0;
            for (double g : grad) sum += g;
            grad_sum[k] = std::max(grad_sum[k], std::abs(sum));
        }
    }

    const bool pass = worst[0] <= tol[0] && worst[1] <= tol[1] && worst[2] <= tol[2] &&
                      grad_sum[0] <= 1e-10 && grad_sum[1] <= 2e-2 && grad_sum[2] <= 2e-2;
    return {pass, "scaling rel err: volume " + fnum(worst[0]) + ", torsion " + fnum(worst[1]) +
                      ", eigenvalue " + fnum(worst[2]) + "; max |sum grad| " +
                      fnum(std::max({grad_sum[0], grad_sum[1], grad_sum[2]}))};
}

std::pair<bool, std::string> criterion_sscc(Context& ctx) {
    std::uniform_real_distribution<double> mass_dist(0.1, 3.0);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    bool ok = true;

    // No 2-pair measure can pass, whatever the masses.
    for (int i = 0; i < 200 && ok; ++i) {
        const EvenMeasure nu = make_even_measure(std::array{0.3, 1.7},
                                                 std::array{mass_dist(ctx.rng), mass_dist(ctx.rng)});
        ok = !check_sscc(nu).pass;
    }
    // Equal split: both pairs sit exactly at half.
    {
        const auto report =
            check_sscc(make_even_measure(std::array{0.0, 1.0}, std::array{1.0, 1.0}));
        ok = ok && !report.pass && report.violations.size() == 2 &&
             report.violations[0].fraction == 0.5;
    }
    // Single pair carries everything.
    ok = ok && !check_sscc(make_even_measure(std::array{0.7}, std::array{2.5})).pass;

    // m >= 3 verdicts: uniform passes, a planted heavy pair fails, the exact
    // half boundary fails (strict), just below passes.
    ok = ok && check_sscc(make_even_measure(std::array{0.1, 1.0, 2.0}, std::array{1.0, 1.0, 1.0})).pass;
    ok = ok && !check_sscc(make_even_measure(std::array{0.1, 1.0, 2.0}, std::array{1.0, 1.0, 2.125})).pass;
    ok = ok && !check_sscc(make_even_measure(std::array{0.1, 1.0, 2.0}, std::array{1.0, 1.0, 2.0})).pass;
    ok = ok && check_sscc(make_even_measure(std::array{0.1, 1.0, 2.0}, std::array{1.0, 1.0, 1.9375})).pass;

    // Scale invariance, including the exact-boundary tie: power-of-two
    // factors rescale every comparison exactly.
    int checked = 0;
    for (int i = 0; i < 60 && ok; ++i) {
        const int m = 1 + int(ctx.rng() % 6);
        std::vector<double> th(m), mass(m);
        for (int j = 0; j < m; ++j) {
            th[j] = angle(ctx.rng);
            mass[j] = mass_dist(ctx.rng);
        }
        EvenMeasure nu;
        try {
            nu = make_even_measure(th, mass);
        } catch (const ValidationError&) {
            continue;  // all-merged corner case
        }
        const bool verdict = check_sscc(nu).pass;
        for (double c : {0.25, 2.0, 1024.0, 0x1p-30}) {
            std::vector<double> scaled(nu.mass);
            for (double& w : scaled) w *= c;
            std::vector<double> sth(nu.pairs.size());
            for (std::size_t j = 0; j < nu.pairs.size(); ++j) sth[j] = nu.pairs[j].theta;
            ok = ok && check_sscc(make_even_measure(sth, scaled)).pass == verdict;
        }
        ++checked;
    }

    return {ok, "2-pair impossibility, boundary ties, and scale invariance on " +
                    std::to_string(checked) + " random measures"};
}

std::pair<bool, std::string> criterion_flow(Context& ctx) {
    FlowSpec torsion_spec;
    torsion_spec.functional = FunctionalDescriptor::make(FunctionalKind::Torsion);
    torsion_spec.death_time = 1.0;
    torsion_spec.weight = discretize_density([](double) { return 0.125; }, 64);
    for (int k = 0; k < 8; ++k) torsion_spec.frame_times.push_back(k / 8.0);
    const FlowSolution torsion_flow = build_self_similar(torsion_spec);
    ctx.traces.emplace_back("torsion flow profile", torsion_flow.profile.gamma_trace);
    const FlowVerification tv = verify_self_similar(torsion_flow);

    FlowSpec volume_spec;
    volume_spec.functional = FunctionalDescriptor::make(FunctionalKind::Volume);
    volume_spec.death_time = 2.0;
    volume_spec.weight = make_even_measure(std::array{0.0, kPi / 3.0, 2.0 * kPi / 3.0},
                                           std::array{2.0, 2.0, 2.0});
    for (int k = 0; k < 8; ++k) volume_spec.frame_times.push_back(0.25 * k);
    const FlowSolution volume_flow = build_self_similar(volume_spec);
    ctx.traces.emplace_back("volume flow profile", volume_flow.profile.gamma_trace);
    const FlowVerification vv = verify_self_similar(volume_flow);

    const bool pass = tv.pass && vv.pass && tv.scale_algebra_error <= 1e-12 &&
                      vv.scale_algebra_error <= 1e-12 && tv.exponent_error <= 2e-2 &&
                      vv.exponent_error <= 1e-9 && tv.recompute_gap <= 1e-14 &&
                      vv.recompute_gap <= 1e-14 && tv.frame_dilation_error <= 1e-12 &&
                      vv.frame_dilation_error <= 1e-12;
    return {pass, "torsion: exponent err " + fnum(tv.exponent_error) + ", scale algebra " +
                      fnum(tv.scale_algebra_error) + "; volume: exponent err " +
                      fnum(vv.exponent_error) + ", dilation " + fnum(vv.frame_dilation_error)};
}

std::pair<bool, std::string> criterion_optimizer_sanity(Context& ctx) {
    bool monotone = true;
    std::size_t trace_points = 0;
    for (const auto& [name, trace] : ctx.traces) {
        trace_points += trace.size();
        for (std::size_t k = 1; k < trace.size(); ++k) monotone = monotone && trace[k] <= trace[k - 1];
    }

    const FunctionalDescriptor F = FunctionalDescriptor::make(FunctionalKind::Volume);
    std::uniform_real_distribution<double> mass_dist(0.2, 2.0);
    double worst_ratio = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SymmetricPolygon B = random_body(ctx.rng, 3, 8, 1.5);
        std::vector<double> th(B.pair_count()), mass(B.pair_count());
        for (std::size_t j = 0; j < B.pair_count(); ++j) {
            th[j] = B.pairs[j].theta;
            mass[j] = mass_dist(ctx.rng);
        }
        const EvenMeasure nu = make_even_measure(th, mass);
        // Random q strictly above B's support vector, so several halfplanes
        // of [q] are loose and the projection genuinely moves q.
        std::uniform_real_distribution<double> lift(1.0, 2.5);
        std::vector<double> raw(B.support);
        for (double& c : raw) c *= lift(ctx.rng);
        const double gamma_raw = gamma_value(nu, F, raw);
        const double gamma_proj = gamma_value(nu, F, wulff_shape(B.pairs, raw).support);
        worst_ratio = std::max(worst_ratio, gamma_proj / gamma_raw);
    }

    const bool pass = monotone && worst_ratio <= 1.0 + 1e-10;
    return {pass, std::to_string(ctx.traces.size()) + " traces (" + std::to_string(trace_points) +
                      " points) nonincreasing; worst projection ratio 1" +
                      (worst_ratio >= 1.0 ? "+" + fnum(worst_ratio - 1.0)
                                          : "-" + fnum(1.0 - worst_ratio))};
}

}  // namespace

bool AcceptanceReport::all_pass() const {
    for (const CriterionResult& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

std::string AcceptanceReport::table() const {
    std::ostringstream os;
    for (const CriterionResult& r : results) {
        os << "criterion " << (r.id < 10 ? " " : "") << r.id << "  "
           << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " -- " << r.detail << "  ["
           << fnum(r.seconds) << "s]\n";
    }
    return os.str();
}

AcceptanceReport run_acceptance(bool include_solves) {
    Context ctx;
    AcceptanceReport rep;

    if (include_solves) {
        rep.results.push_back(run_criterion(1, "volume log-Minkowski exact case",
                                            [&] { return criterion_hexagon(ctx); }));
        rep.results.push_back(run_criterion(2, "torsion log-Minkowski disc recovery", [&] {
            return criterion_disc_recovery(ctx, FunctionalKind::Torsion, kPi / 8.0, "torsion disc");
        }));
        rep.results.push_back(run_criterion(3, "eigenvalue log-Minkowski disc recovery", [&] {
            return criterion_disc_recovery(ctx, FunctionalKind::Eigenvalue,
                                           oracles::disc_eigen(1.0).value, "eigenvalue disc");
        }));
    }
    rep.results.push_back(run_criterion(4, "FEM accuracy against analytic oracles",
                                        [&] { return criterion_fem_accuracy(); }));
    rep.results.push_back(run_criterion(5, "variational representation identity",
                                        [&] { return criterion_representation(ctx); }));
    rep.results.push_back(run_criterion(6, "Hadamard derivative vs finite differences",
                                        [&] { return criterion_hadamard(ctx); }));
    rep.results.push_back(run_criterion(7, "monotonicity and isoperimetric comparisons",
                                        [&] { return criterion_monotonicity(ctx); }));
    rep.results.push_back(run_criterion(8, "homogeneity and gradient sum",
                                        [&] { return criterion_homogeneity(ctx); }));
    rep.results.push_back(run_criterion(9, "subspace concentration verdicts",
                                        [&] { return criterion_sscc(ctx); }));
    rep.results.push_back(run_criterion(10, "self-similar flow checks",
                                        [&] { return criterion_flow(ctx); }));
    rep.results.push_back(run_criterion(11, "optimizer sanity: trace and projection",
                                        [&] { return criterion_optimizer_sanity(ctx); }));
    return rep;
}

}  // namespace logmink
