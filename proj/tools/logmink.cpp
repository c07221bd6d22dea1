#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logmink/errors.hpp"
#include "logmink/flow.hpp"
#include "logmink/functional.hpp"
#include "logmink/io.hpp"
#include "logmink/measure.hpp"
#include "logmink/parallel.hpp"
#include "logmink/selftest.hpp"
#include "logmink/solver.hpp"
#include "logmink/svg.hpp"

namespace {

// Exit codes: 0 success, 1 I/O or validation failure, 2 solver
// nonconvergence (the result file is still written), 3 subspace
// concentration refusal.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNonconvergence = 2;
constexpr int kExitConcentration = 3;

std::string defaults_text() {
    const logmink::SolveOptions opts;
    std::string s = "Defaults:\n";
    s += "  mesh-h       0 (automatic: 3% of the body's half-diameter)\n";
    s += "  tol-grad     " + std::to_string(opts.tol_grad) + "\n";
    s += "  max-iters    " + std::to_string(opts.max_iters) + "\n";
    s += "  initial backtracking step " + std::to_string(opts.initial_step) + "\n";
    s += "  min support floor (relative) " + std::to_string(opts.min_support) + "\n";
    s += "  flow density discretization: 64 direction pairs\n";
    s += "Environment:\n";
    s += "  LOGMINK_THREADS caps worker threads (default: machine parallelism)\n";
    return s;
}

std::string frame_name(std::size_t k, const char* ext) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%03zu.%s", k, ext);
    return buf;
}

int run_solve(const std::string& functional, const std::string& measure_path,
              const std::string& out_path, double mesh_h, double tol_grad, int max_iters,
              const std::string& svg_path) {
    const logmink::EvenMeasure nu = logmink::load_measure(measure_path);
    const logmink::FunctionalDescriptor F =
        logmink::FunctionalDescriptor::make(logmink::functional_from_name(functional));
    logmink::SolveOptions opts;
    opts.fem_h = mesh_h;
    opts.tol_grad = tol_grad;
    opts.max_iters = max_iters;

    const logmink::SolveResult result = logmink::solve_log_minkowski(nu, F, opts);
    logmink::save_solve_result(result, out_path);
    if (!svg_path.empty()) logmink::emit_svg(result, svg_path);

    std::cout << "functional " << functional << ": " << result.iterations << " iterations, F = "
              << result.f_value << ", residual_linf = " << result.residual_linf << "\n";
    if (!result.converged()) {
        std::cerr << "solver did not converge: " << result.message << "\n";
        return kExitNonconvergence;
    }
    return kExitOk;
}

int run_check_measure(const std::string& path) {
    const logmink::EvenMeasure nu = logmink::load_measure(path);
    const logmink::SsccReport report = logmink::check_sscc(nu);
    std::cout << report.text() << "\n";
    return report.pass ? kExitOk : kExitConcentration;
}

int run_eval(const std::string& polygon_path, const std::string& functional, double mesh_h) {
    const logmink::SymmetricPolygon P = logmink::load_polygon(polygon_path);
    const logmink::FunctionalDescriptor F = logmink::FunctionalDescriptor::make(
        logmink::functional_from_name(functional), mesh_h);
    const logmink::Analysis a = logmink::analyze(F, P);

    nlohmann::ordered_json j;
    j["functional"] = functional;
    j["alpha"] = F.alpha;
    j["F_value"] = a.value;
    j["mesh_h"] = a.mesh_h;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < P.pair_count(); ++i)
        table.push_back({{"theta", P.pairs[i].theta},
                         {"support", P.support[i]},
                         {"surface_density", a.density[i]},
                         {"V_mass", a.variational[i]}});
    j["table"] = std::move(table);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_flow(const std::string& functional, const std::string& measure_path, double death_time,
             int frames, const std::string& out_dir, bool svg) {
    logmink::FlowSpec spec;
    spec.functional =
        logmink::FunctionalDescriptor::make(logmink::functional_from_name(functional));
    spec.death_time = death_time;
    spec.weight = logmink::load_measure(measure_path);
    if (frames < 1) throw logmink::ValidationError("flow: --frames must be at least 1");
    for (int k = 0; k < frames; ++k)
        spec.frame_times.push_back(death_time * double(k) / double(frames));

    const logmink::FlowSolution sol = logmink::build_self_similar(spec);
    const std::string dir = out_dir + "/";
    logmink::save_frames_csv(sol, dir + "frames.csv");
    logmink::save_solve_result(sol.profile, dir + "profile.json");
    for (std::size_t k = 0; k < sol.frames.size(); ++k) {
        logmink::save_polygon(sol.frames[k].body, dir + frame_name(k, "json"));
        if (svg) logmink::emit_svg(sol.frames[k].body, dir + frame_name(k, "svg"));
    }
    if (svg) logmink::emit_svg(sol.frames, dir + "flow.svg");

    const logmink::FlowVerification ver = logmink::verify_self_similar(sol);
    logmink::write_text_file(dir + "verification.txt", ver.text() + "\n");
    std::cout << ver.text() << "\n";

    if (!sol.profile.converged()) {
        std::cerr << "profile solve did not converge: " << sol.profile.message << "\n";
        return kExitNonconvergence;
    }
    return kExitOk;
}

int run_selftest(bool full) {
    const logmink::AcceptanceReport report = logmink::run_acceptance(full);
    std::cout << report.table();
    std::cout << (report.all_pass() ? "all criteria passed\n" : "FAILURES present\n");
    return report.all_pass() ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Even log-Minkowski problems in the plane: solver, functional "
                 "evaluation, and self-similar shrinking flows"};
    app.require_subcommand(1);
    app.footer(defaults_text());
    app.failure_message(
        [](const CLI::App*, const CLI::Error& e) { return std::string(e.what()) + "\n"; });

    std::string functional = "volume";
    std::string measure_path, out_path, svg_path, polygon_path, out_dir;
    double mesh_h = 0.0;
    logmink::SolveOptions default_opts;
    double tol_grad = default_opts.tol_grad;
    int max_iters = default_opts.max_iters;
    double death_time = 1.0;
    int frames = 8;
    bool flow_svg = false;
    bool full = false;

    CLI::App* solve = app.add_subcommand("solve", "Solve V_F,K = nu for an even measure nu");
    solve->add_option("--functional", functional, "volume | torsion | eigenvalue")
        ->required()
        ->check(CLI::IsMember({"volume", "torsion", "eigenvalue"}));
    solve->add_option("--measure", measure_path, "measure JSON file")->required();
    solve->add_option("--out", out_path, "result JSON file")->required();
    solve->add_option("--mesh-h", mesh_h, "target FEM edge length (0 = automatic)");
    solve->add_option("--tol-grad", tol_grad, "gradient sup-norm stopping tolerance");
    solve->add_option("--max-iters", max_iters, "iteration cap");
    solve->add_option("--svg", svg_path, "also draw the solution to this SVG file");

    CLI::App* check = app.add_subcommand("check-measure",
                                         "Report the strict subspace concentration verdict");
    check->add_option("file", measure_path, "measure JSON file")->required();

    CLI::App* eval = app.add_subcommand("eval", "Evaluate a functional on a polygon file");
    eval->add_option("--polygon", polygon_path, "polygon JSON file")->required();
    eval->add_option("--functional", functional, "volume | torsion | eigenvalue")
        ->required()
        ->check(CLI::IsMember({"volume", "torsion", "eigenvalue"}));
    eval->add_option("--mesh-h", mesh_h, "target FEM edge length (0 = automatic)");

    CLI::App* flow = app.add_subcommand("flow", "Generate and verify a self-similar "
                                                "shrinking flow from its speed measure");
    flow->add_option("--functional", functional, "volume | torsion")
        ->required()
        ->check(CLI::IsMember({"volume", "torsion"}));
    flow->add_option("--measure", measure_path, "speed measure JSON file")->required();
    flow->add_option("--death-time", death_time, "extinction time T > 0")->required();
    flow->add_option("--frames", frames, "number of frames in [0, T)")->required();
    flow->add_option("--out-dir", out_dir, "output directory (must exist)")->required();
    flow->add_flag("--svg", flow_svg, "also draw each frame and the overlay");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the oracle-backed invariant suite");
    selftest->add_flag("--full", full, "include the three scripted solve reproductions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (solve->parsed())
            return run_solve(functional, measure_path, out_path, mesh_h, tol_grad, max_iters,
                             svg_path);
        if (check->parsed()) return run_check_measure(measure_path);
        if (eval->parsed()) return run_eval(polygon_path, functional, mesh_h);
        if (flow->parsed())
            return run_flow(functional, measure_path, death_time, frames, out_dir, flow_svg);
        if (selftest->parsed()) return run_selftest(full);
    } catch (const logmink::SubspaceConcentrationError& e) {
        std::cerr << e.what() << "\n";
        return kExitConcentration;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
