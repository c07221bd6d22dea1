// Compares the serial reference kernels against the OpenMP build on the
// meshes and solves the library actually produces.  Run manually:
//   build/bench/bench_kernels [mesh_h]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "logmink/fem.hpp"
#include "logmink/geometry.hpp"
#include "logmink/kernels.hpp"
#include "logmink/mesh.hpp"
#include "logmink/parallel.hpp"

using namespace logmink;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        fn();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

void report(const char* op, double serial_ms, double omp_ms, double max_diff) {
    std::printf("%-18s serial %9.3f ms   openmp %9.3f ms   speedup %5.2fx   max|diff| %.3g\n", op,
                serial_ms, omp_ms, serial_ms / omp_ms, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
    const double h = argc > 1 ? std::stod(argv[1]) : 0.02;

    std::vector<DirectionPair> pairs(128);
    std::vector<double> q(128, 1.0);
    for (int j = 0; j < 128; ++j) pairs[j] = {j * kPi / 128.0};
    const SymmetricPolygon gon = wulff_shape(pairs, q);
    const TriangleMesh mesh = triangulate(gon, h);
    std::printf("256-gon at h = %g: %zu points, %zu triangles, %d threads available\n", h,
                mesh.points.size(), mesh.triangles.size(), worker_threads());

    const P1System sys = assemble_p1(mesh);
    const CsrMatrix& K = sys.stiffness;
    std::vector<double> x(K.n), y(K.n);
    for (int i = 0; i < K.n; ++i) x[i] = std::sin(0.1 * i);

    {
        double serial_val = 0.0, omp_val = 0.0;
        const double ts = time_best_of(5, [&] {
            for (int r = 0; r < 200; ++r) serial_val = dot_serial(x, x);
        });
        const double tp = time_best_of(5, [&] {
            for (int r = 0; r < 200; ++r) omp_val = dot_omp(x, x);
        });
        report("dot (x200)", ts, tp, std::abs(serial_val - omp_val));
    }

    {
        std::vector<double> ys(K.n), yp(K.n);
        const double ts = time_best_of(5, [&] {
            for (int r = 0; r < 50; ++r) spmv_serial(K, x, ys);
        });
        const double tp = time_best_of(5, [&] {
            for (int r = 0; r < 50; ++r) spmv_omp(K, x, yp);
        });
        double diff = 0.0;
        for (int i = 0; i < K.n; ++i) diff = std::max(diff, std::abs(ys[i] - yp[i]));
        report("spmv (x50)", ts, tp, diff);
    }

    {
        P1System ss, sp;
        double ts, tp;
        {
            BackendGuard guard(Backend::Serial);
            ts = time_best_of(3, [&] { ss = assemble_p1(mesh); });
        }
        {
            BackendGuard guard(Backend::OpenMP);
            tp = time_best_of(3, [&] { sp = assemble_p1(mesh); });
        }
        double diff = 0.0;
        for (std::size_t i = 0; i < ss.stiffness.val.size(); ++i)
            diff = std::max(diff, std::abs(ss.stiffness.val[i] - sp.stiffness.val[i]));
        report("assembly", ts, tp, diff);
    }

    {
        double tau_s = 0.0, tau_p = 0.0;
        double ts, tp;
        {
            BackendGuard guard(Backend::Serial);
            ts = time_best_of(3, [&] { tau_s = solve_torsion(mesh).functional_value; });
        }
        {
            BackendGuard guard(Backend::OpenMP);
            tp = time_best_of(3, [&] { tau_p = solve_torsion(mesh).functional_value; });
        }
        report("torsion solve", ts, tp, std::abs(tau_s - tau_p));
    }

    return 0;
}
