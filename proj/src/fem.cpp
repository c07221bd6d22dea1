#include "logmink/fem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "logmink/errors.hpp"
#include "logmink/parallel.hpp"

namespace logmink {

namespace {

constexpr double kCgTol = 1e-10;
constexpr double kTorsionGapTol = 1e-2;
constexpr double kRayleighTol = 1e-10;
constexpr double kEigenResidualTol = 1e-8;
constexpr int kEigenMaxIters = 500;

int csr_slot(const CsrMatrix& A, int row, int col) {
    const auto first = A.col.begin() + A.row_ptr[row];
    const auto last = A.col.begin() + A.row_ptr[row + 1];
    const auto it = std::lower_bound(first, last, col);
    return int(it - A.col.begin());
}

std::vector<double> restrict_to(const std::vector<int>& ids, const std::vector<double>& full) {
    std::vector<double> out(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) out[k] = full[ids[k]];
    return out;
}

}  // namespace

P1System assemble_p1(const TriangleMesh& mesh) {
    const int np = int(mesh.points.size());
    const int nt = int(mesh.triangles.size());
    P1System sys;

    // Sparsity pattern: node neighbourhoods including the node itself.
    std::vector<std::vector<int>> adj(np);
    for (int i = 0; i < np; ++i) adj[i].push_back(i);
    for (const auto& t : mesh.triangles)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) adj[t[i]].push_back(t[j]);
    sys.stiffness.n = np;
    sys.stiffness.row_ptr.assign(np + 1, 0);
    for (int i = 0; i < np; ++i) {
        auto& a = adj[i];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        sys.stiffness.row_ptr[i + 1] = sys.stiffness.row_ptr[i] + int(a.size());
    }
    sys.stiffness.col.reserve(sys.stiffness.row_ptr[np]);
    for (int i = 0; i < np; ++i)
        sys.stiffness.col.insert(sys.stiffness.col.end(), adj[i].begin(), adj[i].end());
    sys.stiffness.val.assign(sys.stiffness.col.size(), 0.0);
    sys.mass = sys.stiffness;

    // Pass one: element matrices, one slot per triangle.
    std::vector<std::array<double, 9>> k_loc(nt), m_loc(nt);
    std::vector<double> area(nt);
#pragma omp parallel for schedule(static) num_threads(worker_threads()) \
    if (backend() == Backend::OpenMP)
    for (int ti = 0; ti < nt; ++ti) {
        const auto& t = mesh.triangles[ti];
        const Vec2 p0 = mesh.points[t[0]], p1 = mesh.points[t[1]], p2 = mesh.points[t[2]];
        const std::array<Vec2, 3> e{p2 - p1, p0 - p2, p1 - p0};
        const double two_a = cross(e[2], Vec2{-e[1].x, -e[1].y});
        area[ti] = 0.5 * two_a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                k_loc[ti][3 * i + j] = dot(e[i], e[j]) / (2.0 * two_a);
                m_loc[ti][3 * i + j] = (i == j ? 2.0 : 1.0) * area[ti] / 12.0;
            }
    }

    // Per-node incidence in triangle order, for the ordered gather.
    std::vector<int> inc_ptr(np + 1, 0), inc_tri, inc_loc;
    for (const auto& t : mesh.triangles)
        for (int i = 0; i < 3; ++i) ++inc_ptr[t[i] + 1];
    for (int i = 0; i < np; ++i) inc_ptr[i + 1] += inc_ptr[i];
    inc_tri.resize(inc_ptr[np]);
    inc_loc.resize(inc_ptr[np]);
    {
        std::vector<int> cursor(inc_ptr.begin(), inc_ptr.end() - 1);
        for (int ti = 0; ti < nt; ++ti)
            for (int i = 0; i < 3; ++i) {
                const int v = mesh.triangles[ti][i];
                inc_tri[cursor[v]] = ti;
                inc_loc[cursor[v]] = i;
                ++cursor[v];
            }
    }

    // Pass two: gather rows; accumulation order is fixed by the incidence
    // list, so the result does not depend on the thread count.
    sys.load.assign(np, 0.0);
#pragma omp parallel for schedule(static) num_threads(worker_threads()) \
    if (backend() == Backend::OpenMP)
    for (int i = 0; i < np; ++i) {
        for (int k = inc_ptr[i]; k < inc_ptr[i + 1]; ++k) {
            const int ti = inc_tri[k];
            const int li = inc_loc[k];
            const auto& t = mesh.triangles[ti];
            sys.load[i] += area[ti] / 3.0;
            for (int lj = 0; lj < 3; ++lj) {
                const int slot = csr_slot(sys.stiffness, i, t[lj]);
                sys.stiffness.val[slot] += k_loc[ti][3 * li + lj];
                sys.mass.val[slot] += m_loc[ti][3 * li + lj];
            }
        }
    }

    // Interior restriction.
    sys.interior_index.assign(np, -1);
    for (int i = 0; i < np; ++i)
        if (!mesh.on_boundary[i]) {
            sys.interior_index[i] = int(sys.interior.size());
            sys.interior.push_back(i);
        }
    const int ni = int(sys.interior.size());
    if (ni == 0) throw NumericError("fem: mesh has no interior points");
    sys.stiffness_ii.n = ni;
    sys.stiffness_ii.row_ptr.assign(ni + 1, 0);
    for (int r = 0; r < ni; ++r) {
        const int i = sys.interior[r];
        int count = 0;
        for (int k = sys.stiffness.row_ptr[i]; k < sys.stiffness.row_ptr[i + 1]; ++k)
            if (sys.interior_index[sys.stiffness.col[k]] >= 0) ++count;
        sys.stiffness_ii.row_ptr[r + 1] = sys.stiffness_ii.row_ptr[r] + count;
    }
    sys.stiffness_ii.col.resize(sys.stiffness_ii.row_ptr[ni]);
    sys.stiffness_ii.val.resize(sys.stiffness_ii.row_ptr[ni]);
    for (int r = 0; r < ni; ++r) {
        const int i = sys.interior[r];
        int at = sys.stiffness_ii.row_ptr[r];
        for (int k = sys.stiffness.row_ptr[i]; k < sys.stiffness.row_ptr[i + 1]; ++k) {
            const int c = sys.interior_index[sys.stiffness.col[k]];
            if (c < 0) continue;
            sys.stiffness_ii.col[at] = c;
            sys.stiffness_ii.val[at] = sys.stiffness.val[k];
            ++at;
        }
    }
    return sys;
}

namespace {

// Per-pair edge energies from the constant gradient of the triangle owning
// each boundary segment.
std::vector<double> owning_triangle_energy(const TriangleMesh& mesh,
                                           const std::vector<double>& field) {
    std::map<std::pair<int, int>, int> owner;
    for (const BoundarySegment& s : mesh.boundary)
        owner[std::minmax(s.a, s.b)] = -1;
    for (int ti = 0; ti < int(mesh.triangles.size()); ++ti) {
        const auto& t = mesh.triangles[ti];
        for (int i = 0; i < 3; ++i) {
            const auto it = owner.find(std::minmax(t[i], t[(i + 1) % 3]));
            if (it != owner.end()) it->second = ti;
        }
    }
    std::vector<double> energy(mesh.pair_count, 0.0);
    for (const BoundarySegment& s : mesh.boundary) {
        const int ti = owner.at(std::minmax(s.a, s.b));
        const auto& t = mesh.triangles[ti];
        const Vec2 p0 = mesh.points[t[0]], p1 = mesh.points[t[1]], p2 = mesh.points[t[2]];
        const std::array<Vec2, 3> e{p2 - p1, p0 - p2, p1 - p0};
        const double two_a = cross(e[2], Vec2{-e[1].x, -e[1].y});
        Vec2 grad{0.0, 0.0};
        for (int i = 0; i < 3; ++i)
            grad = grad + (field[t[i]] / two_a) * Vec2{-e[i].y, e[i].x};
        energy[s.pair] += dot(grad, grad) * norm(mesh.points[s.b] - mesh.points[s.a]);
    }
    return energy;
}

// Per-pair edge energies from the residual flux: g carries the discrete
// boundary flux integrals, which divided by the lumped boundary length give
// nodal values of the normal derivative; the square integrates exactly for
// the linear interpolant on each segment.
std::vector<double> residual_flux_energy(const TriangleMesh& mesh, const std::vector<double>& g) {
    std::vector<double> lumped(mesh.points.size(), 0.0);
    for (const BoundarySegment& s : mesh.boundary) {
        const double half = 0.5 * norm(mesh.points[s.b] - mesh.points[s.a]);
        lumped[s.a] += half;
        lumped[s.b] += half;
    }
    std::vector<double> sigma(mesh.points.size(), 0.0);
    for (std::size_t i = 0; i < mesh.points.size(); ++i)
        if (lumped[i] > 0.0) sigma[i] = g[i] / lumped[i];
    std::vector<double> energy(mesh.pair_count, 0.0);
    for (const BoundarySegment& s : mesh.boundary) {
        const double len = norm(mesh.points[s.b] - mesh.points[s.a]);
        const double sa = sigma[s.a], sb = sigma[s.b];
        energy[s.pair] += len * (sa * sa + sa * sb + sb * sb) / 3.0;
    }
    return energy;
}

std::vector<double> edge_energies(const TriangleMesh& mesh, const std::vector<double>& field,
                                  const std::vector<double>& residual, FluxMode mode) {
    return mode == FluxMode::OwningTriangle ? owning_triangle_energy(mesh, field)
                                            : residual_flux_energy(mesh, residual);
}

}  // namespace

BoundarySolution solve_torsion(const TriangleMesh& mesh, FluxMode mode) {
    const P1System sys = assemble_p1(mesh);
    const int np = int(mesh.points.size());

    const std::vector<double> rhs = restrict_to(sys.interior, sys.load);
    std::vector<double> x;
    const CgResult cg = cg_solve(sys.stiffness_ii, rhs, x, kCgTol);

    BoundarySolution sol;
    sol.field.assign(np, 0.0);
    for (std::size_t k = 0; k < sys.interior.size(); ++k) sol.field[sys.interior[k]] = x[k];
    sol.cg_iterations = cg.iterations;
    sol.mesh_h = mesh.max_edge;

    // The load integral and the Dirichlet energy are equal for the exact
    // discrete solution; their gap measures how well CG solved the system.
    std::vector<double> ku(np, 0.0);
    spmv(sys.stiffness, sol.field, ku);
    const double tau_integral = dot(sol.field, sys.load);
    const double tau_energy = dot(sol.field, ku);
    sol.functional_value = tau_integral;
    sol.consistency_gap = std::abs(tau_integral - tau_energy) / tau_integral;
    if (!(tau_integral > 0.0) || sol.consistency_gap > kTorsionGapTol)
        throw AccuracyError("torsion: quadratures disagree by " +
                            std::to_string(sol.consistency_gap) + " (relative)");

    std::vector<double> residual(np, 0.0);
    for (int i = 0; i < np; ++i) residual[i] = ku[i] - sys.load[i];
    sol.edge_energy = edge_energies(mesh, sol.field, residual, mode);
    return sol;
}

BoundarySolution solve_eigenvalue(const TriangleMesh& mesh, FluxMode mode) {
    const P1System sys = assemble_p1(mesh);
    const int np = int(mesh.points.size());
    const int ni = int(sys.interior.size());

    std::vector<double> v(np, 0.0), mv(np, 0.0), kv(np, 0.0), x(ni, 0.0), rhs(ni, 0.0);
    for (int i : sys.interior) v[i] = 1.0;
    auto m_normalize = [&](std::vector<double>& w) {
        spmv(sys.mass, w, mv);
        const double n2 = dot(w, mv);
        if (!(n2 > 0.0)) throw NumericError("eigen: zero iterate");
        const double inv = 1.0 / std::sqrt(n2);
        for (double& c : w) c *= inv;
    };
    m_normalize(v);

    BoundarySolution sol;
    double lambda = 0.0, lambda_prev = 0.0;
    int total_cg = 0;
    bool settled = false;
    for (int it = 0; it < kEigenMaxIters && !settled; ++it) {
        spmv(sys.mass, v, mv);
        for (int k = 0; k < ni; ++k) rhs[k] = mv[sys.interior[k]];
        // Warm start: near convergence the previous inner solution already
        // approximates the next one, since normalizing v cancels the 1/lambda
        // the solve applies.
        const CgResult cg = cg_solve(sys.stiffness_ii, rhs, x, kCgTol);
        total_cg += cg.iterations;

        std::vector<double> w(np, 0.0);
        for (int k = 0; k < ni; ++k) w[sys.interior[k]] = x[k];
        spmv(sys.stiffness, w, kv);
        spmv(sys.mass, w, mv);
        lambda_prev = lambda;
        lambda = dot(w, kv) / dot(w, mv);

        // Interior eigenresidual; boundary rows carry the flux and are not
        // part of the discrete eigenproblem.
        double r2 = 0.0, m2 = 0.0;
        for (int i : sys.interior) {
            const double r = kv[i] - lambda * mv[i];
            r2 += r * r;
            m2 += mv[i] * mv[i];
        }
        const double residual = std::sqrt(r2 / m2);
        settled = it > 0 && std::abs(lambda - lambda_prev) <= kRayleighTol * lambda &&
                  residual <= kEigenResidualTol;
        sol.consistency_gap = residual;

        v = w;
        m_normalize(v);
    }
    if (!settled)
        throw NumericError("eigen: inverse iteration did not settle in " +
                           std::to_string(kEigenMaxIters) + " iterations");

    double mean = 0.0;
    for (double c : v) mean += c;
    if (mean < 0.0)
        for (double& c : v) c = -c;

    sol.field = v;
    sol.functional_value = lambda;
    sol.cg_iterations = total_cg;
    sol.mesh_h = mesh.max_edge;

    spmv(sys.stiffness, v, kv);
    spmv(sys.mass, v, mv);
    std::vector<double> residual(np, 0.0);
    for (int i = 0; i < np; ++i) residual[i] = kv[i] - lambda * mv[i];
    sol.edge_energy = edge_energies(mesh, v, residual, mode);
    return sol;
}

std::vector<double> edge_energies(const BoundarySolution& sol, const SymmetricPolygon& P) {
    if (sol.edge_energy.size() != P.pair_count())
        throw ValidationError("edge_energies: solution does not match the polygon's pair count");
    return sol.edge_energy;
}

}  // namespace logmink
