#pragma once

#include <vector>

#include "logmink/kernels.hpp"
#include "logmink/mesh.hpp"

namespace logmink {

// How the squared boundary gradient entering the per-facet edge energies is
// recovered from the discrete solution.
enum class FluxMode {
    // Variationally consistent recovery: the nodal boundary flux is read off
    // the discrete residual (K u - b, or K v - lambda M v), divided by the
    // lumped boundary length around each node, and squared per segment with
    // the exact rule for linear functions.  Converges at the same rate as
    // the field itself.
    ConsistentResidual,
    // Constant gradient of the triangle owning each boundary segment,
    // squared and weighted by segment length.  First-order only; kept as the
    // reference the consistent recovery is compared against.
    OwningTriangle,
};

struct BoundarySolution {
    std::vector<double> field;        // nodal values, zero on the boundary
    double functional_value = 0.0;    // torsion integral, or the eigenvalue
    std::vector<double> edge_energy;  // per pair: integral of |grad|^2 over both facet edges
    double mesh_h = 0.0;
    double consistency_gap = 0.0;     // torsion: quadrature gap; eigen: residual norm
    int cg_iterations = 0;
};

// P1 system on all mesh nodes plus the interior restriction used for the
// Dirichlet solves.
struct P1System {
    CsrMatrix stiffness;
    CsrMatrix mass;
    std::vector<double> load;              // integral of each hat function
    std::vector<int> interior;             // node ids of interior points
    std::vector<int> interior_index;       // node -> slot in `interior`, -1 on boundary
    CsrMatrix stiffness_ii;                // interior rows and columns only
};

// Deterministic two-pass assembly: element matrices per triangle, then a
// per-row gather in triangle order.  Both passes parallelize cleanly.
P1System assemble_p1(const TriangleMesh& mesh);

// -Laplace u = 1 with u = 0 on the boundary; functional_value is the
// integral of u.  The same number is recomputed as the Dirichlet energy
// u' K u; a gap above 1 percent throws AccuracyError.
BoundarySolution solve_torsion(const TriangleMesh& mesh,
                               FluxMode mode = FluxMode::ConsistentResidual);

// Principal Dirichlet eigenvalue by inverse power iteration with
// warm-started CG inner solves.  Stops when the Rayleigh quotient settles to
// 1e-10 relative and the interior eigenresidual |K v - lambda M v| drops
// below 1e-8 of |M v|; the field is L2-normalized and nonnegative.
BoundarySolution solve_eigenvalue(const TriangleMesh& mesh,
                                  FluxMode mode = FluxMode::ConsistentResidual);

// Per-pair boundary gradient energies of a solution on P, one entry per
// direction pair covering both facet edges of the pair.
std::vector<double> edge_energies(const BoundarySolution& sol, const SymmetricPolygon& P);

}  // namespace logmink
