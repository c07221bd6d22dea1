#include "logmink/functional.hpp"

#include <cmath>

#include "logmink/errors.hpp"
#include "logmink/mesh.hpp"

namespace logmink {

namespace {

constexpr double kAutoMeshFraction = 0.03;  // of the half-diameter

}  // namespace

FunctionalKind functional_from_name(const std::string& name) {
    if (name == "volume") return FunctionalKind::Volume;
    if (name == "torsion") return FunctionalKind::Torsion;
    if (name == "eigenvalue") return FunctionalKind::Eigenvalue;
    throw ValidationError("unknown functional '" + name +
                          "' (expected volume, torsion, or eigenvalue)");
}

const char* functional_name(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::Volume: return "volume";
        case FunctionalKind::Torsion: return "torsion";
        case FunctionalKind::Eigenvalue: return "eigenvalue";
    }
    return "?";
}

FunctionalDescriptor FunctionalDescriptor::make(FunctionalKind kind, double fem_h) {
    FunctionalDescriptor F;
    F.kind = kind;
    F.fem_h = fem_h;
    switch (kind) {
        case FunctionalKind::Volume:
            F.alpha = 2.0;
            F.ball_value = kPi;
            break;
        case FunctionalKind::Torsion:
            F.alpha = 4.0;
            F.ball_value = kPi / 8.0;
            break;
        case FunctionalKind::Eigenvalue:
            F.alpha = -2.0;
            F.ball_value = kDiscEigenvalue;
            break;
    }
    F.sign = F.alpha > 0.0 ? 1 : -1;
    return F;
}

double resolved_fem_h(const FunctionalDescriptor& F, const SymmetricPolygon& P) {
    if (F.fem_h > 0.0) return F.fem_h;
    return kAutoMeshFraction * 0.5 * P.diameter();
}

Analysis analyze(const FunctionalDescriptor& F, const SymmetricPolygon& P) {
    Analysis out;
    if (F.kind == FunctionalKind::Volume) {
        out.value = P.area();
        out.density = surface_area_measure(P);
    } else {
        const TriangleMesh mesh = triangulate(P, resolved_fem_h(F, P));
        const BoundarySolution sol = F.kind == FunctionalKind::Torsion
                                         ? solve_torsion(mesh, F.flux)
                                         : solve_eigenvalue(mesh, F.flux);
        out.value = sol.functional_value;
        out.density = sol.edge_energy;
        out.mesh_h = sol.mesh_h;
    }
    out.variational.resize(P.pair_count());
    const double inv_abs_alpha = 1.0 / std::abs(F.alpha);
    for (std::size_t i = 0; i < P.pair_count(); ++i)
        out.variational[i] = P.support[i] * out.density[i] * inv_abs_alpha;
    return out;
}

double evaluate(const FunctionalDescriptor& F, const SymmetricPolygon& P) {
    if (F.kind == FunctionalKind::Volume) return P.area();
    return analyze(F, P).value;
}

std::vector<double> surface_density(const FunctionalDescriptor& F, const SymmetricPolygon& P) {
    return analyze(F, P).density;
}

VariationalMeasure variational_measure(const FunctionalDescriptor& F, const SymmetricPolygon& P) {
    Analysis a = analyze(F, P);
    VariationalMeasure vm;
    vm.pairs = P.pairs;
    vm.mass = std::move(a.variational);
    vm.total = 0.0;
    for (double v : vm.mass) vm.total += v;
    return vm;
}

double hadamard_derivative(const FunctionalDescriptor& F, const SymmetricPolygon& P,
                           std::span<const double> f) {
    if (f.size() != P.pair_count())
        throw ValidationError("hadamard_derivative: perturbation size mismatch");
    const Analysis a = analyze(F, P);
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * a.variational[i];
    return F.alpha * s;
}

}  // namespace logmink
