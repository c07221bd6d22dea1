#pragma once

#include <span>
#include <string>
#include <vector>

#include "logmink/fem.hpp"
#include "logmink/geometry.hpp"

namespace logmink {

// Square of the first zero of the Bessel function J0: the principal
// Dirichlet eigenvalue of the unit disc.
inline constexpr double kDiscEigenvalue = 5.783185962946785;

enum class FunctionalKind { Volume, Torsion, Eigenvalue };

FunctionalKind functional_from_name(const std::string& name);
const char* functional_name(FunctionalKind kind);

// A homogeneous set functional together with the data its variational
// structure needs: F(cK) = c^alpha F(K), the value on the unit disc, and the
// mesh resolution for the boundary-value solves.
struct FunctionalDescriptor {
    FunctionalKind kind = FunctionalKind::Volume;
    double alpha = 2.0;
    int sign = 1;  // sgn(alpha)
    double ball_value = 0.0;
    // Target mesh edge length; nonpositive means automatic, 3 percent of the
    // body's half-diameter, which keeps meshes scale-equivariant.
    double fem_h = 0.0;
    FluxMode flux = FluxMode::ConsistentResidual;

    static FunctionalDescriptor make(FunctionalKind kind, double fem_h = 0.0);
};

double resolved_fem_h(const FunctionalDescriptor& F, const SymmetricPolygon& P);

// One full evaluation of the functional on a body: the value, the per-pair
// mass of the associated surface measure (boundary length for volume, edge
// energies of the boundary solve otherwise), and the per-pair variational
// measure V_i = h_i * density_i / |alpha|, whose total reproduces the value.
struct Analysis {
    double value = 0.0;
    std::vector<double> density;
    std::vector<double> variational;
    double mesh_h = 0.0;  // 0 when no mesh was needed
};

Analysis analyze(const FunctionalDescriptor& F, const SymmetricPolygon& P);

double evaluate(const FunctionalDescriptor& F, const SymmetricPolygon& P);
std::vector<double> surface_density(const FunctionalDescriptor& F, const SymmetricPolygon& P);
// The variational measure V_{F,K}: mass h_i rho_i / |alpha| on each direction
// pair of P. Its total equals F(K).
struct VariationalMeasure {
    std::vector<DirectionPair> pairs;
    std::vector<double> mass;
    double total = 0.0;
};

VariationalMeasure variational_measure(const FunctionalDescriptor& F, const SymmetricPolygon& P);

// Derivative of t -> F([h exp(t f)]) at t = 0 for an even perturbation f
// given per pair: alpha * sum_i f_i V_i.
double hadamard_derivative(const FunctionalDescriptor& F, const SymmetricPolygon& P,
                           std::span<const double> f);

}  // namespace logmink
