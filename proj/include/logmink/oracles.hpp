#pragma once

#include <string>
#include <vector>

// Reference values computed independently of the production numerics: no
// geometry, mesh, FEM, or solver code is used here, only elementary
// arithmetic and the standard library.  Errors are reported with standard
// exception types for the same reason.

namespace logmink::oracles {

struct OracleValue {
    std::string name;
    double value = 0.0;
    std::string method;  // closed-form | series | special-function-root | grid-search
};

// Torsional rigidity of the disc of radius R: pi R^4 / 8 from u = (R^2-r^2)/4.
OracleValue disc_torsion(double R);

// Boundary gradient magnitude of the disc torsion function: R / 2.
OracleValue disc_torsion_boundary_gradient(double R);

// Torsional rigidity of the square of side a: the classical double sine
// series, summed until the terms drop below 1e-14 relative.
OracleValue square_torsion(double a);

// Principal Dirichlet eigenvalue of the a x b rectangle (full side lengths):
// pi^2 (1/a^2 + 1/b^2).
OracleValue rect_eigen(double a, double b);

// First positive root of the Bessel function J0, by bisection of the power
// series on [2, 3] to 1e-12.
OracleValue bessel_j01();

// Principal Dirichlet eigenvalue of the disc of radius R: (j01 / R)^2.
OracleValue disc_eigen(double R);

// Direct minimization of the volume log-Minkowski objective for a small even
// measure (at most 4 direction pairs): grid search over support vectors in
// log coordinates on the geometric-mean-one slice, refined to 1e-4 per
// coordinate, with areas from an independent halfplane clipper.  The
// returned supports belong to the optimal body rescaled so its area equals
// the measure's total mass.
struct BruteForceSolution {
    std::vector<double> thetas;
    std::vector<double> supports;
    double objective_phi = 0.0;  // sum nu_i log h_i at the rescaled body
    double gamma = 0.0;          // scale-free objective at the minimizer
};

BruteForceSolution brute_force_volume_logmink(const std::vector<double>& thetas,
                                              const std::vector<double>& masses);

}  // namespace logmink::oracles
