#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "logmink/errors.hpp"
#include "logmink/kernels.hpp"
#include "logmink/parallel.hpp"

using namespace logmink;

namespace {

// 1D Dirichlet Laplacian: tridiagonal (-1, 2, -1), symmetric positive
// definite.
CsrMatrix tridiag(int n) {
    CsrMatrix A;
    A.n = n;
    A.row_ptr.push_back(0);
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            A.col.push_back(i - 1);
            A.val.push_back(-1.0);
        }
        A.col.push_back(i);
        A.val.push_back(2.0);
        if (i + 1 < n) {
            A.col.push_back(i + 1);
            A.val.push_back(-1.0);
        }
        A.row_ptr.push_back(int(A.col.size()));
    }
    return A;
}

std::vector<double> random_vector(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("serial and openmp kernels agree bitwise") {
    std::mt19937_64 rng(1234);
    const int n = 517;
    CsrMatrix A = tridiag(n);
    std::vector<double> x = random_vector(rng, n);
    std::vector<double> y = random_vector(rng, n);

    CHECK(dot_serial(x, y) == dot_omp(x, y));

    std::vector<double> ys(n), yo(n);
    spmv_serial(A, x, ys);
    spmv_omp(A, x, yo);
    for (int i = 0; i < n; ++i) CHECK(ys[i] == yo[i]);

    {
        BackendGuard g(Backend::Serial);
        CHECK(dot(x, y) == dot_serial(x, y));
        std::vector<double> yd(n);
        spmv(A, x, yd);
        for (int i = 0; i < n; ++i) CHECK(yd[i] == ys[i]);
    }
    {
        BackendGuard g(Backend::OpenMP);
        CHECK(dot(x, y) == dot_omp(x, y));
    }
}

TEST_CASE("cg solves a tridiagonal system to the requested residual") {
    const int n = 200;
    CsrMatrix A = tridiag(n);
    // Right-hand side of all ones: u(t) = t (1 - t) / 2 on the grid.
    std::vector<double> b(n, 1.0);
    std::vector<double> x(n, 0.0);
    CgResult r = cg_solve(A, b, x, 1e-12);
    CHECK(r.converged);
    CHECK(r.rel_residual <= 1e-12);
    CHECK(r.iterations >= 1);
    const double h = 1.0 / (n + 1);
    for (int i = 0; i < n; ++i) {
        const double t = (i + 1) * h;
        // Scaled: A is h^-2-free, so the solution is t (1 - t) / (2 h^2).
        CHECK(x[i] == doctest::Approx(0.5 * t * (1.0 - t) / (h * h)).epsilon(1e-8));
    }
}

TEST_CASE("cg result is backend independent bitwise") {
    const int n = 313;
    CsrMatrix A = tridiag(n);
    std::mt19937_64 rng(9);
    std::vector<double> b = random_vector(rng, n);
    std::vector<double> xs(n, 0.0), xo(n, 0.0);
    CgResult rs, ro;
    {
        BackendGuard g(Backend::Serial);
        rs = cg_solve(A, b, xs);
    }
    {
        BackendGuard g(Backend::OpenMP);
        ro = cg_solve(A, b, xo);
    }
    CHECK(rs.iterations == ro.iterations);
    for (int i = 0; i < n; ++i) CHECK(xs[i] == xo[i]);
}

TEST_CASE("cg rejects unusable matrices") {
    CsrMatrix Z;  // zero diagonal
    Z.n = 2;
    Z.row_ptr = {0, 1, 2};
    Z.col = {1, 0};
    Z.val = {1.0, 1.0};
    std::vector<double> b{1.0, 1.0};
    std::vector<double> x(2, 0.0);
    CHECK_THROWS_AS(cg_solve(Z, b, x), NumericError);

    CsrMatrix D;  // indefinite diagonal
    D.n = 2;
    D.row_ptr = {0, 1, 2};
    D.col = {0, 1};
    D.val = {1.0, -1.0};
    std::vector<double> x2(2, 0.0);
    CHECK_THROWS_AS(cg_solve(D, b, x2), NumericError);
}

TEST_CASE("cg reports nonconvergence at a tiny iteration cap") {
    const int n = 400;
    CsrMatrix A = tridiag(n);
    std::vector<double> b(n, 1.0);
    std::vector<double> x(n, 0.0);
    CHECK_THROWS_AS(cg_solve(A, b, x, 1e-14, 2), NumericError);
}
