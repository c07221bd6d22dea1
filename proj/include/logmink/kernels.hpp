#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace logmink {

// Compressed sparse row matrix with sorted column indices per row.
struct CsrMatrix {
    int n = 0;  // square
    std::vector<int> row_ptr;  // size n+1
    std::vector<int> col;
    std::vector<double> val;

    std::size_t nonzeros() const { return col.size(); }
};

// Each kernel has a serial reference and an OpenMP variant; the unsuffixed
// entry point dispatches on backend().  Both variants are bitwise
// deterministic for a fixed thread count: spmv parallelizes over rows (each
// row's accumulation order is fixed by the CSR layout) and dot uses a
// per-thread blocked reduction combined in thread order.

double dot_serial(std::span<const double> a, std::span<const double> b);
double dot_omp(std::span<const double> a, std::span<const double> b);
double dot(std::span<const double> a, std::span<const double> b);

// y = A x
void spmv_serial(const CsrMatrix& A, std::span<const double> x, std::span<double> y);
void spmv_omp(const CsrMatrix& A, std::span<const double> x, std::span<double> y);
void spmv(const CsrMatrix& A, std::span<const double> x, std::span<double> y);

struct CgResult {
    int iterations = 0;
    double rel_residual = 0.0;  // ||b - A x||_2 / ||b||_2 at exit
    bool converged = false;
};

// Jacobi-preconditioned conjugate gradients for symmetric positive definite
// A.  x holds the initial guess on entry and the solution on exit.  The
// iteration cap defaults to 50 sqrt(n) + 1000 when max_iter <= 0.
CgResult cg_solve(const CsrMatrix& A, std::span<const double> b, std::vector<double>& x,
                  double rel_tol = 1e-10, int max_iter = -1);

}  // namespace logmink
