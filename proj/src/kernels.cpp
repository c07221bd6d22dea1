#include "logmink/kernels.hpp"

#include <cmath>
#include <string>

#include "logmink/errors.hpp"
#include "logmink/parallel.hpp"

#ifdef LOGMINK_HAVE_OPENMP
#include <omp.h>
#endif

namespace logmink {

double dot_serial(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double dot_omp(std::span<const double> a, std::span<const double> b) {
#ifdef LOGMINK_HAVE_OPENMP
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
    const int threads = worker_threads();
    std::vector<double> partial(threads, 0.0);
#pragma omp parallel num_threads(threads)
    {
        double s = 0.0;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) s += a[i] * b[i];
        partial[omp_get_thread_num()] = s;
    }
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
#else
    return dot_serial(a, b);
#endif
}

double dot(std::span<const double> a, std::span<const double> b) {
    return backend() == Backend::OpenMP ? dot_omp(a, b) : dot_serial(a, b);
}

void spmv_serial(const CsrMatrix& A, std::span<const double> x, std::span<double> y) {
    for (int i = 0; i < A.n; ++i) {
        double s = 0.0;
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) s += A.val[k] * x[A.col[k]];
        y[i] = s;
    }
}

void spmv_omp(const CsrMatrix& A, std::span<const double> x, std::span<double> y) {
#ifdef LOGMINK_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_threads())
    for (int i = 0; i < A.n; ++i) {
        double s = 0.0;
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) s += A.val[k] * x[A.col[k]];
        y[i] = s;
    }
#else
    spmv_serial(A, x, y);
#endif
}

void spmv(const CsrMatrix& A, std::span<const double> x, std::span<double> y) {
    if (backend() == Backend::OpenMP)
        spmv_omp(A, x, y);
    else
        spmv_serial(A, x, y);
}

CgResult cg_solve(const CsrMatrix& A, std::span<const double> b, std::vector<double>& x,
                  double rel_tol, int max_iter) {
    const int n = A.n;
    if (static_cast<int>(x.size()) != n) x.assign(n, 0.0);
    if (max_iter <= 0) max_iter = static_cast<int>(50.0 * std::sqrt(double(n))) + 1000;

    std::vector<double> inv_diag(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
            if (A.col[k] == i) {
                inv_diag[i] = 1.0 / A.val[k];
                break;
            }
        }
        if (inv_diag[i] == 0.0) throw NumericError("cg: zero diagonal at row " + std::to_string(i));
    }

    std::vector<double> r(n), z(n), p(n), Ap(n);
    spmv(A, x, Ap);
    for (int i = 0; i < n; ++i) r[i] = b[i] - Ap[i];

    const double b_norm = std::sqrt(dot(b, b));
    CgResult res;
    if (b_norm == 0.0) {
        x.assign(n, 0.0);
        res.converged = true;
        return res;
    }

    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z);
    double r_norm = std::sqrt(dot(r, r));

    while (res.iterations < max_iter && r_norm > rel_tol * b_norm) {
        spmv(A, p, Ap);
        const double pAp = dot(p, Ap);
        if (!(pAp > 0.0)) throw NumericError("cg: matrix not positive definite");
        const double alpha = rz / pAp;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * Ap[i];
        }
        for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        r_norm = std::sqrt(dot(r, r));
        ++res.iterations;
    }

    res.rel_residual = r_norm / b_norm;
    res.converged = r_norm <= rel_tol * b_norm;
    if (!res.converged)
        throw NumericError("cg: no convergence after " + std::to_string(res.iterations) +
                           " iterations (relative residual " + std::to_string(res.rel_residual) + ")");
    return res;
}

}  // namespace logmink
