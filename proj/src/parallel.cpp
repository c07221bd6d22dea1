#include "logmink/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef LOGMINK_HAVE_OPENMP
#include <omp.h>
#endif

namespace logmink {

namespace {

Backend& backend_slot() {
#ifdef LOGMINK_HAVE_OPENMP
    static Backend b = Backend::OpenMP;
#else
    static Backend b = Backend::Serial;
#endif
    return b;
}

}  // namespace

Backend backend() { return backend_slot(); }

void set_backend(Backend b) { backend_slot() = b; }

int worker_threads() {
#ifdef LOGMINK_HAVE_OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("LOGMINK_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return std::max(n, 1);
}

}  // namespace logmink
