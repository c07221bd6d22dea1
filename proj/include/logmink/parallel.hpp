#pragma once

namespace logmink {

// Which implementation the numeric kernels dispatch to.  OpenMP is the
// default when compiled in; the serial path is kept as a reference for
// testing and benchmarking, not as a fallback of lesser quality.
enum class Backend { Serial, OpenMP };

Backend backend();
void set_backend(Backend b);

// Number of worker threads the OpenMP path will use: the OpenMP default,
// capped by the LOGMINK_THREADS environment variable when set.
int worker_threads();

// RAII helper for tests that need to pin the backend temporarily.
class BackendGuard {
  public:
    explicit BackendGuard(Backend b) : saved_(backend()) { set_backend(b); }
    ~BackendGuard() { set_backend(saved_); }
    BackendGuard(const BackendGuard&) = delete;
    BackendGuard& operator=(const BackendGuard&) = delete;

  private:
    Backend saved_;
};

}  // namespace logmink
