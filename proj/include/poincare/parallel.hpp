#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace poincare {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work is claimed
/// dynamically; callers write results into pre-sized slots so output order
/// never depends on scheduling. The first exception is rethrown after join.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

enum class Phase : std::size_t { Sampling, Solves, Interpolation, Crt, Certify, Count };

inline const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Sampling: return "sampling";
    case Phase::Solves: return "solves";
    case Phase::Interpolation: return "interpolation";
    case Phase::Crt: return "crt";
    case Phase::Certify: return "certify";
    case Phase::Count: break;
  }
  return "?";
}

/// Accumulated per-phase time in nanoseconds. Thread-safe; phases that run on
/// several workers add up their task times.
class PhaseTimes {
public:
  void add(Phase p, std::chrono::nanoseconds d) noexcept {
    ns_[static_cast<std::size_t>(p)].fetch_add(d.count(), std::memory_order_relaxed);
  }

  [[nodiscard]] double seconds(Phase p) const noexcept {
    return static_cast<double>(ns_[static_cast<std::size_t>(p)].load()) * 1e-9;
  }

private:
  std::atomic<std::int64_t> ns_[static_cast<std::size_t>(Phase::Count)]{};
};

/// Adds the lifetime of the scope to a phase; no-op when `times` is null.
class ScopedPhase {
public:
  ScopedPhase(PhaseTimes* times, Phase phase) : times_(times), phase_(phase) {
    if (times_) start_ = std::chrono::steady_clock::now();
  }
  ~ScopedPhase() {
    if (times_) times_->add(phase_, std::chrono::steady_clock::now() - start_);
  }
  ScopedPhase(const ScopedPhase&) = delete;
  ScopedPhase& operator=(const ScopedPhase&) = delete;

private:
  PhaseTimes* times_;
  Phase phase_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace poincare
