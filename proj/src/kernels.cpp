#include "gspec/kernels.hpp"

#include <atomic>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gspec::kernels {

namespace {
std::atomic<Mode> g_mode{Mode::parallel};

// Exceptions must not escape an OpenMP region; the first one is kept and
// rethrown after the loop.
class FirstError {
 public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};
}  // namespace

Mode default_mode() { return g_mode.load(); }
void set_default_mode(Mode mode) { g_mode.store(mode); }

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Stratum fix_rule_stratum_serial(unsigned n, const FixOracle& rule) {
  const auto& parts = PartitionTable::of(n);
  Stratum out(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) out[j] = rule(parts[j]) / Rational(z_of(parts[j]));
  return out;
}

Stratum fix_rule_stratum_parallel(unsigned n, const FixOracle& rule) {
  const auto& parts = PartitionTable::of(n);
  const auto count = static_cast<std::ptrdiff_t>(parts.size());
  Stratum out(parts.size());
  FirstError error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    try {
      out[j] = rule(parts[j]) / Rational(z_of(parts[j]));
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return out;
}

Stratum fix_rule_stratum(unsigned n, const FixOracle& rule) {
  return default_mode() == Mode::parallel ? fix_rule_stratum_parallel(n, rule) : fix_rule_stratum_serial(n, rule);
}

std::uint64_t indexed_sum_serial(std::size_t count, const std::function<std::uint64_t(std::size_t)>& term) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += term(i);
  return total;
}

std::uint64_t indexed_sum_parallel(std::size_t count, const std::function<std::uint64_t(std::size_t)>& term) {
  std::uint64_t total = 0;
  const auto n = static_cast<std::ptrdiff_t>(count);
  FirstError error;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      total += term(static_cast<std::size_t>(i));
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return total;
}

std::uint64_t indexed_sum(std::size_t count, const std::function<std::uint64_t(std::size_t)>& term) {
  return default_mode() == Mode::parallel ? indexed_sum_parallel(count, term) : indexed_sum_serial(count, term);
}

}  // namespace gspec::kernels
