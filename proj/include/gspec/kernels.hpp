#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version that
// the tests compare against and an OpenMP version used by default. Both must
// produce identical results; all arithmetic is exact, so there is no
// reduction-order tolerance.

#include <cstddef>
#include <cstdint>
#include <functional>

#include "gspec/cycle_index.hpp"

namespace gspec::kernels {

enum class Mode { serial, parallel };

/// Mode used by the dispatching entry points (parallel unless overridden).
Mode default_mode();
void set_default_mode(Mode mode);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int thread_count();

/// Degree-n stratum whose coefficient at λ is rule(λ) / z_λ, one partition
/// per iteration.
Stratum fix_rule_stratum_serial(unsigned n, const FixOracle& rule);
Stratum fix_rule_stratum_parallel(unsigned n, const FixOracle& rule);
Stratum fix_rule_stratum(unsigned n, const FixOracle& rule);

/// Σ_{i < count} term(i). Used for the brute-force Burnside sums.
std::uint64_t indexed_sum_serial(std::size_t count, const std::function<std::uint64_t(std::size_t)>& term);
std::uint64_t indexed_sum_parallel(std::size_t count, const std::function<std::uint64_t(std::size_t)>& term);
std::uint64_t indexed_sum(std::size_t count, const std::function<std::uint64_t(std::size_t)>& term);

}  // namespace gspec::kernels
