#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "gspec/kernels.hpp"
#include "gspec/library.hpp"
#include "gspec/oracle.hpp"

using namespace gspec;

namespace {

struct ThreadScope {
  explicit ThreadScope(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadScope() { omp_set_num_threads(saved); }
  int saved;
};

struct ModeScope {
  explicit ModeScope(kernels::Mode m) : saved(kernels::default_mode()) { kernels::set_default_mode(m); }
  ~ModeScope() { kernels::set_default_mode(saved); }
  kernels::Mode saved;
};

}  // namespace

TEST_CASE("fix_rule_stratum: serial and parallel agree") {
  ThreadScope threads(4);
  const FixOracle rules[] = {
      [](const Partition& l) { return Rational(ipow(Integer(2), static_cast<unsigned>(l.length()))); },
      [](const Partition& l) { return Rational(z_of(l)); },
      [](const Partition& l) { return Rational(static_cast<long>(l.largest() * 7 + l.length())); },
      [](const Partition& l) { return library::graph_gcis().identity_component().fix_count(l); },
  };
  for (const auto& rule : rules)
    for (unsigned n = 0; n <= 14; ++n) {
      const auto serial = kernels::fix_rule_stratum_serial(n, rule);
      CHECK(serial.size() == partitions_of(n).size());
      CHECK(kernels::fix_rule_stratum_parallel(n, rule) == serial);
      CHECK(kernels::fix_rule_stratum(n, rule) == serial);
    }
  const auto e = kernels::fix_rule_stratum(6, [](const Partition&) { return Rational(1); });
  const auto ps = partitions_of(6);
  for (std::size_t i = 0; i < ps.size(); ++i) CHECK(e[i] == Rational(1) / Rational(z_of(ps[i])));
}

TEST_CASE("indexed_sum: serial and parallel agree") {
  ThreadScope threads(3);
  const std::function<std::uint64_t(std::size_t)> terms[] = {
      [](std::size_t i) { return static_cast<std::uint64_t>(i); },
      [](std::size_t i) { return static_cast<std::uint64_t>((i * 2654435761u) % 1000); },
      [](std::size_t) { return std::uint64_t{1}; },
  };
  for (const auto& term : terms)
    for (std::size_t count : {0u, 1u, 2u, 17u, 1000u, 100003u}) {
      const auto serial = kernels::indexed_sum_serial(count, term);
      CHECK(kernels::indexed_sum_parallel(count, term) == serial);
      CHECK(kernels::indexed_sum(count, term) == serial);
    }
  CHECK(kernels::indexed_sum_serial(1001, [](std::size_t i) { return std::uint64_t(i); }) == 500500);
}

TEST_CASE("results do not depend on the mode") {
  ThreadScope threads(4);
  std::vector<std::uint64_t> serial_orbits, parallel_orbits;
  std::vector<Stratum> serial_strata, parallel_strata;
  for (auto mode : {kernels::Mode::serial, kernels::Mode::parallel}) {
    ModeScope scope(mode);
    auto& orbits = mode == kernels::Mode::serial ? serial_orbits : parallel_orbits;
    auto& strata = mode == kernels::Mode::serial ? serial_strata : parallel_strata;
    orbits.push_back(oracle::brute_orbit_count(oracle::simple_graphs(true), 5, true));
    orbits.push_back(oracle::brute_orbit_count(oracle::linear_orders(true), 6, true));
    const auto digraphs = library::digraph_gcis();
    for (unsigned n = 0; n <= 6; ++n) strata.push_back(digraphs.identity_component().stratum(n));
  }
  CHECK(serial_orbits == parallel_orbits);
  CHECK(serial_strata == parallel_strata);
  CHECK(kernels::thread_count() >= 1);
}
