// Serial against OpenMP versions of the two kernels.

#include <benchmark/benchmark.h>

#include <numeric>

#include "gspec/kernels.hpp"
#include "gspec/library.hpp"
#include "gspec/oracle.hpp"

using namespace gspec;

namespace {

// Fixed-point rule of simple graphs: the pair-orbit count of a cycle type.
const FixOracle graph_rule = [](const Partition& l) -> Rational {
  const auto& parts = l.parts();
  std::uint64_t orbits = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    orbits += parts[i] / 2;
    for (std::size_t j = i + 1; j < parts.size(); ++j) orbits += std::gcd(parts[i], parts[j]);
  }
  return Rational(ipow(Integer(2), static_cast<unsigned>(orbits)));
};

template <Stratum (*Kernel)(unsigned, const FixOracle&)>
void fix_rule(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  partitions_of(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, graph_rule));
  state.counters["partitions"] = static_cast<double>(partitions_of(n).size());
}

template <std::uint64_t (*Kernel)(std::size_t, const std::function<std::uint64_t(std::size_t)>&)>
void brute_fix(benchmark::State& state) {
  const auto family = oracle::simple_graphs(true);
  const auto n = static_cast<unsigned>(state.range(0));
  const auto structures = family.enumerate(n);
  const auto gamma = parse_element("(1 2)", 2);
  const GroupElement sigma = GroupElement::from_cycles(n, {{1, 2}, {3, 4}});
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(structures->size(), [&](std::size_t i) -> std::uint64_t {
      const auto& s = (*structures)[i];
      return family.gamma_act(gamma, family.relabel(sigma, s)) == s ? 1 : 0;
    }));
  state.counters["structures"] = static_cast<double>(structures->size());
}

}  // namespace

BENCHMARK(fix_rule<kernels::fix_rule_stratum_serial>)->Name("fix_rule_stratum/serial")->Arg(20)->Arg(30)->Arg(40);
BENCHMARK(fix_rule<kernels::fix_rule_stratum_parallel>)->Name("fix_rule_stratum/parallel")->Arg(20)->Arg(30)->Arg(40);
BENCHMARK(brute_fix<kernels::indexed_sum_serial>)->Name("indexed_sum/serial")->Arg(5)->Arg(6);
BENCHMARK(brute_fix<kernels::indexed_sum_parallel>)->Name("indexed_sum/parallel")->Arg(5)->Arg(6);

BENCHMARK_MAIN();
