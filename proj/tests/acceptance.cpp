// Acceptance run: one PASS/FAIL line per criterion. Arguments select
// criteria by number; no arguments runs all of them.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gspec/gamma_cis.hpp"
#include "gspec/library.hpp"
#include "gspec/number_theory.hpp"
#include "gspec/oracle.hpp"

using namespace gspec;
namespace lib = gspec::library;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    if (detail.size() > 400) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0: no runtime target
  std::function<Outcome()> run;
};

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Rational> cli_values(std::vector<std::string> args) {
  args.insert(args.begin(), "gspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != cli::ok) return {};
  std::vector<Rational> values;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) values.push_back(parse_rational(line.substr(line.rfind('\t') + 1)));
  return values;
}

void expect_sequence(Outcome& o, const std::string& what, const std::vector<Rational>& got,
                     const std::vector<Rational>& want) {
  o.expect(got == want, what + " gave " + join(got));
}

bool same_strata(const CycleIndexSeries& f, const CycleIndexSeries& g, unsigned max_degree) {
  for (unsigned n = 0; n <= max_degree; ++n)
    if (f.stratum(n) != g.stratum(n)) return false;
  return true;
}

const GroupElement& tau() {
  static const GroupElement t = parse_element("(1 2)", 2);
  return t;
}

Outcome digraph_conversity() {
  Outcome o;
  const auto want = ints({1, 1, 3, 13, 144, 5158, 778084});
  expect_sequence(o, "example digraph-conversity", cli_values({"example", "digraph-conversity"}), want);
  return o;
}

Outcome binary_trees() {
  Outcome o;
  const auto want = ints({1, 1, 1, 3, 7, 22, 66, 217, 715, 2438});
  expect_sequence(o, "quotient isotype", isotype_ogf(quotient(lib::binary_trees_with_reversal())).coefficients(10), want);
  expect_sequence(o, "example binary-tree-reversal", cli_values({"example", "binary-tree-reversal"}), want);
  return o;
}

Outcome leaf_multilabeled_trees() {
  Outcome o;
  const auto total = expand_symmetric(lib::binary_leaf_trees(), 4, 8).total(8);
  o.expect(total == 366680, "degree-8 total " + to_string(total));
  expect_sequence(o, "example rblt", cli_values({"example", "rblt"}), ints({366680}));
  return o;
}

Outcome reversal_formulas() {
  Outcome o;
  const auto linear_series = lib::linear_with_reversal();
  const auto cyclic_series = lib::cyclic_with_reversal();
  const auto& lt = linear_series.component(tau());
  const auto& ct = cyclic_series.component(tau());
  for (unsigned n = 0; n <= 9; ++n)
    for (const auto& l : partitions_of(n)) {
      const unsigned ones = l.multiplicity(1);
      const bool twos_and_ones = l.multiplicity(2) + ones == l.length();
      // linear: Σ_k p_2^k + p_1 Σ_k p_2^k
      const Rational linear = twos_and_ones && ones == n % 2 ? 1 : 0;
      // cyclic: p_1 + Σ_{k≥1} ½(p_2^k + p_2^{k-1} p_1^2) + Σ_{k≥1} p_2^k p_1
      Rational cyclic = 0;
      if (n > 0 && twos_and_ones) {
        if (n % 2 == 1 && ones == 1) cyclic = 1;
        if (n % 2 == 0 && (ones == 0 || ones == 2)) cyclic = Rational(1, 2);
      }
      o.expect(lt.coefficient(l) == linear, "linear τ at " + l.to_string() + " is " + to_string(lt.coefficient(l)));
      o.expect(ct.coefficient(l) == cyclic, "cyclic τ at " + l.to_string() + " is " + to_string(ct.coefficient(l)));
    }
  o.expect(ct.coefficient(Partition{2, 1, 1}) == Rational(1, 2), "cyclic τ at [2,1,1]");
  return o;
}

Outcome paths_and_polygons() {
  Outcome o;
  const auto paths = quotient(lib::linear_with_reversal());
  const auto polygons = quotient(lib::cyclic_with_reversal());
  std::vector<Rational> path_labeled, polygon_labeled;
  for (unsigned n = 0; n <= 6; ++n) {
    path_labeled.push_back(labeled_count(paths, n));
    polygon_labeled.push_back(labeled_count(polygons, n));
  }
  expect_sequence(o, "paths labeled", path_labeled, ints({1, 1, 1, 3, 12, 60, 360}));
  expect_sequence(o, "polygons labeled", polygon_labeled, ints({0, 1, 1, 1, 3, 12, 60}));
  expect_sequence(o, "paths isotype", isotype_ogf(paths).coefficients(7), ints({1, 1, 1, 1, 1, 1, 1}));
  expect_sequence(o, "polygons isotype", isotype_ogf(polygons).coefficients(7), ints({0, 1, 1, 1, 1, 1, 1}));
  return o;
}

Outcome self_complementary_graphs() {
  Outcome o;
  const auto series = gamma_isotype_ogf(lib::graph_gcis(), tau());
  const auto graphs = oracle::simple_graphs(true);
  std::vector<Rational> from_series, from_enumeration;
  for (unsigned n = 1; n <= 5; ++n) {
    from_series.push_back(series.coefficient(n));
    // isomorphism classes mapped to themselves by complementation
    from_enumeration.emplace_back(
        static_cast<long>(oracle::brute_partial_label_count(graphs, n, {n}, tau())));
  }
  expect_sequence(o, "series", from_series, ints({1, 0, 0, 1, 2}));
  expect_sequence(o, "enumeration", from_enumeration, ints({1, 0, 0, 1, 2}));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& pairing : oracle::builtin_pairings()) {
    const auto report = oracle::cross_check(pairing, 6, true);
    o.expect(report.max_n == 6, pairing.name + " only checked to n=" + std::to_string(report.max_n));
    o.expect(report.ok(), pairing.name + ": " + (report.ok() ? "" : report.mismatches.front()));
  }
  return o;
}

Outcome algebraic_laws() {
  Outcome o;
  const unsigned top = 8;
  const auto x = lib::singleton(), e = lib::set_species(), c = lib::cyclic(), l = lib::linear();
  for (const auto& f : {e, l, c, lib::subsets(), lib::binary_leaf_trees()}) {
    o.expect(same_strata(plethysm(f, x), f, top), "F(X) = F for " + f.name());
    o.expect(same_strata(plethysm(x, f), f, top), "X(F) = F for " + f.name());
  }
  for (const auto& h : {c, restrict(lib::subsets(), 1), l - lib::one()}) {
    o.expect(same_strata(plethysm(e + c, h), plethysm(e, h) + plethysm(c, h), top), "sum distributivity");
    o.expect(same_strata(plethysm(e * c, h), plethysm(e, h) * plethysm(c, h), top), "product distributivity");
  }
  const std::vector<GroupCycleIndexSeries> gammas = {lib::linear_with_reversal(),
                                                     lib::cyclic_with_reversal(),
                                                     lib::reversed_set_pairs(),
                                                     lib::graph_gcis(),
                                                     lib::digraph_gcis(),
                                                     lib::binary_trees_with_reversal(),
                                                     lib::linear_k_with_interchange(symmetric_group(3)),
                                                     lib::kary_trees_with_interchange(symmetric_group(3))};
  for (const auto& g : gammas) {
    const auto& group = *g.group();
    const auto lifted_x = trivial_lift(x, g.group());
    const auto left = gamma_plethysm(lifted_x, g), right = gamma_plethysm(g, lifted_x);
    const auto q = quotient(g);
    for (std::size_t gi = 0; gi < group.order(); ++gi) {
      o.expect(same_strata(left.component_at(gi), g.component_at(gi), top), "X(F) = F over Γ");
      o.expect(same_strata(right.component_at(gi), g.component_at(gi), top), "F(X) = F over Γ");
      for (std::size_t gj = gi + 1; gj < group.order(); ++gj)
        if (group.conjugate(gi, gj))
          o.expect(same_strata(g.component_at(gi), g.component_at(gj), top), "class function");
    }
    for (unsigned n = 0; n <= top; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        Rational average = 0;
        for (std::size_t gi = 0; gi < group.order(); ++gi) average += g.component_at(gi).fix_count(lambda);
        average /= Rational(static_cast<long>(group.order()));
        o.expect(q.fix_count(lambda) == average, "quotient is the component average at " + lambda.to_string());
      }
      Rational orbits = 0;
      for (const auto& gamma : group.elements()) orbits += gamma_isotype_ogf(g, gamma).coefficient(n);
      orbits /= Rational(static_cast<long>(group.order()));
      o.expect(isotype_ogf(q).coefficient(n) == orbits, "Burnside at n=" + std::to_string(n));
    }
  }
  // Möbius round trip: Σ_{d|k} d · (d-cycles of γσ) = fix(γ^k σ^k)
  for (const auto& g : {lib::reversed_set_pairs(), lib::linear_with_reversal(), lib::cyclic_with_reversal(),
                        lib::linear_k_with_interchange(symmetric_group(3)), trivial_lift(lib::subsets(), cyclic_group(3))}) {
    const auto& group = *g.group();
    for (std::size_t gi = 0; gi < group.order(); ++gi)
      for (unsigned n = 0; n <= top; ++n)
        for (const auto& lambda : partitions_of(n))
          for (unsigned k = 1; k <= 6; ++k) {
            Integer lhs = 0;
            for (auto d : divisors(k))
              lhs += Integer(static_cast<unsigned long>(d)) * induced_cycle_count(g, gi, lambda, d);
            const Rational rhs = g.component_at(group.power_index(gi, k)).fix_count(power_cycle_type(lambda, k));
            o.expect(Rational(lhs) == rhs, "Möbius round trip at " + lambda.to_string());
          }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "digraph conversity classes", 120, digraph_conversity},
      {2, "binary trees up to reversal", 10, binary_trees},
      {3, "leaf-multilabeled trees, degree-8 total", 30, leaf_multilabeled_trees},
      {4, "reversal formulas for linear and cyclic orders", 0, reversal_formulas},
      {5, "paths and polygons", 0, paths_and_polygons},
      {6, "self-complementary graphs", 60, self_complementary_graphs},
      {7, "oracle equivalence, n <= 6, library only", 0, oracle_equivalence},
      {8, "algebraic laws to degree 8", 0, algebraic_laws},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_ok = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0)
      o.expect(seconds <= c.budget_seconds, "took longer than " + std::to_string(c.budget_seconds) + " s");
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.number << " " << c.title << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s)";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
