#include "gspec/library.hpp"

#include <algorithm>
#include <stdexcept>

#include "gspec/kernels.hpp"
#include "gspec/number_theory.hpp"

namespace gspec::library {

namespace {

CycleIndexSeries from_oracle(std::string name, FixOracle oracle, std::optional<unsigned> bound = std::nullopt) {
  auto rule = [oracle](unsigned n) { return kernels::fix_rule_stratum_serial(n, oracle); };
  return CycleIndexSeries::from_strata(std::move(name), rule, oracle, bound);
}

bool all_parts_equal(const Partition& lambda, unsigned value) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(), [value](unsigned p) { return p == value; });
}

GroupPtr s2() {
  static const GroupPtr group = symmetric_group(2);
  return group;
}

const GroupElement& tau() {
  static const GroupElement t = GroupElement::from_cycles(2, {{1, 2}});
  return t;
}

// Assembles an S2-series from its identity and τ components.
GroupCycleIndexSeries over_s2(CycleIndexSeries identity, CycleIndexSeries reversal) {
  std::vector<CycleIndexSeries> comps(2);
  comps[s2()->identity_index()] = std::move(identity);
  comps[s2()->index_of(tau())] = std::move(reversal);
  return GroupCycleIndexSeries(s2(), std::move(comps));
}

}  // namespace

CycleIndexSeries zero() { return CycleIndexSeries(); }

CycleIndexSeries one() {
  return from_oracle("1", [](const Partition& l) { return Rational(l.degree() == 0 ? 1 : 0); }, 1u);
}

CycleIndexSeries singleton() {
  return from_oracle("X", [](const Partition& l) { return Rational(l == Partition{1} ? 1 : 0); }, 2u);
}

// The unique set structure is fixed by every relabeling.
CycleIndexSeries set_species() {
  return from_oracle("E", [](const Partition&) { return Rational(1); });
}

CycleIndexSeries set_of_size(unsigned k) {
  return from_oracle(
      "E_" + std::to_string(k), [k](const Partition& l) { return Rational(l.degree() == k ? 1 : 0); }, k + 1);
}

// Only the identity fixes a linear order; it fixes all n! of them.
CycleIndexSeries linear() {
  return from_oracle("L", [](const Partition& l) {
    return all_parts_equal(l, 1) ? Rational(factorial(l.degree())) : Rational(0);
  });
}

CycleIndexSeries linear_of_length(unsigned k) {
  return from_oracle(
      "L_" + std::to_string(k),
      [k](const Partition& l) {
        return l.degree() == k && all_parts_equal(l, 1) ? Rational(factorial(k)) : Rational(0);
      },
      k + 1);
}

// A relabeling fixes a cyclic order only if all its cycles share one length
// d; with m such cycles there are φ(d)·(m-1)!·d^{m-1} fixed cyclic orders.
CycleIndexSeries cyclic() {
  return from_oracle("C", [](const Partition& l) -> Rational {
    if (l.empty()) return 0;
    const unsigned d = l.largest();
    if (!all_parts_equal(l, d)) return 0;
    const auto m = static_cast<unsigned>(l.length());
    return Rational(Integer(static_cast<unsigned long>(euler_phi(d))) * factorial(m - 1) * ipow(Integer(d), m - 1));
  });
}

// A subset fixed by σ is a union of σ's cycles.
CycleIndexSeries subsets() {
  return from_oracle("P", [](const Partition& l) {
    return Rational(ipow(Integer(2), static_cast<unsigned>(l.length())));
  });
}

// reverse∘σ fixes a list only when σ maps position i to n+1-i, so σ has type
// [2^k] or [2^k,1]; the fixed lists then number z_λ.
GroupCycleIndexSeries linear_with_reversal() {
  auto reversal = from_oracle("L@(1 2)", [](const Partition& l) -> Rational {
    const unsigned twos = l.multiplicity(2);
    const unsigned ones = l.multiplicity(1);
    if (twos + ones != l.length() || ones > 1) return 0;
    return Rational(z_of(l));
  });
  return over_s2(linear(), reversal);
}

// n = 2k+1: type [2^k,1], fix z_λ. n = 2k: types [2^k] and [2^{k-1},1,1},
// each with fix z_λ/2.
GroupCycleIndexSeries cyclic_with_reversal() {
  auto reversal = from_oracle("C@(1 2)", [](const Partition& l) -> Rational {
    const unsigned n = l.degree();
    if (n == 0) return 0;
    const unsigned twos = l.multiplicity(2);
    const unsigned ones = l.multiplicity(1);
    if (twos + ones != l.length()) return 0;
    if (n % 2 == 1) return ones == 1 ? Rational(z_of(l)) : Rational(0);
    if (ones != 0 && ones != 2) return 0;
    return Rational(z_of(l)) / 2;
  });
  return over_s2(cyclic(), reversal);
}

GroupCycleIndexSeries linear_k_with_interchange(GroupPtr group) {
  if (!group) throw std::invalid_argument("linear_k_with_interchange: null group");
  const unsigned k = group->degree();
  std::vector<CycleIndexSeries> comps;
  for (const auto& gamma : group->elements()) {
    const Partition type = cycle_type(gamma);
    comps.push_back(from_oracle(
        "L_" + std::to_string(k) + "@" + gamma.to_string(),
        [type](const Partition& l) { return l == type ? Rational(z_of(l)) : Rational(0); }, k + 1));
  }
  return GroupCycleIndexSeries(std::move(group), std::move(comps));
}

GroupCycleIndexSeries reversed_set_pairs() {
  const auto l2 = restrict(linear_with_reversal(), 2, 3);
  const auto composed = gamma_plethysm(l2, trivial_lift(set_species(), s2()));
  const auto e = set_species();
  // Identity: ordered pairs of complementary subsets are subsets, 2^{#cycles}.
  // τ: the pair (A, B) must map to (B, A), which is stretch(E, 2).
  const auto identity_oracle = multiply(e, e);
  const auto reversal_oracle = stretch(e, 2);
  return over_s2(composed.component(GroupElement::identity(2)).with_fix_oracle(
                     [identity_oracle](const Partition& l) { return identity_oracle.fix_count(l); }),
                 composed.component(tau()).with_fix_oracle(
                     [reversal_oracle](const Partition& l) { return reversal_oracle.fix_count(l); }));
}

GroupCycleIndexSeries graph_gcis() {
  const auto edges = trivial_lift(multiply(set_of_size(2), set_species()), s2());
  return gamma_functorial(reversed_set_pairs(), edges);
}

GroupCycleIndexSeries digraph_gcis() {
  const auto arcs = multiply(restrict(linear_with_reversal(), 2, 3), trivial_lift(set_species(), s2()));
  return gamma_functorial(trivial_lift(subsets(), s2()), arcs);
}

CycleIndexSeries binary_leaf_trees() {
  auto r = CycleIndexSeries::placeholder("R");
  define_recursive(r, add(singleton(), plethysm(set_of_size(2), r)));
  return r;
}

GroupCycleIndexSeries binary_trees_with_reversal() {
  auto bt = GroupCycleIndexSeries::placeholder(s2(), "BT");
  const auto l2 = restrict(linear_with_reversal(), 2, 3);
  define_recursive(bt, trivial_lift(one(), s2()) + trivial_lift(singleton(), s2()) * gamma_plethysm(l2, bt));
  return bt;
}

GroupCycleIndexSeries kary_trees_with_interchange(GroupPtr group) {
  auto t = GroupCycleIndexSeries::placeholder(group, "T");
  const auto lk = linear_k_with_interchange(group);
  define_recursive(t, trivial_lift(one(), group) + trivial_lift(singleton(), group) * gamma_plethysm(lk, t));
  return t;
}

namespace {

std::optional<unsigned> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto digits = name.substr(prefix.size());
  if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string_view::npos)
    return std::nullopt;
  return static_cast<unsigned>(std::stoul(std::string(digits)));
}

}  // namespace

Builtin lookup(std::string_view name) {
  if (name == "0") return zero();
  if (name == "1") return one();
  if (name == "X") return singleton();
  if (name == "E") return set_species();
  if (name == "L") return linear();
  if (name == "C") return cyclic();
  if (name == "P") return subsets();
  if (name == "L_rev") return linear_with_reversal();
  if (name == "C_rev") return cyclic_with_reversal();
  if (name == "graph") return graph_gcis();
  if (name == "digraph") return digraph_gcis();
  if (auto k = suffix_number(name, "E_")) return set_of_size(*k);
  if (auto k = suffix_number(name, "L_")) return linear_of_length(*k);
  constexpr std::string_view interchange = "L_k_interchange:";
  if (name.substr(0, interchange.size()) == interchange)
    return linear_k_with_interchange(parse_group(name.substr(interchange.size())));
  throw std::out_of_range("unknown species '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"0", "1", "X", "E", "E_<k>", "L", "L_<k>", "C", "P", "L_rev", "C_rev", "L_k_interchange:<group>", "graph",
          "digraph"};
}

}  // namespace gspec::library
