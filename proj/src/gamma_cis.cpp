#include "gspec/gamma_cis.hpp"

#include <stdexcept>

#include "gspec/number_theory.hpp"

namespace gspec {

namespace {

void require_same_group(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g, const char* op) {
  if (f.group() == g.group()) return;
  const auto& a = *f.group();
  const auto& b = *g.group();
  bool same = a.degree() == b.degree() && a.order() == b.order();
  for (std::size_t i = 0; same && i < a.order(); ++i) same = a.element(i) == b.element(i);
  if (!same) throw GroupMismatchError(std::string(op) + ": operands are over different groups (" + a.name() + " vs " +
                                      b.name() + ")");
}

template <typename Op>
GroupCycleIndexSeries componentwise(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g, const char* name,
                                    Op op) {
  require_same_group(f, g, name);
  std::vector<CycleIndexSeries> out;
  out.reserve(f.components().size());
  for (std::size_t i = 0; i < f.components().size(); ++i) out.push_back(op(f.component_at(i), g.component_at(i)));
  return GroupCycleIndexSeries(f.group(), std::move(out));
}

}  // namespace

GroupCycleIndexSeries::GroupCycleIndexSeries(GroupPtr group, std::vector<CycleIndexSeries> components)
    : group_(std::move(group)), components_(std::move(components)) {
  if (!group_) throw std::invalid_argument("GroupCycleIndexSeries: null group");
  if (components_.size() != group_->order())
    throw std::invalid_argument("GroupCycleIndexSeries: need one component per group element");
}

GroupCycleIndexSeries GroupCycleIndexSeries::placeholder(GroupPtr group, const std::string& name) {
  std::vector<CycleIndexSeries> comps;
  for (const auto& g : group->elements()) comps.push_back(CycleIndexSeries::placeholder(name + "@" + g.to_string()));
  return GroupCycleIndexSeries(std::move(group), std::move(comps));
}

const CycleIndexSeries& GroupCycleIndexSeries::component(const GroupElement& gamma) const {
  if (!group_->contains(gamma))
    throw GroupMismatchError("element " + gamma.to_string() + " is not in group " + group_->name());
  return components_[group_->index_of(gamma)];
}

GroupCycleIndexSeries trivial_lift(const CycleIndexSeries& f, GroupPtr group) {
  std::vector<CycleIndexSeries> comps(group->order(), f);
  return GroupCycleIndexSeries(std::move(group), std::move(comps));
}

CycleIndexSeries quotient(const GroupCycleIndexSeries& f) {
  CycleIndexSeries sum = f.component_at(0);
  for (std::size_t i = 1; i < f.components().size(); ++i) sum = add(sum, f.component_at(i));
  return scale(sum, Rational(1, static_cast<unsigned long>(f.group()->order())));
}

GroupCycleIndexSeries add(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  return componentwise(f, g, "add", [](const auto& a, const auto& b) { return add(a, b); });
}

GroupCycleIndexSeries subtract(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  return componentwise(f, g, "subtract", [](const auto& a, const auto& b) { return subtract(a, b); });
}

GroupCycleIndexSeries multiply(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  return componentwise(f, g, "multiply", [](const auto& a, const auto& b) { return multiply(a, b); });
}

GroupCycleIndexSeries scale(const GroupCycleIndexSeries& f, const Rational& c) {
  std::vector<CycleIndexSeries> out;
  for (const auto& comp : f.components()) out.push_back(scale(comp, c));
  return GroupCycleIndexSeries(f.group(), std::move(out));
}

GroupCycleIndexSeries restrict(const GroupCycleIndexSeries& f, unsigned min_degree,
                               std::optional<unsigned> max_degree) {
  std::vector<CycleIndexSeries> out;
  for (const auto& comp : f.components()) out.push_back(restrict(comp, min_degree, max_degree));
  return GroupCycleIndexSeries(f.group(), std::move(out));
}

GroupCycleIndexSeries gamma_plethysm(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  require_same_group(f, g, "plethysm");
  const auto& group = *f.group();
  std::vector<CycleIndexSeries> out;
  for (std::size_t idx = 0; idx < group.order(); ++idx) {
    // inner[r] = Z_G(γ^r); p_i takes Z_G(γ^{i mod order(γ)}).
    const auto order = group.element(idx).order();
    std::vector<CycleIndexSeries> inner;
    for (std::uint64_t r = 0; r < order; ++r) inner.push_back(g.component_at(group.power_index(idx, r)));
    out.push_back(plethysm_twisted(f.component_at(idx), std::move(inner),
                                   f.component_at(idx).name() + "(" + g.component_at(idx).name() + ")@" +
                                       group.element(idx).to_string()));
  }
  return GroupCycleIndexSeries(f.group(), std::move(out));
}

Integer induced_cycle_count(const GroupCycleIndexSeries& g, std::size_t gamma_index, const Partition& lambda,
                            std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("induced_cycle_count: k must be positive");
  const auto& group = *g.group();
  Rational sum = 0;
  for (std::uint64_t d : divisors(k)) {
    const int mu = mobius(k / d);
    if (mu == 0) continue;
    const auto& comp = g.component_at(group.power_index(gamma_index, d));
    const Rational fix = comp.fix_count(power_cycle_type(lambda, static_cast<unsigned>(d)));
    if (mu > 0)
      sum += fix;
    else
      sum -= fix;
  }
  sum /= Rational(static_cast<unsigned long>(k));
  if (!is_integer(sum) || sgn(sum) < 0)
    throw InconsistentSeriesError("induced cycle count for k=" + std::to_string(k) + " at " + lambda.to_string() +
                                  " is " + to_string(sum) + "; the inner series is not a genuine cycle index");
  return sum.get_num();
}

Integer induced_cycle_count(const GroupCycleIndexSeries& g, const GroupElement& gamma, const Partition& lambda,
                            std::uint64_t k) {
  if (!g.group()->contains(gamma))
    throw GroupMismatchError("element " + gamma.to_string() + " is not in group " + g.group()->name());
  return induced_cycle_count(g, g.group()->index_of(gamma), lambda, k);
}

Partition induced_cycle_type(const GroupCycleIndexSeries& g, std::size_t gamma_index, const Partition& lambda) {
  const std::uint64_t n = lcm(g.group()->element(gamma_index).order(), lambda.order());
  std::map<unsigned, unsigned> mult;
  for (std::uint64_t k : divisors(n)) {
    const Integer c = induced_cycle_count(g, gamma_index, lambda, k);
    if (c == 0) continue;
    if (!c.fits_uint_p()) throw ResourceLimitError("induced permutation has too many cycles to represent");
    mult[static_cast<unsigned>(k)] = static_cast<unsigned>(c.get_ui());
  }
  return Partition::from_multiplicities(mult);
}

GroupCycleIndexSeries gamma_functorial(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  require_same_group(f, g, "functorial composition");
  const auto& group = *f.group();
  std::vector<CycleIndexSeries> out;
  for (std::size_t idx = 0; idx < group.order(); ++idx) {
    const CycleIndexSeries outer = f.component_at(idx);
    FixOracle rule = [outer, g, idx](const Partition& lambda) {
      return outer.fix_count(induced_cycle_type(g, idx, lambda));
    };
    // Warm the inner strata serially so the parallel fill only reads memos.
    auto prepare = [g](unsigned n) {
      for (const auto& comp : g.components())
        if (!comp.has_fix_oracle()) comp.stratum(n);
    };
    out.push_back(CycleIndexSeries::from_fix_rule(
        outer.name() + "[]" + g.component_at(idx).name() + "@" + group.element(idx).to_string(), std::move(rule),
        prepare));
  }
  return GroupCycleIndexSeries(f.group(), std::move(out));
}

OneVariableSeries gamma_labeled_egf(const GroupCycleIndexSeries& f, const GroupElement& gamma) {
  return labeled_egf(f.component(gamma));
}

OneVariableSeries gamma_isotype_ogf(const GroupCycleIndexSeries& f, const GroupElement& gamma) {
  return isotype_ogf(f.component(gamma));
}

void define_recursive(const GroupCycleIndexSeries& placeholder, const GroupCycleIndexSeries& body) {
  require_same_group(placeholder, body, "define_recursive");
  for (std::size_t i = 0; i < placeholder.components().size(); ++i)
    define_recursive(placeholder.component_at(i), body.component_at(i));
}

std::string format_gamma(const GroupCycleIndexSeries& f, unsigned max_degree) {
  std::string out;
  const auto& group = *f.group();
  for (std::size_t idx = 0; idx < group.order(); ++idx) {
    out += "== " + group.element(idx).to_string() + "\n";
    for (unsigned n = 0; n <= max_degree; ++n) out += format_stratum(n, f.component_at(idx).stratum(n)) + "\n";
  }
  return out;
}

}  // namespace gspec
