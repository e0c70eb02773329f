#pragma once

// Γ-cycle index series: one cycle index series per element of a finite
// permutation group Γ, the component at γ recording fix(γ · F[σ]).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gspec/cycle_index.hpp"
#include "gspec/perm_group.hpp"

namespace gspec {

class GroupCycleIndexSeries {
 public:
  /// components[i] belongs to group->element(i).
  GroupCycleIndexSeries(GroupPtr group, std::vector<CycleIndexSeries> components);

  /// One unbound placeholder per element.
  static GroupCycleIndexSeries placeholder(GroupPtr group, const std::string& name = "recursive");

  const GroupPtr& group() const { return group_; }
  /// Throws GroupMismatchError if γ is not in the group.
  const CycleIndexSeries& component(const GroupElement& gamma) const;
  const CycleIndexSeries& component_at(std::size_t index) const { return components_.at(index); }
  const CycleIndexSeries& identity_component() const { return components_[group_->identity_index()]; }
  const std::vector<CycleIndexSeries>& components() const { return components_; }

 private:
  GroupPtr group_;
  std::vector<CycleIndexSeries> components_;
};

/// Every component equal to f.
GroupCycleIndexSeries trivial_lift(const CycleIndexSeries& f, GroupPtr group);

/// (1/|Γ|) Σ_γ Z_F(γ): the cycle index of the quotient species F/Γ.
CycleIndexSeries quotient(const GroupCycleIndexSeries& f);

GroupCycleIndexSeries add(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g);
GroupCycleIndexSeries subtract(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g);
GroupCycleIndexSeries multiply(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g);
GroupCycleIndexSeries scale(const GroupCycleIndexSeries& f, const Rational& c);
GroupCycleIndexSeries restrict(const GroupCycleIndexSeries& f, unsigned min_degree,
                               std::optional<unsigned> max_degree = std::nullopt);

/// Component at γ is Z_F(γ)[p_i ← stretch(Z_G(γ^i), i)].
GroupCycleIndexSeries gamma_plethysm(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g);

/// Number of k-cycles of the permutation γ·G[σ] on G[n], σ of type λ:
/// (1/k) Σ_{d|k} μ(k/d) fix(γ^d · G[σ^d]). Throws InconsistentSeriesError
/// when the sum is not a nonnegative multiple of k.
Integer induced_cycle_count(const GroupCycleIndexSeries& g, std::size_t gamma_index, const Partition& lambda,
                            std::uint64_t k);
Integer induced_cycle_count(const GroupCycleIndexSeries& g, const GroupElement& gamma, const Partition& lambda,
                            std::uint64_t k);

/// Full cycle type of γ·G[σ], assembled over k | lcm(order(γ), order(λ)).
Partition induced_cycle_type(const GroupCycleIndexSeries& g, std::size_t gamma_index, const Partition& lambda);

/// F □ G: fix at (γ, λ) is fix_F(γ) at the induced cycle type of γ·G[σ].
/// The outer components must answer fix-count point queries at degree |G[n]|.
GroupCycleIndexSeries gamma_functorial(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g);

OneVariableSeries gamma_labeled_egf(const GroupCycleIndexSeries& f, const GroupElement& gamma);
/// Counts unlabeled F-structures fixed (as unlabeled structures) by γ.
OneVariableSeries gamma_isotype_ogf(const GroupCycleIndexSeries& f, const GroupElement& gamma);

/// Binds each placeholder component to the matching body component.
void define_recursive(const GroupCycleIndexSeries& placeholder, const GroupCycleIndexSeries& body);

inline GroupCycleIndexSeries operator+(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  return add(f, g);
}
inline GroupCycleIndexSeries operator-(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  return subtract(f, g);
}
inline GroupCycleIndexSeries operator*(const GroupCycleIndexSeries& f, const GroupCycleIndexSeries& g) {
  return multiply(f, g);
}

/// One block per element: "== <cycle notation>" then the component strata.
std::string format_gamma(const GroupCycleIndexSeries& f, unsigned max_degree);

}  // namespace gspec
