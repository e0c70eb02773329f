#pragma once

// Brute-force ground truth: explicit labeled structures, explicit S_n × Γ
// actions, direct fixed-point and orbit counting. Intentionally naive; used to
// cross-check the cycle-index machinery at small sizes.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gspec/gamma_cis.hpp"
#include "gspec/perm_group.hpp"

namespace gspec::oracle {

/// A labeled structure on {0..n-1} in a canonical value encoding, so equal
/// structures compare equal.
using Structure = std::vector<int>;
using StructureSet = std::shared_ptr<const std::vector<Structure>>;

struct StructureFamily {
  std::string name;
  /// Γ acting on the structures (the trivial group for plain species).
  GroupPtr group;
  /// Largest n the family agrees to enumerate.
  unsigned max_n = 0;
  /// All structures on n labels, sorted; cached, so repeated calls are cheap.
  std::function<StructureSet(unsigned n)> enumerate;
  /// Transport along a permutation σ of the labels.
  std::function<Structure(const GroupElement& sigma, const Structure& s)> relabel;
  /// Structural action of γ ∈ group.
  std::function<Structure(const GroupElement& gamma, const Structure& s)> gamma_act;
  /// Largest n for fixed-point and orbit counts. Above max_n the structures
  /// are visited one at a time by streamed_fix_count instead of being stored.
  unsigned fix_max_n = 0;
  /// Checks every structure on n labels against γ · F[σ] without storing
  /// them; set only by families whose sets outgrow memory.
  std::function<std::uint64_t(const GroupElement& gamma, const GroupElement& sigma)> streamed_fix_count;
};

/// Number of structures s with γ · F[σ](s) = s. σ acts on {0..n-1}.
std::uint64_t brute_fix_count(const StructureFamily& family, const GroupElement& gamma, const GroupElement& sigma);

/// Isomorphism classes on n labels: orbits under S_n, or under S_n × Γ when
/// quotient_by_gamma is set, by Burnside averaging of brute_fix_count.
std::uint64_t brute_orbit_count(const StructureFamily& family, unsigned n, bool quotient_by_gamma);

/// Partially-labeled structures of the given profile fixed by γ: orbits of
/// the color-preserving relabelings whose orbit γ maps to itself. Computed by
/// explicit orbit construction.
std::uint64_t brute_partial_label_count(const StructureFamily& family, unsigned n, const std::vector<unsigned>& profile,
                                        const GroupElement& gamma);

/// The i-th permutation of {0..n-1} in lexicographic order, i < n!.
GroupElement permutation_by_index(unsigned n, std::uint64_t index);

/// Some permutation of {0..n-1} with the given cycle type.
GroupElement representative(const Partition& lambda);

StructureFamily sets();
StructureFamily subsets();
StructureFamily linear_orders(bool with_reversal);
StructureFamily cyclic_orders(bool with_reversal);
StructureFamily simple_graphs(bool with_complement);
StructureFamily digraphs(bool with_converse);
/// Ordered binary trees (each child possibly empty) on n labeled nodes;
/// τ mirrors the tree.
StructureFamily binary_trees(bool with_reversal);
/// Ternary trees on n labeled nodes; Γ ⊆ S3 permutes every node's children.
StructureFamily ternary_trees(GroupPtr interchange);

/// A brute-force family next to the built-in series that should describe it.
struct Pairing {
  std::string name;
  StructureFamily family;
  GroupCycleIndexSeries series;
};

/// Every built-in Γ-species with an enumerable counterpart.
std::vector<Pairing> builtin_pairings();

struct CheckReport {
  std::string name;
  unsigned max_n = 0;          // largest n actually checked
  std::uint64_t checks = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// For n <= min(max_n, family.max_n), every λ ⊢ n (two representatives each)
/// and every γ: brute_fix_count = z_λ · coefficient of the γ-component. With
/// orbits set, also compares orbit counts with the isotype series of the
/// identity component and of the quotient.
CheckReport cross_check(const Pairing& pairing, unsigned max_n, bool orbits = true);

}  // namespace gspec::oracle
