#pragma once

// Integer partitions as cycle types. A Partition is stored weakly decreasing;
// every series coefficient in the library is keyed by this canonical form.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gspec/rational.hpp"

namespace gspec {

class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; zeros are rejected.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts);

  /// Builds from multiplicities: mult[i] copies of part size i.
  static Partition from_multiplicities(const std::map<unsigned, unsigned>& mult);

  std::span<const unsigned> parts() const { return parts_; }
  unsigned degree() const { return degree_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Number of parts equal to i.
  unsigned multiplicity(unsigned i) const;
  /// part size -> count, ascending by part size.
  std::map<unsigned, unsigned> multiplicities() const;

  /// Order of any permutation of this cycle type (lcm of the parts; 1 for []).
  std::uint64_t order() const;

  /// Multiset union (p_λ · p_μ = p_{λ∪μ}).
  Partition merged(const Partition& other) const;
  /// Every part multiplied by k.
  Partition scaled(unsigned k) const;
  /// Every part divided by k, or nullopt if some part is not divisible.
  std::optional<Partition> divided(unsigned k) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence. Within one degree, descending
  /// order of this comparison is the reverse-lexicographic listing order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
  unsigned degree_ = 0;
};

/// Parses "[3,1,1]" (whitespace tolerated, parts in any order); "[]" is empty.
Partition parse_partition(std::string_view text);

/// z_λ = ∏ i^{λ_i} λ_i!, the centralizer order of a permutation of type λ.
Integer z_of(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ...,
/// [1,...,1]. partitions_of(0) is {[]}.
std::vector<Partition> partitions_of(unsigned n);

/// Cycle type of σ^d for σ of type λ: a c-cycle splits into gcd(c,d) cycles
/// of length c/gcd(c,d).
Partition power_cycle_type(const Partition& lambda, unsigned d);

/// Sub-multisets μ ⊆ λ, each reported with the multiplicity factor
/// ∏_i C(λ_i, μ_i) counting the ways to choose those cycles.
struct SubPartition {
  Partition sub;
  Partition complement;
  Integer ways;
};
std::vector<SubPartition> sub_partitions(const Partition& lambda);

/// Process-wide, lazily grown table of partitions per degree with O(log p(n))
/// index lookup. Safe for concurrent use.
class PartitionTable {
 public:
  static const std::vector<Partition>& of(unsigned n);
  /// Position of λ within of(λ.degree()).
  static std::size_t index(const Partition& lambda);
  static std::size_t count(unsigned n) { return of(n).size(); }
};

}  // namespace gspec
