#pragma once

// Concrete finite permutation groups, used as the structural group Γ.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gspec/partition.hpp"

namespace gspec {

/// A permutation of {1..k}. Stored zero-based: image(i) for i in [0, k).
class GroupElement {
 public:
  GroupElement() = default;
  /// images[i] is the zero-based image of i; must be a bijection.
  explicit GroupElement(std::vector<unsigned> images);
  static GroupElement identity(unsigned degree);
  /// Builds from one-based cycles, e.g. {{1,2},{3,4,5}}.
  static GroupElement from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  std::span<const unsigned> images() const { return images_; }

  bool is_identity() const;
  GroupElement inverse() const;
  std::uint64_t order() const;
  /// Orbits of ⟨g⟩ as zero-based cycles, each starting at its least point.
  std::vector<std::vector<unsigned>> cycles() const;

  /// Cycle notation with one-based points; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<unsigned> images_;
};

/// (a * b)(i) = a(b(i)): apply b first.
GroupElement operator*(const GroupElement& a, const GroupElement& b);

/// g composed with itself i times; element_power(g, 0) is the identity.
GroupElement element_power(const GroupElement& g, std::uint64_t i);

/// Multiset of cycle lengths, a partition of g.degree().
Partition cycle_type(const GroupElement& g);

/// Parses cycle notation "(1 2)(3 4 5)" on {1..degree}; "()" is the identity.
/// Commas between points are accepted.
GroupElement parse_element(std::string_view text, unsigned degree);

class FiniteGroup {
 public:
  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const GroupElement> elements() const { return elements_; }
  const GroupElement& element(std::size_t index) const { return elements_[index]; }
  std::size_t identity_index() const { return identity_; }
  const GroupElement& identity() const { return elements_[identity_]; }
  const std::string& name() const { return name_; }

  /// Index of g, or throws std::out_of_range when g is not in the group.
  std::size_t index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const;
  std::size_t product_index(std::size_t a, std::size_t b) const;
  std::size_t power_index(std::size_t a, std::uint64_t i) const;
  bool conjugate(std::size_t a, std::size_t b) const;

  /// Closure of the generators (orbit of the identity under left
  /// multiplication). Throws std::invalid_argument on a degree mismatch.
  static std::shared_ptr<const FiniteGroup> generated(unsigned degree, const std::vector<GroupElement>& gens,
                                                      std::string name = {});

 private:
  FiniteGroup() = default;
  unsigned degree_ = 0;
  std::vector<GroupElement> elements_;  // sorted
  std::size_t identity_ = 0;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr symmetric_group(unsigned k);
GroupPtr cyclic_group(unsigned k);
GroupPtr trivial_group();
GroupPtr group_from_generators(unsigned degree, const std::vector<GroupElement>& gens);

/// "S3", "C4", "1" (trivial), or a generator list "<(1 2 3);(1 2)>@3" where
/// the suffix gives the degree.
GroupPtr parse_group(std::string_view text);

}  // namespace gspec
