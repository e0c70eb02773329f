#pragma once

// Cycle index series Z_F = Σ_n Σ_{λ⊢n} (fix F[λ] / z_λ) p_λ.
//
// A CycleIndexSeries is a cheap handle onto an immutable node of a lazy
// expression graph. Each node memoizes its degree-n strata (dense vectors of
// rationals indexed by PartitionTable::of(n)); strata are computed on demand.
// A node may also carry a fix oracle, a closed-form rule λ -> fix F[λ] that
// answers point queries at degrees far above the dense limit.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gspec/errors.hpp"
#include "gspec/partition.hpp"
#include "gspec/rational.hpp"

namespace gspec {

/// Coefficients of one degree, indexed like PartitionTable::of(degree).
using Stratum = std::vector<Rational>;

/// λ -> fix count; must equal z_λ · coefficient(λ).
using FixOracle = std::function<Rational(const Partition&)>;

/// Largest degree computed densely. Initialized from GSPEC_MAX_DEGREE
/// (default 30).
unsigned dense_degree_limit();
void set_dense_degree_limit(unsigned limit);

namespace detail {
class SeriesNode;
}

class CycleIndexSeries {
 public:
  /// The zero series.
  CycleIndexSeries();
  explicit CycleIndexSeries(std::shared_ptr<detail::SeriesNode> node) : node_(std::move(node)) {}

  /// An unbound placeholder for define_recursive.
  static CycleIndexSeries placeholder(std::string name = "recursive");

  /// Series given by a stratum rule. `support_bound`, when set, promises all
  /// strata at degree >= bound are zero.
  static CycleIndexSeries from_strata(std::string name, std::function<Stratum(unsigned)> rule,
                                      std::optional<FixOracle> oracle = std::nullopt,
                                      std::optional<unsigned> support_bound = std::nullopt);

  /// Series whose coefficients are defined through fix counts: coefficient(λ)
  /// = rule(λ) / z_λ. The rule also serves as fix oracle. Strata are filled by
  /// the parallel kernel; `prepare(n)` runs first, serially, and may warm any
  /// caches the rule reads.
  static CycleIndexSeries from_fix_rule(std::string name, FixOracle rule,
                                        std::function<void(unsigned)> prepare = {});

  /// Coefficient of p_λ. Falls back to the fix oracle above the dense limit;
  /// throws ResourceLimitError if neither path applies.
  Rational coefficient(const Partition& lambda) const;
  /// z_λ · coefficient(λ), via the fix oracle when present.
  Rational fix_count(const Partition& lambda) const;
  /// Whole degree-n stratum (memoized).
  const Stratum& stratum(unsigned n) const;

  /// True when the constant term is provably zero without evaluating any
  /// recursive stratum; false means "unknown or nonzero".
  bool constant_term_known_zero() const;

  bool has_fix_oracle() const;
  /// Same series with its fix oracle dropped (forces the dense path).
  CycleIndexSeries without_fix_oracle() const;
  /// Same coefficients, with the given fix oracle attached.
  CycleIndexSeries with_fix_oracle(FixOracle oracle) const;

  /// Exclusive upper bound on nonzero degrees, if statically known.
  std::optional<unsigned> support_bound() const;
  const std::string& name() const;
  bool is_placeholder() const;

  const std::shared_ptr<detail::SeriesNode>& node() const { return node_; }

 private:
  std::shared_ptr<detail::SeriesNode> node_;
};

CycleIndexSeries add(const CycleIndexSeries& f, const CycleIndexSeries& g);
CycleIndexSeries subtract(const CycleIndexSeries& f, const CycleIndexSeries& g);
CycleIndexSeries scale(const CycleIndexSeries& f, const Rational& c);
/// Product; fix_{F·G}(λ) = Σ_{μ⊆λ} ∏ C(λ_i, μ_i) fix_F(μ) fix_G(λ∖μ).
CycleIndexSeries multiply(const CycleIndexSeries& f, const CycleIndexSeries& g);
/// p_j ↦ p_{ij}.
CycleIndexSeries stretch(const CycleIndexSeries& f, unsigned i);
/// Keeps degrees in [min_degree, max_degree); max_degree = nullopt is unbounded.
CycleIndexSeries restrict(const CycleIndexSeries& f, unsigned min_degree,
                          std::optional<unsigned> max_degree = std::nullopt);

/// F∘G: F[p_i ← stretch(G, i)]. G must have zero constant term unless F has
/// bounded support; otherwise queries at degree >= 1 throw CompositionError.
CycleIndexSeries plethysm(const CycleIndexSeries& f, const CycleIndexSeries& g);

/// Generalized plethysm used by the Γ version: p_i is replaced by
/// stretch(inner[i mod inner.size()], i).
CycleIndexSeries plethysm_twisted(const CycleIndexSeries& f, std::vector<CycleIndexSeries> inner,
                                  std::string name = {});

/// Binds a placeholder to its defining body. Throws std::logic_error if the
/// series is not an unbound placeholder.
void define_recursive(const CycleIndexSeries& placeholder, const CycleIndexSeries& body);

inline CycleIndexSeries operator+(const CycleIndexSeries& f, const CycleIndexSeries& g) { return add(f, g); }
inline CycleIndexSeries operator-(const CycleIndexSeries& f, const CycleIndexSeries& g) { return subtract(f, g); }
inline CycleIndexSeries operator*(const CycleIndexSeries& f, const CycleIndexSeries& g) { return multiply(f, g); }
inline CycleIndexSeries operator*(const Rational& c, const CycleIndexSeries& f) { return scale(f, c); }

/// Lazily evaluated one-variable power series; coefficient n belongs to x^n.
class OneVariableSeries {
 public:
  explicit OneVariableSeries(std::function<Rational(unsigned)> rule);
  Rational coefficient(unsigned n) const;
  std::vector<Rational> coefficients(unsigned count) const;

 private:
  struct Cache;
  std::function<Rational(unsigned)> rule_;
  std::shared_ptr<Cache> cache_;
};

/// F(x) = Z_F(x, 0, 0, ...): coefficient n is (labeled count) / n!.
OneVariableSeries labeled_egf(const CycleIndexSeries& f);
/// F~(x) = Z_F(x, x^2, x^3, ...): coefficient n is the isotype count.
OneVariableSeries isotype_ogf(const CycleIndexSeries& f);
/// n! · [x^n] labeled_egf(f).
Rational labeled_count(const CycleIndexSeries& f, unsigned n);

/// η_k(Z_F) collected by sorted exponent profile.
class SymmetricExpansion {
 public:
  using Profile = std::vector<unsigned>;  // weakly decreasing, positive, length <= k

  SymmetricExpansion(unsigned variable_count, std::vector<std::map<Profile, Rational, std::greater<>>> strata);

  unsigned variable_count() const { return variable_count_; }
  unsigned max_degree() const { return static_cast<unsigned>(strata_.size()) - 1; }
  /// Profiles of degree n with nonzero coefficient, reverse-lex order.
  const std::map<Profile, Rational, std::greater<>>& stratum(unsigned n) const { return strata_.at(n); }
  /// Coefficient of x_π; π may be given in any order.
  Rational coefficient(Profile profile) const;
  /// Sum of all monomial coefficients of degree n (each profile counted once
  /// per distinct arrangement of its exponents over the k variables).
  Rational total(unsigned n) const;

 private:
  unsigned variable_count_;
  std::vector<std::map<Profile, Rational, std::greater<>>> strata_;
};

SymmetricExpansion expand_symmetric(const CycleIndexSeries& f, unsigned variables, unsigned max_degree);

/// "n: c*p[λ] + ..." in reverse-lex partition order; "n: 0" for a zero stratum.
std::string format_stratum(unsigned n, const Stratum& s);

}  // namespace gspec
