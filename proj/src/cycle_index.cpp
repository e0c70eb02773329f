#include "gspec/cycle_index.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <utility>

#include "gspec/kernels.hpp"

namespace gspec {

namespace {

unsigned initial_limit() {
  if (const char* env = std::getenv("GSPEC_MAX_DEGREE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 30;
}

std::atomic<unsigned>& limit_cell() {
  static std::atomic<unsigned> cell{initial_limit()};
  return cell;
}

Stratum zero_stratum(unsigned n) { return Stratum(PartitionTable::count(n)); }

bool all_zero(const Stratum& s) {
  return std::all_of(s.begin(), s.end(), [](const Rational& q) { return is_zero(q); });
}

// out (degree da+db) += a (degree da) * b (degree db), p_λ p_μ = p_{λ∪μ}.
void accumulate_product(Stratum& out, const Stratum& a, unsigned da, const Stratum& b, unsigned db) {
  const auto& pa = PartitionTable::of(da);
  const auto& pb = PartitionTable::of(db);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      out[PartitionTable::index(pa[i].merged(pb[j]))] += a[i] * b[j];
    }
  }
}

// Degree-n strata currently being computed on this thread.
thread_local std::set<std::pair<const void*, unsigned>> t_in_progress;

class InProgress {
 public:
  InProgress(const void* node, unsigned n, const std::string& name) : key_(node, n) {
    if (!t_in_progress.insert(key_).second)
      throw ProductivityError("non-productive recursion: series '" + name + "' requires its own degree-" +
                              std::to_string(n) + " stratum while computing it");
  }
  ~InProgress() { t_in_progress.erase(key_); }
  InProgress(const InProgress&) = delete;
  InProgress& operator=(const InProgress&) = delete;

 private:
  std::pair<const void*, unsigned> key_;
};

}  // namespace

unsigned dense_degree_limit() { return limit_cell().load(); }
void set_dense_degree_limit(unsigned limit) { limit_cell().store(limit); }

namespace detail {

class SeriesNode {
 public:
  SeriesNode(std::string name, std::optional<FixOracle> oracle = std::nullopt,
             std::optional<unsigned> bound = std::nullopt)
      : name(std::move(name)), oracle(std::move(oracle)), bound(bound) {}
  virtual ~SeriesNode() = default;

  // Memo cells are filled at most once; a concurrent duplicate computation
  // produces the same value and is discarded.
  const Stratum& stratum(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(n); it != memo_.end()) return *it->second;
    }
    if (n > dense_degree_limit())
      throw ResourceLimitError("series '" + name + "': degree " + std::to_string(n) +
                               " exceeds the dense limit " + std::to_string(dense_degree_limit()));
    auto value = [&] {
      InProgress guard(this, n, name);
      if (bound && n >= *bound) return std::make_unique<const Stratum>(zero_stratum(n));
      return std::make_unique<const Stratum>(compute(n));
    }();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = memo_.emplace(n, std::move(value));
    return *it->second;
  }

  virtual bool is_placeholder() const { return false; }

  // True only when the degree-0 coefficient is provably zero without
  // evaluating a stratum that could recurse. A placeholder met again on the
  // current path counts as zero: with all such cycles set to zero every node
  // keeps a zero constant term, so the answer is a consistent fixed point.
  bool constant_known_zero(std::set<const SeriesNode*>& visiting) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(0); it != memo_.end()) return is_zero((*it->second)[0]);
    }
    if (bound && *bound == 0) return true;
    if (oracle) return is_zero((*oracle)(Partition{}));
    return structural_constant_zero(visiting);
  }

  std::string name;
  std::optional<FixOracle> oracle;
  std::optional<unsigned> bound;

 protected:
  virtual Stratum compute(unsigned n) = 0;
  virtual bool structural_constant_zero(std::set<const SeriesNode*>& visiting) = 0;

 private:
  std::shared_mutex mutex_;
  std::map<unsigned, std::unique_ptr<const Stratum>> memo_;
};

}  // namespace detail

namespace {

using detail::SeriesNode;

class RuleNode final : public SeriesNode {
 public:
  RuleNode(std::string name, std::function<Stratum(unsigned)> rule, std::optional<FixOracle> oracle,
           std::optional<unsigned> bound)
      : SeriesNode(std::move(name), std::move(oracle), bound), rule_(std::move(rule)) {}

 protected:
  Stratum compute(unsigned n) override { return rule_(n); }
  bool structural_constant_zero(std::set<const SeriesNode*>&) override { return is_zero(stratum(0)[0]); }

 private:
  std::function<Stratum(unsigned)> rule_;
};

class FixRuleNode final : public SeriesNode {
 public:
  FixRuleNode(std::string name, FixOracle rule, std::function<void(unsigned)> prepare)
      : SeriesNode(std::move(name), rule), rule_(std::move(rule)), prepare_(std::move(prepare)) {}

 protected:
  Stratum compute(unsigned n) override {
    if (prepare_) prepare_(n);
    return kernels::fix_rule_stratum(n, rule_);
  }
  bool structural_constant_zero(std::set<const SeriesNode*>&) override { return is_zero(rule_(Partition{})); }

 private:
  FixOracle rule_;
  std::function<void(unsigned)> prepare_;
};

class LinearNode final : public SeriesNode {
 public:
  LinearNode(CycleIndexSeries f, Rational a, CycleIndexSeries g, Rational b, std::string name,
             std::optional<FixOracle> oracle, std::optional<unsigned> bound)
      : SeriesNode(std::move(name), std::move(oracle), bound),
        f_(std::move(f)),
        g_(std::move(g)),
        a_(std::move(a)),
        b_(std::move(b)) {}

 protected:
  Stratum compute(unsigned n) override {
    Stratum out = f_.stratum(n);
    for (auto& c : out) c *= a_;
    if (!is_zero(b_)) {
      const Stratum& gs = g_.stratum(n);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += b_ * gs[j];
    }
    return out;
  }
  bool structural_constant_zero(std::set<const SeriesNode*>& visiting) override {
    return (is_zero(a_) || f_.node()->constant_known_zero(visiting)) &&
           (is_zero(b_) || g_.node()->constant_known_zero(visiting));
  }

 private:
  CycleIndexSeries f_, g_;
  Rational a_, b_;
};

class ProductNode final : public SeriesNode {
 public:
  ProductNode(CycleIndexSeries f, CycleIndexSeries g, std::string name, std::optional<FixOracle> oracle,
              std::optional<unsigned> bound)
      : SeriesNode(std::move(name), std::move(oracle), bound), f_(std::move(f)), g_(std::move(g)) {}

 protected:
  // The lower-degree factor is read first so a zero there spares the request
  // for the other factor's high-degree stratum (keeps X·R(...) productive).
  Stratum compute(unsigned n) override {
    Stratum out = zero_stratum(n);
    for (unsigned a = 0; a <= n; ++a) {
      const unsigned b = n - a;
      if (a <= b) {
        const Stratum& fa = f_.stratum(a);
        if (all_zero(fa)) continue;
        accumulate_product(out, fa, a, g_.stratum(b), b);
      } else {
        const Stratum& gb = g_.stratum(b);
        if (all_zero(gb)) continue;
        accumulate_product(out, f_.stratum(a), a, gb, b);
      }
    }
    return out;
  }
  bool structural_constant_zero(std::set<const SeriesNode*>& visiting) override {
    return f_.node()->constant_known_zero(visiting) || g_.node()->constant_known_zero(visiting);
  }

 private:
  CycleIndexSeries f_, g_;
};

class StretchNode final : public SeriesNode {
 public:
  StretchNode(CycleIndexSeries f, unsigned k, std::string name, std::optional<FixOracle> oracle,
              std::optional<unsigned> bound)
      : SeriesNode(std::move(name), std::move(oracle), bound), f_(std::move(f)), k_(k) {}

 protected:
  Stratum compute(unsigned n) override {
    Stratum out = zero_stratum(n);
    if (n % k_ != 0) return out;
    const Stratum& src = f_.stratum(n / k_);
    const auto& parts = PartitionTable::of(n / k_);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (!is_zero(src[j])) out[PartitionTable::index(parts[j].scaled(k_))] = src[j];
    return out;
  }
  bool structural_constant_zero(std::set<const SeriesNode*>& visiting) override {
    return f_.node()->constant_known_zero(visiting);
  }

 private:
  CycleIndexSeries f_;
  unsigned k_;
};

class RestrictNode final : public SeriesNode {
 public:
  RestrictNode(CycleIndexSeries f, unsigned lo, std::optional<unsigned> hi, std::string name,
               std::optional<FixOracle> oracle, std::optional<unsigned> bound)
      : SeriesNode(std::move(name), std::move(oracle), bound), f_(std::move(f)), lo_(lo), hi_(hi) {}

 protected:
  Stratum compute(unsigned n) override {
    if (n < lo_ || (hi_ && n >= *hi_)) return zero_stratum(n);
    return f_.stratum(n);
  }
  bool structural_constant_zero(std::set<const SeriesNode*>& visiting) override {
    return lo_ > 0 || f_.node()->constant_known_zero(visiting);
  }

 private:
  CycleIndexSeries f_;
  unsigned lo_;
  std::optional<unsigned> hi_;
};

class ForwardNode final : public SeriesNode {
 public:
  ForwardNode(CycleIndexSeries f, std::optional<FixOracle> oracle)
      : SeriesNode(f.name(), std::move(oracle), f.support_bound()), f_(std::move(f)) {}

 protected:
  Stratum compute(unsigned n) override { return f_.stratum(n); }
  bool structural_constant_zero(std::set<const SeriesNode*>& visiting) override {
    return f_.node()->constant_known_zero(visiting);
  }

 private:
  CycleIndexSeries f_;
};

class PlaceholderNode final : public SeriesNode {
 public:
  explicit PlaceholderNode(std::string name) : SeriesNode(std::move(name)) {}
  bool is_placeholder() const override { return true; }
  bool bound_to_body() const { return body_.has_value(); }
  // The body usually refers back to this node, so the pair forms a
  // shared_ptr cycle that lives until process exit.
  void bind(CycleIndexSeries body) { body_ = std::move(body); }

 protected:
  Stratum compute(unsigned n) override {
    if (!body_) throw UndefinedSeriesError("series '" + name + "' used before define_recursive");
    return body_->stratum(n);
  }
  bool structural_constant_zero(std::set<const SeriesNode*>& visiting) override {
    if (!body_) return false;
    if (!visiting.insert(this).second) return true;
    const bool zero = body_->node()->constant_known_zero(visiting);
    visiting.erase(this);
    return zero;
  }

 private:
  std::optional<CycleIndexSeries> body_;
};

// Truncated series as a list of strata; an empty Stratum stands for zero.
using Truncated = std::vector<Stratum>;

class PlethysmNode final : public SeriesNode {
 public:
  PlethysmNode(CycleIndexSeries outer, std::vector<CycleIndexSeries> inner, std::string name,
               std::optional<unsigned> bound)
      : SeriesNode(std::move(name), std::nullopt, bound), outer_(std::move(outer)), inner_(std::move(inner)) {}

 protected:
  Stratum compute(unsigned n) override;
  bool structural_constant_zero(std::set<const SeriesNode*>& visiting) override {
    if (!outer_.node()->constant_known_zero(visiting)) return false;
    if (!outer_.support_bound()) return true;
    for (const auto& g : inner_)
      if (!g.node()->constant_known_zero(visiting)) return false;
    return true;
  }

 private:
  const CycleIndexSeries& inner(unsigned i) const { return inner_[i % inner_.size()]; }

  CycleIndexSeries outer_;
  std::vector<CycleIndexSeries> inner_;
};

Stratum PlethysmNode::compute(unsigned n) {
  Stratum out = zero_stratum(n);
  const auto outer_bound = outer_.support_bound();
  if (n == 0 && !outer_bound) {
    // Only λ = [] survives when every inner constant term vanishes.
    out[0] = outer_.stratum(0)[0];
    return out;
  }

  std::map<unsigned, Rational> constants;
  auto constant = [&](unsigned i) -> const Rational& {
    auto it = constants.find(i);
    if (it == constants.end())
      it = constants.emplace(i, inner(i).constant_term_known_zero() ? Rational(0) : inner(i).stratum(0)[0]).first;
    return it->second;
  };
  bool any_constant = false;
  if (!outer_bound) {
    for (unsigned r = 0; r < inner_.size(); ++r)
      if (!inner_[r].constant_term_known_zero() && !is_zero(inner_[r].stratum(0)[0]))
        throw CompositionError("plethysm '" + name + "': inner series '" + inner_[r].name() +
                               "' has a nonzero constant term and the outer series is unbounded");
  } else {
    for (unsigned i = 1; i < *outer_bound; ++i)
      if (!is_zero(constant(i))) any_constant = true;
  }
  const unsigned max_outer = outer_bound ? (any_constant ? *outer_bound - 1 : std::min(n, *outer_bound - 1)) : n;

  // stretch(inner(i), i) truncated, extended on demand.
  std::map<unsigned, Truncated> factors;
  auto factor = [&](unsigned i, unsigned cap) -> const Truncated& {
    Truncated& t = factors[i];
    while (t.size() <= cap) {
      const unsigned d = static_cast<unsigned>(t.size());
      Stratum s;
      if (d % i == 0) {
        const Stratum& src = inner(i).stratum(d / i);
        if (!all_zero(src)) {
          s = zero_stratum(d);
          const auto& parts = PartitionTable::of(d / i);
          for (std::size_t j = 0; j < src.size(); ++j)
            if (!is_zero(src[j])) s[PartitionTable::index(parts[j].scaled(i))] = src[j];
        }
      }
      t.push_back(std::move(s));
    }
    return t;
  };

  for (unsigned d = 0; d <= max_outer; ++d) {
    const Stratum& fs = outer_.stratum(d);
    const auto& lambdas = PartitionTable::of(d);
    for (std::size_t li = 0; li < fs.size(); ++li) {
      if (is_zero(fs[li])) continue;
      const Partition& lambda = lambdas[li];
      unsigned lower_total = 0;
      std::vector<unsigned> lower;
      for (unsigned part : lambda.parts()) {
        lower.push_back(is_zero(constant(part)) ? part : 0);
        lower_total += lower.back();
      }
      if (lower_total > n) continue;

      Truncated acc(n + 1);
      acc[0] = Stratum{Rational(1)};
      std::size_t j = 0;
      for (unsigned part : lambda.parts()) {
        const unsigned cap = n - (lower_total - lower[j++]);
        const Truncated& fac = factor(part, cap);
        Truncated next(n + 1);
        for (unsigned da = 0; da <= n; ++da) {
          if (acc[da].empty()) continue;
          for (unsigned db = 0; db <= cap && da + db <= n; ++db) {
            if (fac[db].empty()) continue;
            if (next[da + db].empty()) next[da + db] = zero_stratum(da + db);
            accumulate_product(next[da + db], acc[da], da, fac[db], db);
          }
        }
        acc = std::move(next);
      }
      if (acc[n].empty()) continue;
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += fs[li] * acc[n][k];
    }
  }
  return out;
}

std::optional<unsigned> max_bound(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (!a || !b) return std::nullopt;
  return std::max(*a, *b);
}

}  // namespace

// ---------------------------------------------------------------------------

CycleIndexSeries::CycleIndexSeries()
    : node_(std::make_shared<RuleNode>(
          "0", [](unsigned n) { return zero_stratum(n); }, FixOracle([](const Partition&) { return Rational(0); }),
          0u)) {}

CycleIndexSeries CycleIndexSeries::placeholder(std::string name) {
  return CycleIndexSeries(std::make_shared<PlaceholderNode>(std::move(name)));
}

CycleIndexSeries CycleIndexSeries::from_strata(std::string name, std::function<Stratum(unsigned)> rule,
                                               std::optional<FixOracle> oracle,
                                               std::optional<unsigned> support_bound) {
  return CycleIndexSeries(std::make_shared<RuleNode>(std::move(name), std::move(rule), std::move(oracle),
                                                     support_bound));
}

CycleIndexSeries CycleIndexSeries::from_fix_rule(std::string name, FixOracle rule,
                                                 std::function<void(unsigned)> prepare) {
  return CycleIndexSeries(std::make_shared<FixRuleNode>(std::move(name), std::move(rule), std::move(prepare)));
}

Rational CycleIndexSeries::coefficient(const Partition& lambda) const {
  const unsigned n = lambda.degree();
  if (node_->bound && n >= *node_->bound) return Rational(0);
  if (n <= dense_degree_limit()) return stratum(n)[PartitionTable::index(lambda)];
  if (node_->oracle) return (*node_->oracle)(lambda) / Rational(z_of(lambda));
  throw ResourceLimitError("series '" + name() + "': coefficient at degree " + std::to_string(n) +
                           " exceeds the dense limit and no fix oracle is available");
}

Rational CycleIndexSeries::fix_count(const Partition& lambda) const {
  if (node_->bound && lambda.degree() >= *node_->bound) return Rational(0);
  if (node_->oracle) return (*node_->oracle)(lambda);
  return Rational(z_of(lambda)) * coefficient(lambda);
}

const Stratum& CycleIndexSeries::stratum(unsigned n) const { return node_->stratum(n); }

bool CycleIndexSeries::constant_term_known_zero() const {
  std::set<const detail::SeriesNode*> visiting;
  return node_->constant_known_zero(visiting);
}

bool CycleIndexSeries::has_fix_oracle() const { return node_->oracle.has_value(); }

CycleIndexSeries CycleIndexSeries::without_fix_oracle() const {
  return CycleIndexSeries(std::make_shared<ForwardNode>(*this, std::nullopt));
}

CycleIndexSeries CycleIndexSeries::with_fix_oracle(FixOracle oracle) const {
  return CycleIndexSeries(std::make_shared<ForwardNode>(*this, std::move(oracle)));
}

std::optional<unsigned> CycleIndexSeries::support_bound() const { return node_->bound; }
const std::string& CycleIndexSeries::name() const { return node_->name; }
bool CycleIndexSeries::is_placeholder() const { return node_->is_placeholder(); }

namespace {

CycleIndexSeries linear_combination(const CycleIndexSeries& f, const Rational& a, const CycleIndexSeries& g,
                                    const Rational& b, std::string name) {
  std::optional<FixOracle> oracle;
  if (f.has_fix_oracle() && g.has_fix_oracle())
    oracle = [f, g, a, b](const Partition& l) -> Rational { return a * f.fix_count(l) + b * g.fix_count(l); };
  return CycleIndexSeries(std::make_shared<LinearNode>(f, a, g, b, std::move(name), std::move(oracle),
                                                       max_bound(f.support_bound(), g.support_bound())));
}

}  // namespace

CycleIndexSeries add(const CycleIndexSeries& f, const CycleIndexSeries& g) {
  return linear_combination(f, 1, g, 1, "(" + f.name() + "+" + g.name() + ")");
}

CycleIndexSeries subtract(const CycleIndexSeries& f, const CycleIndexSeries& g) {
  return linear_combination(f, 1, g, -1, "(" + f.name() + "-" + g.name() + ")");
}

CycleIndexSeries scale(const CycleIndexSeries& f, const Rational& c) {
  return linear_combination(f, c, CycleIndexSeries(), 0, to_string(c) + "*" + f.name());
}

CycleIndexSeries multiply(const CycleIndexSeries& f, const CycleIndexSeries& g) {
  std::optional<FixOracle> oracle;
  if (f.has_fix_oracle() && g.has_fix_oracle()) {
    oracle = [f, g](const Partition& lambda) {
      Rational total = 0;
      for (const auto& sp : sub_partitions(lambda)) {
        const Rational a = f.fix_count(sp.sub);
        if (is_zero(a)) continue;
        total += Rational(sp.ways) * a * g.fix_count(sp.complement);
      }
      return total;
    };
  }
  std::optional<unsigned> bound;
  if (f.support_bound() && g.support_bound())
    bound = (*f.support_bound() == 0 || *g.support_bound() == 0) ? 0u
                                                                 : *f.support_bound() + *g.support_bound() - 1;
  return CycleIndexSeries(
      std::make_shared<ProductNode>(f, g, f.name() + "*" + g.name(), std::move(oracle), bound));
}

CycleIndexSeries stretch(const CycleIndexSeries& f, unsigned i) {
  if (i == 0) throw std::invalid_argument("stretch: factor must be positive");
  std::optional<FixOracle> oracle;
  if (f.has_fix_oracle()) {
    oracle = [f, i](const Partition& lambda) -> Rational {
      auto reduced = lambda.divided(i);
      if (!reduced) return 0;
      return Rational(ipow(Integer(i), static_cast<unsigned>(lambda.length()))) * f.fix_count(*reduced);
    };
  }
  std::optional<unsigned> bound;
  if (f.support_bound()) bound = *f.support_bound() == 0 ? 0u : (*f.support_bound() - 1) * i + 1;
  return CycleIndexSeries(std::make_shared<StretchNode>(f, i, "stretch(" + f.name() + "," + std::to_string(i) + ")",
                                                        std::move(oracle), bound));
}

CycleIndexSeries restrict(const CycleIndexSeries& f, unsigned min_degree, std::optional<unsigned> max_degree) {
  if (max_degree && *max_degree < min_degree) throw std::invalid_argument("restrict: max_degree < min_degree");
  std::optional<FixOracle> oracle;
  if (f.has_fix_oracle()) {
    oracle = [f, min_degree, max_degree](const Partition& lambda) -> Rational {
      const unsigned n = lambda.degree();
      if (n < min_degree || (max_degree && n >= *max_degree)) return 0;
      return f.fix_count(lambda);
    };
  }
  std::optional<unsigned> bound = max_degree;
  if (f.support_bound()) bound = bound ? std::min(*bound, *f.support_bound()) : *f.support_bound();
  std::string name = "restrict(" + f.name() + "," + std::to_string(min_degree) + "," +
                     (max_degree ? std::to_string(*max_degree) : std::string("inf")) + ")";
  return CycleIndexSeries(
      std::make_shared<RestrictNode>(f, min_degree, max_degree, std::move(name), std::move(oracle), bound));
}

CycleIndexSeries plethysm(const CycleIndexSeries& f, const CycleIndexSeries& g) {
  return plethysm_twisted(f, {g}, f.name() + "(" + g.name() + ")");
}

CycleIndexSeries plethysm_twisted(const CycleIndexSeries& f, std::vector<CycleIndexSeries> inner, std::string name) {
  if (inner.empty()) throw std::invalid_argument("plethysm: no inner series");
  if (name.empty()) name = f.name() + "(" + inner.front().name() + ")";
  std::optional<unsigned> bound;
  if (f.support_bound()) {
    std::optional<unsigned> inner_bound = 0u;
    for (const auto& g : inner) inner_bound = max_bound(inner_bound, g.support_bound());
    if (*f.support_bound() == 0)
      bound = 0u;
    else if (inner_bound)
      bound = (*f.support_bound() - 1) * (*inner_bound == 0 ? 0 : *inner_bound - 1) + 1;
  }
  return CycleIndexSeries(std::make_shared<PlethysmNode>(f, std::move(inner), std::move(name), bound));
}

void define_recursive(const CycleIndexSeries& placeholder, const CycleIndexSeries& body) {
  auto* node = dynamic_cast<PlaceholderNode*>(placeholder.node().get());
  if (!node) throw std::logic_error("define_recursive: '" + placeholder.name() + "' is not a placeholder");
  if (node->bound_to_body()) throw std::logic_error("define_recursive: '" + placeholder.name() + "' already defined");
  node->bind(body);
}

// ---------------------------------------------------------------------------

struct OneVariableSeries::Cache {
  std::mutex mutex;
  std::map<unsigned, Rational> values;
};

OneVariableSeries::OneVariableSeries(std::function<Rational(unsigned)> rule)
    : rule_(std::move(rule)), cache_(std::make_shared<Cache>()) {}

Rational OneVariableSeries::coefficient(unsigned n) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->values.find(n); it != cache_->values.end()) return it->second;
  }
  Rational v = rule_(n);
  std::lock_guard lock(cache_->mutex);
  cache_->values.emplace(n, v);
  return v;
}

std::vector<Rational> OneVariableSeries::coefficients(unsigned count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (unsigned n = 0; n < count; ++n) out.push_back(coefficient(n));
  return out;
}

OneVariableSeries labeled_egf(const CycleIndexSeries& f) {
  return OneVariableSeries([f](unsigned n) { return f.coefficient(Partition(std::vector<unsigned>(n, 1u))); });
}

OneVariableSeries isotype_ogf(const CycleIndexSeries& f) {
  return OneVariableSeries([f](unsigned n) {
    Rational total = 0;
    for (const auto& c : f.stratum(n)) total += c;
    return total;
  });
}

Rational labeled_count(const CycleIndexSeries& f, unsigned n) {
  return Rational(factorial(n)) * labeled_egf(f).coefficient(n);
}

// ---------------------------------------------------------------------------

SymmetricExpansion::SymmetricExpansion(unsigned variable_count,
                                       std::vector<std::map<Profile, Rational, std::greater<>>> strata)
    : variable_count_(variable_count), strata_(std::move(strata)) {}

Rational SymmetricExpansion::coefficient(Profile profile) const {
  std::sort(profile.begin(), profile.end(), std::greater<>());
  while (!profile.empty() && profile.back() == 0) profile.pop_back();
  if (profile.size() > variable_count_) return 0;
  unsigned n = 0;
  for (unsigned p : profile) n += p;
  if (n >= strata_.size()) throw std::out_of_range("expansion computed only to degree " + std::to_string(max_degree()));
  const auto& s = strata_[n];
  auto it = s.find(profile);
  return it == s.end() ? Rational(0) : it->second;
}

Rational SymmetricExpansion::total(unsigned n) const {
  Rational sum = 0;
  for (const auto& [profile, c] : strata_.at(n)) {
    // Distinct arrangements of the profile padded with zeros to k slots.
    std::map<unsigned, unsigned> counts;
    for (unsigned p : profile) ++counts[p];
    counts[0] += variable_count_ - static_cast<unsigned>(profile.size());
    Integer arrangements = factorial(variable_count_);
    for (auto [v, m] : counts) arrangements /= factorial(m);
    sum += c * Rational(arrangements);
  }
  return sum;
}

SymmetricExpansion expand_symmetric(const CycleIndexSeries& f, unsigned variables, unsigned max_degree) {
  if (variables == 0) throw std::invalid_argument("expand_symmetric: need at least one variable");
  using Monomial = std::vector<unsigned>;
  std::vector<std::map<SymmetricExpansion::Profile, Rational, std::greater<>>> strata(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) {
    const Stratum& s = f.stratum(n);
    const auto& lambdas = PartitionTable::of(n);
    std::map<Monomial, Rational> poly;
    for (std::size_t li = 0; li < s.size(); ++li) {
      if (is_zero(s[li])) continue;
      // η_k(p_λ) = ∏_j (x_1^{λ_j} + ... + x_k^{λ_j})
      std::map<Monomial, Integer> term{{Monomial(variables, 0), 1}};
      for (unsigned part : lambdas[li].parts()) {
        std::map<Monomial, Integer> next;
        for (const auto& [mono, c] : term)
          for (unsigned v = 0; v < variables; ++v) {
            Monomial m = mono;
            m[v] += part;
            next[m] += c;
          }
        term = std::move(next);
      }
      for (const auto& [mono, c] : term)
        if (std::is_sorted(mono.begin(), mono.end(), std::greater<>())) poly[mono] += s[li] * Rational(c);
    }
    for (auto& [mono, c] : poly) {
      if (is_zero(c)) continue;
      SymmetricExpansion::Profile profile = mono;
      while (!profile.empty() && profile.back() == 0) profile.pop_back();
      strata[n].emplace(std::move(profile), c);
    }
  }
  return SymmetricExpansion(variables, std::move(strata));
}

std::string format_stratum(unsigned n, const Stratum& s) {
  const auto& parts = PartitionTable::of(n);
  std::string out = std::to_string(n) + ":";
  bool first = true;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (is_zero(s[j])) continue;
    out += first ? " " : " + ";
    out += to_string(s[j]) + "*p" + parts[j].to_string();
    first = false;
  }
  if (first) out += " 0";
  return out;
}

}  // namespace gspec
