#include "gspec/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gspec/errors.hpp"
#include "gspec/kernels.hpp"
#include "gspec/library.hpp"

namespace gspec::oracle {

namespace {

constexpr double kFullBurnsideBudget = 2e6;

std::uint64_t small_factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

unsigned fix_limit(const StructureFamily& family) {
  return family.streamed_fix_count ? std::max(family.max_n, family.fix_max_n) : family.max_n;
}

void check_limit(const StructureFamily& family, unsigned n) {
  if (n > family.max_n)
    throw EnumerationLimitError("family '" + family.name + "' enumerates at most n=" + std::to_string(family.max_n) +
                                ", requested n=" + std::to_string(n));
}

bool is_fixed(const StructureFamily& family, const GroupElement& gamma, const GroupElement& sigma,
              const Structure& s) {
  return family.gamma_act(gamma, family.relabel(sigma, s)) == s;
}

std::uint64_t count_fixed_serial(const StructureFamily& family, const std::vector<Structure>& structures,
                                 const GroupElement& gamma, const GroupElement& sigma) {
  std::uint64_t count = 0;
  for (const auto& s : structures)
    if (is_fixed(family, gamma, sigma, s)) ++count;
  return count;
}

// Enumeration results are memoized per family instance; requests above the
// family's limit throw before anything is generated.
std::function<StructureSet(unsigned)> memoized(const StructureFamily& family,
                                               std::function<std::vector<Structure>(unsigned)> gen) {
  struct Cache {
    std::mutex mutex;
    std::map<unsigned, StructureSet> values;
  };
  auto cache = std::make_shared<Cache>();
  return [cache, gen = std::move(gen), name = family.name, max_n = family.max_n](unsigned n) {
    if (n > max_n)
      throw EnumerationLimitError("family '" + name + "' enumerates at most n=" + std::to_string(max_n) +
                                  ", requested n=" + std::to_string(n));
    {
      std::lock_guard lock(cache->mutex);
      if (auto it = cache->values.find(n); it != cache->values.end()) return it->second;
    }
    auto out = gen(n);
    std::sort(out.begin(), out.end());
    auto stored = std::make_shared<const std::vector<Structure>>(std::move(out));
    std::lock_guard lock(cache->mutex);
    return cache->values.emplace(n, stored).first->second;
  };
}

Structure identity_action(const GroupElement&, const Structure& s) { return s; }

Structure relabel_all(const GroupElement& sigma, const Structure& s) {
  Structure out = s;
  for (auto& x : out)
    if (x >= 0) x = static_cast<int>(sigma(static_cast<unsigned>(x)));
  return out;
}

std::vector<std::vector<int>> all_permutations(unsigned n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---- trees: preorder encoding, node = label followed by its `arity`
// children, an empty child = -1.

std::vector<Structure> tree_shapes(unsigned nodes, unsigned arity) {
  if (nodes == 0) return {Structure{-1}};
  std::vector<Structure> out;
  // distribute nodes-1 among the children
  std::vector<unsigned> split(arity, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned child, unsigned remaining) {
    if (child + 1 == arity) {
      split[child] = remaining;
      std::vector<Structure> acc{Structure{0}};
      for (unsigned c = 0; c < arity; ++c) {
        std::vector<Structure> next;
        for (const auto& prefix : acc)
          for (const auto& sub : tree_shapes(split[c], arity)) {
            Structure s = prefix;
            s.insert(s.end(), sub.begin(), sub.end());
            next.push_back(std::move(s));
          }
        acc = std::move(next);
      }
      out.insert(out.end(), acc.begin(), acc.end());
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      split[child] = k;
      rec(child + 1, remaining - k);
    }
  };
  rec(0, nodes - 1);
  return out;
}

constexpr unsigned kMaxArity = 8;

// Reads one subtree starting at pos, returning its end.
std::size_t subtree_end(const Structure& s, std::size_t pos, unsigned arity) {
  if (s[pos] < 0) return pos + 1;
  std::size_t p = pos + 1;
  for (unsigned c = 0; c < arity; ++c) p = subtree_end(s, p, arity);
  return p;
}

// Child at position j moves to position perm(j), recursively.
void permute_children(const Structure& s, std::size_t pos, unsigned arity, const GroupElement& perm, Structure& out) {
  if (s[pos] < 0) {
    out.push_back(-1);
    return;
  }
  out.push_back(s[pos]);
  std::array<std::pair<std::size_t, std::size_t>, kMaxArity> children;
  std::size_t p = pos + 1;
  for (unsigned c = 0; c < arity; ++c) {
    const std::size_t e = subtree_end(s, p, arity);
    children[perm(c)] = {p, e};
    p = e;
  }
  for (unsigned c = 0; c < arity; ++c) permute_children(s, children[c].first, arity, perm, out);
}

// Labeled trees are stored as [shape id, label of preorder node 0, 1, ...];
// the action of each γ on shapes is tabulated once per size.
struct TreeTables {
  std::vector<std::vector<int>> image_shape;               // [γ][shape]
  std::vector<std::vector<std::vector<int>>> new_position;  // [γ][shape][preorder position]
};

TreeTables build_tree_tables(unsigned n, unsigned arity, const FiniteGroup& group) {
  auto shapes = tree_shapes(n, arity);
  std::sort(shapes.begin(), shapes.end());
  TreeTables t;
  for (const auto& gamma : group.elements()) {
    std::vector<int> images;
    std::vector<std::vector<int>> positions;
    for (auto shape : shapes) {
      int next = 0;
      for (auto& x : shape)
        if (x >= 0) x = next++;
      Structure moved;
      permute_children(shape, 0, arity, gamma, moved);
      std::vector<int> position(n);
      int j = 0;
      for (auto& x : moved)
        if (x >= 0) {
          position[static_cast<std::size_t>(x)] = j++;
          x = 0;
        }
      images.push_back(static_cast<int>(std::lower_bound(shapes.begin(), shapes.end(), moved) - shapes.begin()));
      positions.push_back(std::move(position));
    }
    t.image_shape.push_back(std::move(images));
    t.new_position.push_back(std::move(positions));
  }
  return t;
}

StructureFamily tree_family(std::string name, unsigned arity, GroupPtr group, unsigned max_n) {
  if (arity == 0 || arity > kMaxArity) throw std::invalid_argument("tree_family: unsupported arity");
  StructureFamily f;
  f.name = std::move(name);
  f.group = group;
  f.max_n = max_n;
  struct Cache {
    std::mutex mutex;
    std::map<unsigned, std::shared_ptr<const TreeTables>> tables;
  };
  auto cache = std::make_shared<Cache>();
  auto tables = [cache, arity, group](unsigned n) {
    std::lock_guard lock(cache->mutex);
    auto& slot = cache->tables[n];
    if (!slot) slot = std::make_shared<const TreeTables>(build_tree_tables(n, arity, *group));
    return slot;
  };
  f.enumerate = memoized(f, [arity](unsigned n) {
    std::vector<Structure> out;
    const auto shape_count = tree_shapes(n, arity).size();
    const auto perms = all_permutations(n);
    for (std::size_t id = 0; id < shape_count; ++id)
      for (const auto& perm : perms) {
        Structure s{static_cast<int>(id)};
        s.insert(s.end(), perm.begin(), perm.end());
        out.push_back(std::move(s));
      }
    return out;
  });
  f.relabel = [](const GroupElement& sigma, const Structure& s) {
    Structure out = s;
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = static_cast<int>(sigma(static_cast<unsigned>(out[i])));
    return out;
  };
  f.gamma_act = [tables, group](const GroupElement& gamma, const Structure& s) {
    if (gamma.is_identity()) return s;
    const auto t = tables(static_cast<unsigned>(s.size() - 1));
    const std::size_t g = group->index_of(gamma);
    const auto shape = static_cast<std::size_t>(s[0]);
    Structure out(s.size());
    out[0] = t->image_shape[g][shape];
    const auto& position = t->new_position[g][shape];
    for (std::size_t i = 0; i + 1 < s.size(); ++i) out[1 + static_cast<std::size_t>(position[i])] = s[1 + i];
    return out;
  };
  return f;
}

// ---- graphs: [n, mask], bit i of mask = presence of the i-th vertex pair.

constexpr unsigned kMaxPairVertices = 8;

struct SlotTable {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  int slot[kMaxPairVertices][kMaxPairVertices];
};

const SlotTable& slot_table(unsigned n, bool directed) {
  static const auto tables = [] {
    std::array<std::array<SlotTable, kMaxPairVertices + 1>, 2> t{};
    for (int d = 0; d < 2; ++d)
      for (unsigned m = 0; m <= kMaxPairVertices; ++m) {
        auto& table = t[d][m];
        for (auto& row : table.slot) std::fill(std::begin(row), std::end(row), -1);
        for (unsigned u = 0; u < m; ++u)
          for (unsigned v = 0; v < m; ++v)
            if (d ? u != v : u < v) {
              table.slot[u][v] = static_cast<int>(table.pairs.size());
              if (!d) table.slot[v][u] = table.slot[u][v];
              table.pairs.emplace_back(u, v);
            }
      }
    return t;
  }();
  return tables[directed ? 1 : 0][n];
}

// Visits all 2^slots masks. γ · F[σ] permutes the arc slots, so its action on
// a mask is assembled from three 10-bit lookup tables, each built by applying
// the family's own relabel and gamma_act to single-arc structures. Results
// are cached per (γ, σ).
std::function<std::uint64_t(const GroupElement&, const GroupElement&)> streamed_arc_count(StructureFamily family) {
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, std::uint64_t> values;
  };
  auto cache = std::make_shared<Cache>();
  return [family = std::move(family), cache](const GroupElement& gamma, const GroupElement& sigma) -> std::uint64_t {
    const unsigned n = sigma.degree();
    const auto key = std::make_pair(std::vector<unsigned>(gamma.images().begin(), gamma.images().end()),
                                    std::vector<unsigned>(sigma.images().begin(), sigma.images().end()));
    {
      std::lock_guard lock(cache->mutex);
      if (auto it = cache->values.find(key); it != cache->values.end()) return it->second;
    }
    const unsigned slots = static_cast<unsigned>(slot_table(n, true).pairs.size());
    if (slots > 30) throw EnumerationLimitError("streamed count supports at most 30 arc slots");
    constexpr unsigned kChunk = 10;
    std::array<std::vector<std::uint32_t>, 3> tables;
    for (unsigned c = 0; c < 3; ++c) {
      tables[c].assign(1u << kChunk, 0);
      for (unsigned b = 0; b < kChunk; ++b) {
        const unsigned slot = c * kChunk + b;
        if (slot >= slots) break;
        const Structure single{static_cast<int>(n), static_cast<int>(std::uint32_t{1} << slot)};
        const auto image = static_cast<std::uint32_t>(family.gamma_act(gamma, family.relabel(sigma, single))[1]);
        for (std::uint32_t v = 0; v < (1u << kChunk); ++v)
          if (v >> b & 1) tables[c][v] |= image;
      }
    }
    const std::uint32_t upper_count = std::uint32_t{1} << (slots > kChunk ? slots - kChunk : 0);
    const std::uint32_t lower_count = std::uint32_t{1} << std::min(slots, kChunk);
    const std::uint64_t count = kernels::indexed_sum(upper_count, [&](std::size_t upper) -> std::uint64_t {
      const std::uint32_t high = static_cast<std::uint32_t>(upper) << kChunk;
      const std::uint32_t partial = tables[1][high >> kChunk & 1023] | tables[2][high >> (2 * kChunk)];
      std::uint64_t fixed = 0;
      for (std::uint32_t low = 0; low < lower_count; ++low) fixed += (tables[0][low] | partial) == (high | low);
      return fixed;
    });
    std::lock_guard lock(cache->mutex);
    cache->values.emplace(key, count);
    return count;
  };
}

StructureFamily pair_family(std::string name, bool directed, bool with_action, unsigned max_n) {
  StructureFamily f;
  f.name = std::move(name);
  f.group = with_action ? symmetric_group(2) : trivial_group();
  f.max_n = max_n;
  if (slot_table(max_n, directed).pairs.size() > 31) throw std::invalid_argument("pair_family: too many vertex pairs");
  f.enumerate = memoized(f, [directed](unsigned n) {
    const std::uint32_t slots = static_cast<std::uint32_t>(slot_table(n, directed).pairs.size());
    std::vector<Structure> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask)
      out.push_back(Structure{static_cast<int>(n), static_cast<int>(mask)});
    return out;
  });
  f.relabel = [directed](const GroupElement& sigma, const Structure& s) {
    const auto& table = slot_table(static_cast<unsigned>(s[0]), directed);
    const auto mask = static_cast<std::uint32_t>(s[1]);
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < table.pairs.size(); ++i)
      if (mask >> i & 1) out |= std::uint32_t{1} << table.slot[sigma(table.pairs[i].first)][sigma(table.pairs[i].second)];
    return Structure{s[0], static_cast<int>(out)};
  };
  f.gamma_act = [directed](const GroupElement& gamma, const Structure& s) {
    if (gamma.is_identity()) return s;
    const auto& table = slot_table(static_cast<unsigned>(s[0]), directed);
    const auto mask = static_cast<std::uint32_t>(s[1]);
    std::uint32_t out = 0;
    if (directed) {  // converse
      for (std::size_t i = 0; i < table.pairs.size(); ++i)
        if (mask >> i & 1) out |= std::uint32_t{1} << table.slot[table.pairs[i].second][table.pairs[i].first];
    } else {  // complement
      out = ~mask & ((std::uint32_t{1} << table.pairs.size()) - 1);
    }
    return Structure{s[0], static_cast<int>(out)};
  };
  return f;
}

Structure canonical_cycle(Structure s) {
  if (s.empty()) return s;
  std::rotate(s.begin(), std::min_element(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

GroupElement permutation_by_index(unsigned n, std::uint64_t index) {
  std::vector<unsigned> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<unsigned> images;
  for (unsigned i = n; i >= 1; --i) {
    const std::uint64_t f = small_factorial(i - 1);
    const auto pick = static_cast<std::size_t>(index / f);
    index %= f;
    images.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return GroupElement(std::move(images));
}

GroupElement representative(const Partition& lambda) {
  std::vector<std::vector<unsigned>> cycles;
  unsigned next = 1;
  for (unsigned part : lambda.parts()) {
    std::vector<unsigned> cyc;
    for (unsigned i = 0; i < part; ++i) cyc.push_back(next++);
    cycles.push_back(std::move(cyc));
  }
  return GroupElement::from_cycles(lambda.degree(), cycles);
}

std::uint64_t brute_fix_count(const StructureFamily& family, const GroupElement& gamma, const GroupElement& sigma) {
  const unsigned n = sigma.degree();
  if (n > family.max_n && n <= fix_limit(family)) {
    if (!family.group->contains(gamma))
      throw GroupMismatchError("element " + gamma.to_string() + " not in the group of family '" + family.name + "'");
    return family.streamed_fix_count(gamma, sigma);
  }
  check_limit(family, n);
  if (!family.group->contains(gamma))
    throw GroupMismatchError("element " + gamma.to_string() + " not in the group of family '" + family.name + "'");
  const auto set = family.enumerate(n);
  const auto& structures = *set;
  return kernels::indexed_sum(structures.size(), [&](std::size_t i) -> std::uint64_t {
    return is_fixed(family, gamma, sigma, structures[i]) ? 1 : 0;
  });
}

std::uint64_t brute_orbit_count(const StructureFamily& family, unsigned n, bool quotient_by_gamma) {
  const bool streamed = n > family.max_n && n <= fix_limit(family);
  if (!streamed) check_limit(family, n);
  const StructureSet set = streamed ? std::make_shared<const std::vector<Structure>>() : family.enumerate(n);
  const auto& structures = *set;
  std::vector<GroupElement> gammas;
  if (quotient_by_gamma)
    gammas.assign(family.group->elements().begin(), family.group->elements().end());
  else
    gammas.push_back(family.group->identity());
  const std::uint64_t perms = small_factorial(n);
  std::uint64_t total = 0;
  if (!streamed &&
      static_cast<double>(perms) * static_cast<double>(structures.size()) * static_cast<double>(gammas.size()) <=
          kFullBurnsideBudget) {
    total = kernels::indexed_sum(perms, [&](std::size_t i) {
      const GroupElement sigma = permutation_by_index(n, i);
      std::uint64_t sum = 0;
      for (const auto& gamma : gammas) sum += count_fixed_serial(family, structures, gamma, sigma);
      return sum;
    });
  } else {
    // Fixed-point counts are constant on relabeling conjugacy classes.
    for (const auto& lambda : partitions_of(n)) {
      const GroupElement sigma = representative(lambda);
      const std::uint64_t class_size = perms / z_of(lambda).get_ui();
      for (const auto& gamma : gammas) total += class_size * brute_fix_count(family, gamma, sigma);
    }
  }
  const std::uint64_t denom = perms * gammas.size();
  if (total % denom != 0)
    throw InconsistentSeriesError("Burnside sum for family '" + family.name + "' is not divisible by the group order");
  return total / denom;
}

std::uint64_t brute_partial_label_count(const StructureFamily& family, unsigned n, const std::vector<unsigned>& profile,
                                        const GroupElement& gamma) {
  check_limit(family, n);
  if (std::accumulate(profile.begin(), profile.end(), 0u) != n)
    throw std::invalid_argument("profile does not sum to n");
  // color of each label: the first profile[0] labels get color 0, and so on
  std::vector<unsigned> color;
  for (unsigned c = 0; c < profile.size(); ++c) color.insert(color.end(), profile[c], c);
  std::vector<GroupElement> young;
  for (std::uint64_t i = 0; i < small_factorial(n); ++i) {
    GroupElement sigma = permutation_by_index(n, i);
    bool keeps = true;
    for (unsigned x = 0; x < n && keeps; ++x) keeps = color[sigma(x)] == color[x];
    if (keeps) young.push_back(std::move(sigma));
  }
  auto canonical = [&](const Structure& s) {
    Structure best = s;
    for (const auto& sigma : young) best = std::min(best, family.relabel(sigma, s));
    return best;
  };
  std::set<Structure> fixed_orbits;
  const auto set = family.enumerate(n);
  for (const auto& s : *set) {
    const Structure c = canonical(s);
    if (canonical(family.gamma_act(gamma, s)) == c) fixed_orbits.insert(c);
  }
  return fixed_orbits.size();
}

StructureFamily sets() {
  StructureFamily f;
  f.name = "sets";
  f.group = trivial_group();
  f.max_n = 12;
  f.enumerate = memoized(f, [](unsigned) { return std::vector<Structure>{Structure{}}; });
  f.relabel = identity_action;
  f.gamma_act = identity_action;
  return f;
}

StructureFamily subsets() {
  StructureFamily f;
  f.name = "subsets";
  f.group = trivial_group();
  f.max_n = 10;
  f.enumerate = memoized(f, [](unsigned n) {
    std::vector<Structure> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Structure s;
      for (unsigned i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(static_cast<int>(i));
      out.push_back(std::move(s));
    }
    return out;
  });
  f.relabel = [](const GroupElement& sigma, const Structure& s) {
    Structure out = relabel_all(sigma, s);
    std::sort(out.begin(), out.end());
    return out;
  };
  f.gamma_act = identity_action;
  return f;
}

StructureFamily linear_orders(bool with_reversal) {
  StructureFamily f;
  f.name = with_reversal ? "linear_orders_rev" : "linear_orders";
  f.group = with_reversal ? symmetric_group(2) : trivial_group();
  f.max_n = 7;
  f.enumerate = memoized(f, [](unsigned n) {
    std::vector<Structure> out;
    for (auto& p : all_permutations(n)) out.push_back(std::move(p));
    return out;
  });
  f.relabel = relabel_all;
  f.gamma_act = [](const GroupElement& gamma, const Structure& s) {
    if (gamma.is_identity()) return s;
    return Structure(s.rbegin(), s.rend());
  };
  return f;
}

StructureFamily cyclic_orders(bool with_reversal) {
  StructureFamily f;
  f.name = with_reversal ? "cyclic_orders_rev" : "cyclic_orders";
  f.group = with_reversal ? symmetric_group(2) : trivial_group();
  f.max_n = 7;
  f.enumerate = memoized(f, [](unsigned n) {
    std::vector<Structure> out;
    if (n == 0) return out;
    for (const auto& p : all_permutations(n))
      if (p[0] == 0) out.push_back(p);
    return out;
  });
  f.relabel = [](const GroupElement& sigma, const Structure& s) { return canonical_cycle(relabel_all(sigma, s)); };
  f.gamma_act = [](const GroupElement& gamma, const Structure& s) {
    if (gamma.is_identity()) return s;
    return canonical_cycle(Structure(s.rbegin(), s.rend()));
  };
  return f;
}

StructureFamily simple_graphs(bool with_complement) {
  return pair_family(with_complement ? "graphs_complement" : "graphs", false, with_complement, 6);
}

StructureFamily digraphs(bool with_converse) {
  StructureFamily f = pair_family(with_converse ? "digraphs_converse" : "digraphs", true, with_converse, 5);
  f.fix_max_n = 6;
  f.streamed_fix_count = streamed_arc_count(f);
  return f;
}

StructureFamily binary_trees(bool with_reversal) {
  return tree_family(with_reversal ? "binary_trees_rev" : "binary_trees", 2,
                     with_reversal ? symmetric_group(2) : trivial_group(), 7);
}

StructureFamily ternary_trees(GroupPtr interchange) {
  if (interchange->degree() != 3) throw std::invalid_argument("ternary_trees: interchange group must act on 3 points");
  std::string name = "ternary_trees:" + interchange->name();
  return tree_family(std::move(name), 3, std::move(interchange), 6);
}

std::vector<Pairing> builtin_pairings() {
  auto plain = [](const CycleIndexSeries& f) { return trivial_lift(f, trivial_group()); };
  return {
      {"E", sets(), plain(library::set_species())},
      {"P", subsets(), plain(library::subsets())},
      {"L", linear_orders(false), plain(library::linear())},
      {"L_rev", linear_orders(true), library::linear_with_reversal()},
      {"C", cyclic_orders(false), plain(library::cyclic())},
      {"C_rev", cyclic_orders(true), library::cyclic_with_reversal()},
      {"graph", simple_graphs(true), library::graph_gcis()},
      {"digraph", digraphs(true), library::digraph_gcis()},
      {"binary_tree_rev", binary_trees(true), library::binary_trees_with_reversal()},
      {"ternary_tree:S3", ternary_trees(symmetric_group(3)), library::kary_trees_with_interchange(symmetric_group(3))},
      {"ternary_tree:C3", ternary_trees(cyclic_group(3)), library::kary_trees_with_interchange(cyclic_group(3))},
  };
}

CheckReport cross_check(const Pairing& pairing, unsigned max_n, bool orbits) {
  const auto& family = pairing.family;
  const auto& series = pairing.series;
  CheckReport report;
  report.name = pairing.name;
  report.max_n = std::min(max_n, fix_limit(family));
  auto mismatch = [&](const std::string& what, const std::string& expected, const std::string& got) {
    report.mismatches.push_back(what + ": brute force " + expected + ", series " + got);
  };
  const auto& group = *series.group();
  if (group.order() != family.group->order())
    throw GroupMismatchError("pairing '" + pairing.name + "': family and series groups differ");
  for (unsigned n = 0; n <= report.max_n; ++n) {
    // a second representative of each class: conjugate by the reversing permutation
    const GroupElement flip = permutation_by_index(n, n == 0 ? 0 : small_factorial(n) - 1);
    for (const auto& lambda : partitions_of(n)) {
      const GroupElement sigma = representative(lambda);
      const GroupElement other = flip * sigma * flip.inverse();
      for (std::size_t gi = 0; gi < group.order(); ++gi) {
        const GroupElement& gamma = group.element(gi);
        const Rational expected = series.component_at(gi).fix_count(lambda);
        const std::uint64_t a = brute_fix_count(family, gamma, sigma);
        const std::uint64_t b = brute_fix_count(family, gamma, other);
        report.checks += 2;
        const std::string where = "fix " + gamma.to_string() + " " + lambda.to_string();
        if (Rational(Integer(static_cast<unsigned long>(a))) != expected)
          mismatch(where, std::to_string(a), to_string(expected));
        if (a != b) mismatch(where + " (second representative)", std::to_string(b), std::to_string(a));
      }
    }
    if (!orbits) continue;
    const std::pair<bool, CycleIndexSeries> cases[] = {{false, series.identity_component()},
                                                       {true, quotient(series)}};
    for (const auto& [by_gamma, f] : cases) {
      const std::uint64_t brute = brute_orbit_count(family, n, by_gamma);
      const Rational got = isotype_ogf(f).coefficient(n);
      ++report.checks;
      if (Rational(Integer(static_cast<unsigned long>(brute))) != got)
        mismatch(std::string(by_gamma ? "quotient" : "isotype") + " n=" + std::to_string(n), std::to_string(brute),
                 to_string(got));
    }
  }
  return report;
}

}  // namespace gspec::oracle
