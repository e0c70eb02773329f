#include "gspec/partition.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace gspec {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition::Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

Partition Partition::from_multiplicities(const std::map<unsigned, unsigned>& mult) {
  std::vector<unsigned> parts;
  for (auto [size, count] : mult) parts.insert(parts.end(), count, size);
  return Partition(std::move(parts));
}

unsigned Partition::multiplicity(unsigned i) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<unsigned, unsigned> Partition::multiplicities() const {
  std::map<unsigned, unsigned> m;
  for (unsigned p : parts_) ++m[p];
  return m;
}

std::uint64_t Partition::order() const {
  std::uint64_t r = 1;
  for (unsigned p : parts_) r = std::lcm(r, static_cast<std::uint64_t>(p));
  return r;
}

Partition Partition::merged(const Partition& other) const {
  Partition out;
  out.parts_.resize(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), out.parts_.begin(),
             std::greater<>());
  out.degree_ = degree_ + other.degree_;
  return out;
}

Partition Partition::scaled(unsigned k) const {
  Partition out = *this;
  for (auto& p : out.parts_) p *= k;
  out.degree_ *= k;
  return out;
}

std::optional<Partition> Partition::divided(unsigned k) const {
  Partition out = *this;
  for (auto& p : out.parts_) {
    if (p % k != 0) return std::nullopt;
    p /= k;
  }
  out.degree_ /= k;
  return out;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition parse_partition(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("partition must be bracketed: '" + std::string(text) + "'");
  std::vector<unsigned> parts;
  std::string body = t.substr(1, t.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad partition part '" + item + "'");
      parts.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (body.back() == ',') throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

Integer z_of(const Partition& lambda) {
  Integer z = 1;
  for (auto [i, m] : lambda.multiplicities()) z *= ipow(Integer(i), m) * factorial(m);
  return z;
}

namespace {

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  generate(n, n, current, out);
  return out;
}

Partition power_cycle_type(const Partition& lambda, unsigned d) {
  if (d == 0) throw std::invalid_argument("power_cycle_type: exponent must be positive");
  std::vector<unsigned> parts;
  for (unsigned c : lambda.parts()) {
    const unsigned g = std::gcd(c, d);
    parts.insert(parts.end(), g, c / g);
  }
  return Partition(std::move(parts));
}

std::vector<SubPartition> sub_partitions(const Partition& lambda) {
  const auto mult = lambda.multiplicities();
  std::vector<std::pair<unsigned, unsigned>> entries(mult.begin(), mult.end());
  std::vector<SubPartition> out;
  std::vector<unsigned> chosen(entries.size(), 0);
  while (true) {
    std::map<unsigned, unsigned> sub, comp;
    Integer ways = 1;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const auto [size, count] = entries[j];
      if (chosen[j]) sub[size] = chosen[j];
      if (count - chosen[j]) comp[size] = count - chosen[j];
      ways *= binomial(count, chosen[j]);
    }
    out.push_back({Partition::from_multiplicities(sub), Partition::from_multiplicities(comp), ways});
    std::size_t j = 0;
    while (j < entries.size() && chosen[j] == entries[j].second) chosen[j++] = 0;
    if (j == entries.size()) break;
    ++chosen[j];
  }
  return out;
}

namespace {

struct TableStore {
  std::shared_mutex mutex;
  std::vector<std::unique_ptr<const std::vector<Partition>>> by_degree;
};

TableStore& store() {
  static TableStore s;
  return s;
}

}  // namespace

const std::vector<Partition>& PartitionTable::of(unsigned n) {
  auto& s = store();
  {
    std::shared_lock lock(s.mutex);
    if (n < s.by_degree.size()) return *s.by_degree[n];
  }
  std::unique_lock lock(s.mutex);
  while (s.by_degree.size() <= n)
    s.by_degree.push_back(std::make_unique<const std::vector<Partition>>(
        partitions_of(static_cast<unsigned>(s.by_degree.size()))));
  return *s.by_degree[n];
}

std::size_t PartitionTable::index(const Partition& lambda) {
  const auto& list = of(lambda.degree());
  auto it = std::lower_bound(list.begin(), list.end(), lambda, std::greater<>());
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace gspec
