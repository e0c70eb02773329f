#include "gspec/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gspec {

GroupElement::GroupElement(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("group element is not a bijection");
    seen[x] = true;
  }
}

GroupElement GroupElement::identity(unsigned degree) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return GroupElement(std::move(img));
}

GroupElement GroupElement::from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (unsigned p : cyc) {
      if (p < 1 || p > degree) throw std::invalid_argument("cycle point " + std::to_string(p) + " out of range");
      if (used[p - 1]) throw std::invalid_argument("point " + std::to_string(p) + " repeated in cycles");
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
  }
  return GroupElement(std::move(img));
}

bool GroupElement::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

GroupElement GroupElement::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return GroupElement(std::move(inv));
}

std::vector<std::vector<unsigned>> GroupElement::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> cyc;
    for (unsigned x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::uint64_t GroupElement::order() const { return cycle_type(*this).order(); }

std::string GroupElement::to_string() const {
  std::string s;
  for (const auto& cyc : cycles()) {
    if (cyc.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cyc[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("product of elements of different degree");
  std::vector<unsigned> img(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return GroupElement(std::move(img));
}

GroupElement element_power(const GroupElement& g, std::uint64_t i) {
  GroupElement result = GroupElement::identity(g.degree());
  GroupElement base = g;
  i %= g.order();
  while (i) {
    if (i & 1) result = result * base;
    base = base * base;
    i >>= 1;
  }
  return result;
}

Partition cycle_type(const GroupElement& g) {
  std::vector<unsigned> parts;
  for (const auto& c : g.cycles()) parts.push_back(static_cast<unsigned>(c.size()));
  return Partition(std::move(parts));
}

GroupElement parse_element(std::string_view text, unsigned degree) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in element '" + std::string(text) + "'");
    ++i;
    std::vector<unsigned> cyc;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw std::invalid_argument("unexpected character in element '" + std::string(text) + "'");
      unsigned v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + static_cast<unsigned>(text[i++] - '0');
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return GroupElement::from_cycles(degree, cycles);
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g)
    throw std::out_of_range("element " + g.to_string() + " is not in group " + name_);
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteGroup::contains(const GroupElement& g) const {
  return g.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t FiniteGroup::product_index(std::size_t a, std::size_t b) const {
  return index_of(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::power_index(std::size_t a, std::uint64_t i) const {
  return index_of(element_power(elements_[a], i));
}

bool FiniteGroup::conjugate(std::size_t a, std::size_t b) const {
  for (const auto& g : elements_)
    if (g * elements_[a] * g.inverse() == elements_[b]) return true;
  return false;
}

GroupPtr FiniteGroup::generated(unsigned degree, const std::vector<GroupElement>& gens, std::string name) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                                  ", expected " + std::to_string(degree));
  std::set<GroupElement> seen{GroupElement::identity(degree)};
  std::deque<GroupElement> frontier{GroupElement::identity(degree)};
  while (!frontier.empty()) {
    GroupElement x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      GroupElement y = g * x;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->elements_.assign(seen.begin(), seen.end());
  group->identity_ = group->index_of(GroupElement::identity(degree));
  if (name.empty()) {
    name = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) name += (i ? ";" : "") + gens[i].to_string();
    name += ">@" + std::to_string(degree);
  }
  group->name_ = std::move(name);
  return group;
}

GroupPtr symmetric_group(unsigned k) {
  if (k == 0) throw std::invalid_argument("symmetric_group: k must be positive");
  std::vector<GroupElement> gens;
  if (k >= 2) {
    gens.push_back(GroupElement::from_cycles(k, {{1, 2}}));
    std::vector<unsigned> cyc(k);
    std::iota(cyc.begin(), cyc.end(), 1u);
    if (k >= 3) gens.push_back(GroupElement::from_cycles(k, {cyc}));
  }
  return FiniteGroup::generated(k, gens, "S" + std::to_string(k));
}

GroupPtr cyclic_group(unsigned k) {
  if (k == 0) throw std::invalid_argument("cyclic_group: k must be positive");
  std::vector<unsigned> cyc(k);
  std::iota(cyc.begin(), cyc.end(), 1u);
  std::vector<GroupElement> gens;
  if (k >= 2) gens.push_back(GroupElement::from_cycles(k, {cyc}));
  return FiniteGroup::generated(k, gens, "C" + std::to_string(k));
}

GroupPtr trivial_group() { return FiniteGroup::generated(1, {}, "1"); }

GroupPtr group_from_generators(unsigned degree, const std::vector<GroupElement>& gens) {
  return FiniteGroup::generated(degree, gens);
}

GroupPtr parse_group(std::string_view text) {
  auto number = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("bad group '" + std::string(text) + "'");
    return static_cast<unsigned>(std::stoul(std::string(s)));
  };
  if (text == "1") return trivial_group();
  if (!text.empty() && text.front() == 'S') return symmetric_group(number(text.substr(1)));
  if (!text.empty() && text.front() == 'C') return cyclic_group(number(text.substr(1)));
  if (!text.empty() && text.front() == '<') {
    const auto close = text.find(">@");
    if (close == std::string_view::npos) throw std::invalid_argument("bad group '" + std::string(text) + "'");
    const unsigned degree = number(text.substr(close + 2));
    std::vector<GroupElement> gens;
    std::string_view body = text.substr(1, close - 1);
    while (!body.empty()) {
      const auto semi = body.find(';');
      gens.push_back(parse_element(body.substr(0, semi), degree));
      if (semi == std::string_view::npos) break;
      body.remove_prefix(semi + 1);
    }
    return group_from_generators(degree, gens);
  }
  throw std::invalid_argument("unknown group '" + std::string(text) + "'");
}

}  // namespace gspec
