#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gspec/errors.hpp"
#include "gspec/library.hpp"
#include "gspec/oracle.hpp"

using namespace gspec;
namespace lib = gspec::library;

namespace {

const GroupElement& tau() {
  static const GroupElement t = parse_element("(1 2)", 2);
  return t;
}

std::vector<std::vector<unsigned>> profiles(unsigned n, unsigned k, unsigned largest) {
  if (n == 0) return {{}};
  if (k == 0) return {};
  std::vector<std::vector<unsigned>> out;
  for (unsigned first = std::min(n, largest); first >= 1; --first)
    for (auto rest : profiles(n - first, k - 1, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

GroupElement random_permutation(unsigned n, std::mt19937& rng) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return GroupElement(images);
}

}  // namespace

TEST_CASE("fixed-point examples") {
  const auto lists = oracle::linear_orders(true);
  CHECK(oracle::brute_fix_count(lists, GroupElement::identity(2), GroupElement::identity(3)) == 6);
  CHECK(oracle::brute_fix_count(lists, tau(), parse_element("(1 2)", 3)) == 2);
  CHECK(oracle::brute_fix_count(lists, tau(), GroupElement::identity(3)) == 0);
  CHECK(oracle::digraphs(true).enumerate(2)->size() == 4);
  CHECK(oracle::simple_graphs(true).enumerate(4)->size() == 64);
  CHECK(oracle::cyclic_orders(false).enumerate(5)->size() == 24);
  CHECK(oracle::subsets().enumerate(5)->size() == 32);
}

TEST_CASE("orbit examples") {
  CHECK(oracle::brute_orbit_count(oracle::digraphs(true), 3, true) == 13);
  CHECK(oracle::brute_orbit_count(oracle::digraphs(true), 3, false) == 16);
  CHECK(oracle::brute_orbit_count(oracle::binary_trees(true), 3, true) == 3);
  CHECK(oracle::brute_orbit_count(oracle::simple_graphs(true), 4, false) == 11);
  CHECK(oracle::brute_orbit_count(oracle::simple_graphs(true), 4, true) == 6);
  for (const auto& p : oracle::builtin_pairings())
    if (p.name != "C" && p.name != "C_rev") CHECK(oracle::brute_orbit_count(p.family, 0, true) == 1);
  CHECK(oracle::brute_orbit_count(oracle::cyclic_orders(true), 0, true) == 0);
}

TEST_CASE("partial-label examples") {
  const auto e = GroupElement::identity(1);
  CHECK(oracle::brute_partial_label_count(oracle::sets(), 4, {3, 1}, e) == 1);
  CHECK(oracle::brute_partial_label_count(oracle::linear_orders(false), 3, {2, 1}, e) == 3);
  // one color: the orbit {ab, ba} is mapped to itself by reversal
  CHECK(oracle::brute_partial_label_count(oracle::linear_orders(true), 2, {2}, tau()) == 1);
  // two colors: reversal swaps the two colored words
  CHECK(oracle::brute_partial_label_count(oracle::linear_orders(true), 2, {1, 1}, tau()) == 0);
  CHECK_THROWS_AS(oracle::brute_partial_label_count(oracle::sets(), 3, {1, 1}, e), std::invalid_argument);
}

TEST_CASE("permutation helpers") {
  for (unsigned n = 0; n <= 5; ++n) {
    std::set<std::vector<unsigned>> seen;
    std::uint64_t count = 1;
    for (unsigned i = 2; i <= n; ++i) count *= i;
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto p = oracle::permutation_by_index(n, i);
      std::vector<unsigned> images;
      for (unsigned x = 0; x < n; ++x) images.push_back(p(x));
      seen.insert(images);
    }
    CHECK(seen.size() == count);
    for (const auto& l : partitions_of(n)) CHECK(cycle_type(oracle::representative(l)) == l);
  }
}

TEST_CASE("actions are group actions and commute") {
  std::mt19937 rng(11);
  for (const auto& p : oracle::builtin_pairings()) {
    const auto& f = p.family;
    const unsigned n = std::min(4u, f.max_n);
    const auto structures = f.enumerate(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& s = (*structures)[std::uniform_int_distribution<std::size_t>(0, structures->size() - 1)(rng)];
      const auto a = random_permutation(n, rng), b = random_permutation(n, rng);
      CHECK(f.relabel(a * b, s) == f.relabel(a, f.relabel(b, s)));
      CHECK(f.relabel(GroupElement::identity(n), s) == s);
      CHECK(std::binary_search(structures->begin(), structures->end(), f.relabel(a, s)));
      for (const auto& g : f.group->elements()) {
        CHECK(f.gamma_act(g, f.relabel(a, s)) == f.relabel(a, f.gamma_act(g, s)));
        for (const auto& h : f.group->elements()) CHECK(f.gamma_act(g * h, s) == f.gamma_act(g, f.gamma_act(h, s)));
      }
    }
  }
}

TEST_CASE("enumeration limit") {
  for (const auto& p : oracle::builtin_pairings())
    CHECK_THROWS_AS(p.family.enumerate(p.family.max_n + 1), EnumerationLimitError);
  CHECK_THROWS_AS(oracle::brute_orbit_count(oracle::digraphs(false), 7, false), EnumerationLimitError);
  CHECK_THROWS_AS(oracle::digraphs(true).enumerate(6), EnumerationLimitError);
  CHECK_THROWS_AS(oracle::brute_partial_label_count(oracle::digraphs(true), 6, {6}, tau()), EnumerationLimitError);
}

TEST_CASE("streamed digraph counts agree with stored enumeration") {
  const auto stored = oracle::digraphs(true);
  auto streamed = stored;
  streamed.max_n = 3;
  for (unsigned n = 4; n <= 5; ++n) {
    for (const auto& l : partitions_of(n))
      for (const auto& g : stored.group->elements()) {
        const auto sigma = oracle::representative(l);
        CHECK(oracle::brute_fix_count(streamed, g, sigma) == oracle::brute_fix_count(stored, g, sigma));
      }
    CHECK(oracle::brute_orbit_count(streamed, n, true) == oracle::brute_orbit_count(stored, n, true));
  }
}

TEST_CASE("fix counts agree with the series") {
  for (const auto& p : oracle::builtin_pairings()) {
    const auto report = oracle::cross_check(p, 5, false);
    INFO(p.name, " ", report.mismatches.empty() ? std::string() : report.mismatches.front());
    CHECK(report.ok());
    CHECK(report.checks > 0);
  }
}

TEST_CASE("orbit counts agree with isotype series") {
  for (const auto& p : oracle::builtin_pairings()) {
    const auto report = oracle::cross_check(p, 4, true);
    INFO(p.name);
    CHECK(report.ok());
  }
}

TEST_CASE("partially labeled counts agree with the symmetric expansion") {
  for (const auto& p : oracle::builtin_pairings()) {
    for (std::size_t gi = 0; gi < p.series.group()->order(); ++gi) {
      const auto& gamma = p.series.group()->element(gi);
      const unsigned top = std::min(5u, p.family.max_n);
      for (unsigned k = 1; k <= 3; ++k) {
        const auto expansion = expand_symmetric(p.series.component_at(gi), k, top);
        for (unsigned n = 0; n <= top; ++n) {
          if (p.family.enumerate(n)->size() > 20000) continue;
          for (const auto& profile : profiles(n, k, n)) {
            INFO(p.name, " ", gamma.to_string(), " n=", n, " k=", k);
            CHECK(Rational(static_cast<long>(oracle::brute_partial_label_count(p.family, n, profile, gamma))) ==
                  expansion.coefficient(profile));
          }
        }
      }
    }
  }
}

TEST_CASE("a corrupted series is caught") {
  auto pairings = oracle::builtin_pairings();
  auto& p = pairings[3];
  REQUIRE(p.name == "L_rev");
  const auto bumped = p.series + trivial_lift(restrict(lib::set_species(), 3, 4), p.series.group());
  const oracle::Pairing broken{"broken", p.family, bumped};
  CHECK_FALSE(oracle::cross_check(broken, 4, false).ok());
}
