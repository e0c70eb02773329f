#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gspec/errors.hpp"
#include "gspec/expr.hpp"

using namespace gspec;
namespace lib = gspec::library;

namespace {

CycleIndexSeries plain(std::string_view text) { return std::get<CycleIndexSeries>(evaluate_expression(text)); }
GroupCycleIndexSeries gamma(std::string_view text) {
  return std::get<GroupCycleIndexSeries>(evaluate_expression(text));
}

bool same(const CycleIndexSeries& f, const CycleIndexSeries& g, unsigned max_degree = 7) {
  for (unsigned n = 0; n <= max_degree; ++n)
    if (f.stratum(n) != g.stratum(n)) return false;
  return true;
}

std::size_t error_position(std::string_view text) {
  try {
    evaluate_expression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for ", text);
  return 0;
}

}  // namespace

TEST_CASE("arithmetic") {
  const auto e = lib::set_species(), x = lib::singleton(), l = lib::linear();
  CHECK(same(plain("E"), e));
  CHECK(same(plain("E*E"), lib::subsets()));
  CHECK(same(plain("E + X*L"), e + x * l));
  CHECK(same(plain("L - 1"), restrict(l, 1)));
  CHECK(same(plain("-X"), scale(x, Rational(-1))));
  CHECK(same(plain("3"), scale(lib::one(), Rational(3))));
  CHECK(same(plain("0"), lib::zero()));
}

TEST_CASE("precedence and associativity") {
  const auto e = lib::set_species(), x = lib::singleton(), c = lib::cyclic();
  CHECK(same(plain("X + E*C"), x + e * c));
  CHECK(same(plain("(X + E)*C"), (x + e) * c));
  CHECK(same(plain("E - X - X"), (e - x) - x));
  CHECK(same(plain("E - (X - X)"), e));
  CHECK(same(plain("-X*E"), scale(x * e, Rational(-1))));
  // composition binds tighter than product
  CHECK(same(plain("X*E(X)"), x * plethysm(e, x)));
  CHECK(same(plain("E(C)(X)"), plethysm(plethysm(e, c), x)));
  // box is loosest
  const auto graphs = plain("P box E_2*E");
  for (unsigned n = 0; n <= 6; ++n) CHECK(labeled_count(graphs, n) == Rational(ipow(Integer(2), n * (n - 1) / 2)));
}

TEST_CASE("restrict, quotient, let") {
  CHECK(same(plain("restrict(L, 2, 3)"), lib::linear_of_length(2)));
  CHECK(same(plain("restrict(E, 2)"), restrict(lib::set_species(), 2)));
  CHECK(same(plain("quotient(L_rev)"), quotient(lib::linear_with_reversal())));
  CHECK(same(plain("quotient(E)"), lib::set_species()));
  CHECK(same(plain("let R = X + E_2(R) in R"), lib::binary_leaf_trees(), 8));
  CHECK(same(plain("let A = X*E(A) in let B = A*A in B"), [] {
    const auto a = CycleIndexSeries::placeholder();
    define_recursive(a, lib::singleton() * plethysm(lib::set_species(), a));
    return a * a;
  }()));
  // shadowing
  CHECK(same(plain("let A = X in let A = E in A"), lib::set_species()));
}

TEST_CASE("Γ-species expressions") {
  const auto bt = gamma("let B = 1 + X*restrict(L_rev,2,3)(B) in B");
  CHECK(isotype_ogf(quotient(bt)).coefficients(10) == std::vector<Rational>{1, 1, 1, 3, 7, 22, 66, 217, 715, 2438});
  const auto ref = lib::binary_trees_with_reversal();
  for (std::size_t i = 0; i < 2; ++i) CHECK(same(bt.component_at(i), ref.component_at(i)));
  const auto t = gamma("let T = 1 + X*L_k_interchange:S3(T) in T");
  CHECK(t.group()->order() == 6);
  CHECK(isotype_ogf(quotient(t)).coefficients(7) == std::vector<Rational>{1, 1, 1, 3, 11, 49, 244});
  const auto lifted = gamma("E + L_rev");
  CHECK(same(lifted.component(parse_element("(1 2)", 2)),
             lib::set_species() + lib::linear_with_reversal().component(parse_element("(1 2)", 2))));
  const auto g = gamma("restrict(L_rev,2,3)(E) box E_2*E");
  const auto graphs = lib::graph_gcis();
  for (std::size_t i = 0; i < 2; ++i) CHECK(same(g.component_at(i), graphs.component_at(i), 6));
  CHECK(same(as_gamma(evaluate_expression("E")).identity_component(), lib::set_species()));
  CHECK(as_gamma(evaluate_expression("E")).group()->order() == 1);
}

TEST_CASE("errors carry a position") {
  CHECK(error_position("E + ") == 4);
  CHECK(error_position("E + Q") == 4);
  CHECK(error_position("E $ X") == 2);
  CHECK(error_position("(E") == 2);
  CHECK(error_position("E)") == 1);
  CHECK(error_position("let = X in X") == 4);
  CHECK(error_position("let A = X A") == 10);
  CHECK(error_position("restrict(E, X)") == 12);
  CHECK(error_position("") == 0);
  CHECK_THROWS_AS(evaluate_expression("L_rev + L_k_interchange:S3"), GroupMismatchError);
  CHECK_THROWS_AS(plain("E(1 + X)").stratum(2), CompositionError);
}
