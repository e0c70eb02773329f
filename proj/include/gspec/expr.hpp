#pragma once

// Species expressions:
//
//   expr    := sum ('box' sum)*
//   sum     := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | postfix
//   postfix := primary ('(' expr ')')*              composition F(G)
//   primary := INTEGER | NAME | '(' expr ')'
//            | 'restrict' '(' expr ',' INTEGER [',' INTEGER] ')'
//            | 'quotient' '(' expr ')'
//            | 'let' NAME '=' expr 'in' expr
//
// NAME is a built-in (see library::builtin_names) or a let-bound variable.
// An integer n denotes n times the empty-set species. Plain species combine
// with Γ-species by trivial lifting.

#include <string_view>

#include "gspec/library.hpp"

namespace gspec {

using Species = library::Builtin;

/// Parses and builds the series. Throws ParseError for syntax errors and
/// unknown names; evaluation errors (group mismatch, composition) propagate.
Species evaluate_expression(std::string_view text);

/// The Γ-series of a species value; plain series are lifted over the trivial
/// group.
GroupCycleIndexSeries as_gamma(const Species& s);

}  // namespace gspec
