#pragma once

// Built-in species and Γ-species.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gspec/cycle_index.hpp"
#include "gspec/gamma_cis.hpp"

namespace gspec::library {

CycleIndexSeries zero();
CycleIndexSeries one();
CycleIndexSeries singleton();
CycleIndexSeries set_species();
CycleIndexSeries set_of_size(unsigned k);
CycleIndexSeries linear();
CycleIndexSeries linear_of_length(unsigned k);
CycleIndexSeries cyclic();
/// P = E·E, fix count 2^{#cycles}.
CycleIndexSeries subsets();

/// Linear orders over S2, τ reversing the order.
GroupCycleIndexSeries linear_with_reversal();
/// Cyclic orders over S2, τ reversing the orientation.
GroupCycleIndexSeries cyclic_with_reversal();
/// Linear k-orders with Γ ⊆ S_k permuting positions; Z(γ) = p_{cycle type of γ}.
GroupCycleIndexSeries linear_k_with_interchange(GroupPtr group);

/// L2(E) over S2 with fix oracles attached: identity 2^{#cycles}; τ is
/// stretch(E, 2), i.e. 2^{#cycles} when every cycle is even and 0 otherwise.
GroupCycleIndexSeries reversed_set_pairs();
/// Simple graphs, τ = complementation: L2(E) □ (E2·E).
GroupCycleIndexSeries graph_gcis();
/// Digraphs, τ = converse: P □ (L2·E).
GroupCycleIndexSeries digraph_gcis();

/// Rooted binary leaf trees R = X + E2(R).
CycleIndexSeries binary_leaf_trees();
/// Binary trees counted by internal nodes, τ = mirror image:
/// BT = 1 + X·L2(BT) with L2 reversed by τ.
GroupCycleIndexSeries binary_trees_with_reversal();
/// k-ary trees with Γ ⊆ S_k permuting each node's children:
/// T = 1 + X·L_k(T).
GroupCycleIndexSeries kary_trees_with_interchange(GroupPtr group);

using Builtin = std::variant<CycleIndexSeries, GroupCycleIndexSeries>;

/// Stable names: E, E_<k>, X, 0, 1, L, L_<k>, C, P, L_rev, C_rev,
/// L_k_interchange:<group>, graph, digraph. Throws std::out_of_range for an
/// unknown name.
Builtin lookup(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace gspec::library
