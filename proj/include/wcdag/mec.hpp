#pragma once

#include <array>
#include <vector>

#include "wcdag/graph.hpp"

namespace wcdag {

/// All arcs of d made undirected.
PGraph skeleton(const Dag& d);

/// Colliders u -> v <- w with u and w non-adjacent, reported once per
/// unordered {u, w} pair as (u, v, w) with u < w.
std::vector<std::array<int, 3>> v_structures(const Dag& d);

/// Fixpoint of the four orientation rules
///   R1: c -> a, a - b, c not adjacent b        gives a -> b
///   R2: a -> c -> b, a - b                     gives a -> b
///   R3: d - a - c, d -> b <- c, c not adj d    gives a -> b
///   R4: d - a ~ c, d -> c -> b, b not adj d    gives a -> b
/// where "-" is an undirected edge and "~" is adjacency of any kind.
/// Skeleton and existing arcs are preserved; idempotent.
PGraph meek_closure(PGraph g);

/// Same fixpoint, but rules are tried in the given priority order on a full
/// rescan after every orientation. Exists to test order independence.
PGraph meek_closure_ordered(PGraph g, const std::array<int, 4>& rule_order);

/// Skeleton with v-structure arcs oriented, closed under the rules above.
PGraph essential_graph(const Dag& d);

/// essential_graph(d) with every edge cut by some S in I oriented as in d,
/// closed under the orientation rules.
PGraph interventional_essential_graph(const Dag& d, const InterventionSet& I);

/// Arcs u -> v with Pa(u) = Pa(v) \ {u}.
std::vector<Arc> covered_edges(const Dag& d);

/// Every DAG with g's skeleton, containing g's arcs, acyclic, and with
/// exactly the v-structures already formed by g's arcs. Brute force; throws
/// a resource error beyond 25 undirected edges.
std::vector<Dag> enumerate_mec(const PGraph& g);

}  // namespace wcdag
