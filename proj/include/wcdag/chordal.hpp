#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wcdag/graph.hpp"

namespace wcdag {

/// Maximum-cardinality search ordering plus the fill-in check.
/// Returns std::nullopt when g is not chordal. Throws if g has arcs.
std::optional<std::vector<int>> perfect_elimination_order(const PGraph& g);

bool is_chordal(const PGraph& g);

/// Exactly the maximal cliques, each sorted, list sorted lexicographically.
/// Throws on non-chordal input.
std::vector<std::vector<int>> maximal_cliques(const PGraph& g);

/// Clique maximizing the sum of per-vertex scores (all scores >= 0).
/// Returns ({}, 0) on the empty graph.
std::pair<std::vector<int>, double> max_weight_clique(const PGraph& g, const std::vector<double>& score);

struct CliqueSeparator {
    std::vector<int> clique;
    std::vector<int> side_a;
    std::vector<int> side_b;
};

/// Balanced clique separator of a connected chordal graph with >= 2 vertices:
/// clique is a clique of at most omega-1 vertices whose removal leaves
/// connected components of at most ceil(n/2) vertices each; side_a/side_b
/// partition the rest with no edge between them.
CliqueSeparator half_clique_separator(const PGraph& g);

}  // namespace wcdag
