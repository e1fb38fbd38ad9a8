#pragma once

#include <cstdint>
#include <vector>

#include "wcdag/graph.hpp"

namespace wcdag {

/// Random connected moral DAG: random vertex order, Binomial in-degrees
/// (at least 1), then elimination fill along the reverse order. The result
/// has no v-structures and a chordal, connected skeleton (asserted).
Dag gen_er_moral(int n, double rho, std::uint64_t seed);

/// Complete d-ary tree plus Uniform(e_min..e_max) extra forward edges,
/// triangulated along a DFS topological order. Moral and chordal (asserted).
Dag gen_tree_like(int n, int d, int e_min, int e_max, std::uint64_t seed);

/// I.i.d. Exponential(rate = n^2) weights.
std::vector<double> weights_type1(int n, std::uint64_t seed);

/// ceil(p * n) uniformly chosen vertices get weight n^2, the rest weight 1.
std::vector<double> weights_type2(int n, double p, std::uint64_t seed);

/// Moral star rooted at a leaf: leaf 1 -> center 0 -> every other leaf.
/// Leaves weigh 1, the center weighs `heavy`.
WeightedInstance star_instance(int n, double heavy);

/// Directed path 0 -> 1 -> ... -> n-1 with unit weights.
WeightedInstance path_instance(int n);

}  // namespace wcdag
