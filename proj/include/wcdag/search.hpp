#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wcdag/graph.hpp"
#include "wcdag/oracle.hpp"
#include "wcdag/rng.hpp"

namespace wcdag {

struct SearchResult {
    InterventionSet ledger;
    int phases = 0;
};

/// Atomic weighted adaptive search: per phase and chain component, intervene
/// on a 1/2-clique separator minus its costliest vertex, then clean up the
/// components left dangling off that vertex. Requires k = 1.
SearchResult weighted_search(SearchInterface& sim);

/// Orients every edge out of v inside its chain component h (a vertex list
/// of the current view). Either intervenes v itself when v is cheap enough,
/// or walks separators down each dangling component to its source.
InterventionSet resolve_dangling(SearchInterface& sim, const std::vector<int>& h, int v);

/// The unique chain component of view[h minus target] whose arcs toward
/// target all point into target; nullopt when target holds h's source.
/// Requires every edge between target and the rest of h to be oriented.
std::optional<std::vector<int>> incoming_chain_component(const PGraph& view,
                                                         const std::vector<int>& h,
                                                         const std::vector<int>& target);

/// Index of the unique partition set of a directed clique containing a
/// vertex with no incoming arcs from the other sets.
int s_source_locate(const PGraph& view, const std::vector<std::vector<int>>& sets);

/// Separating system over a clique: k = 1 gives singletons; otherwise
/// base-a digit labels group vertices into sets of at most k so that every
/// vertex pair differs in some digit.
std::vector<std::vector<int>> clique_intervention(const std::vector<int>& c, int k);

/// weighted_search adapted to cost alpha * w + beta and size-k interventions
/// (both read from the simulator). Identical decisions at alpha=1, beta=0,
/// k=1.
SearchResult generalized_search(SearchInterface& sim);

InterventionSet resolve_dangling_generalized(SearchInterface& sim, const std::vector<int>& h, int v);

/// Intervene on vertices in ascending weight order until oriented.
SearchResult naive_search(SearchInterface& sim);

/// Intervene on a uniformly random vertex that still has an unoriented
/// incident edge, until oriented.
SearchResult random_baseline(SearchInterface& sim, Rng& rng);

/// Like weighted_search but intervening on the entire separator each phase
/// (no costliest-vertex exclusion, no dangling cleanup).
SearchResult separator_baseline(SearchInterface& sim);

/// Budget-doubling combination of a primary atomic algorithm with
/// naive_search on one shared simulator; never much worse than either arm.
InterventionSet blackbox_combine(const WeightedInstance& inst, double alpha, double beta,
                                 const std::function<void(SearchInterface&)>& primary);

}  // namespace wcdag
