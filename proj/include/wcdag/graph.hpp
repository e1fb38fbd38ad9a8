#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wcdag {

using Arc = std::pair<int, int>;   // ordered (u, v) meaning u -> v
using Edge = std::pair<int, int>;  // unordered, stored with first < second

/// Partially directed graph: a shared vertex set with an undirected edge set
/// and a disjoint directed arc set. Used for skeletons, CPDAGs and
/// interventional essential graphs alike.
class PGraph {
public:
    PGraph() = default;
    explicit PGraph(int n);

    int n() const { return n_; }

    void add_edge(int u, int v);
    void add_arc(int u, int v);
    /// Turns the undirected edge {u,v} into the arc u -> v.
    void orient(int u, int v);

    bool has_edge(int u, int v) const;
    bool has_arc(int u, int v) const;
    /// Joined by an edge or an arc in either direction.
    bool adjacent(int u, int v) const;

    const std::set<int>& neighbors(int v) const { return nbr_[v]; }
    const std::set<int>& parents(int v) const { return in_[v]; }
    const std::set<int>& children(int v) const { return out_[v]; }

    std::size_t num_undirected() const { return und_count_; }
    std::size_t num_arcs() const { return arc_count_; }
    bool fully_oriented() const { return und_count_ == 0; }

    std::vector<Arc> arc_list() const;    // sorted
    std::vector<Edge> edge_list() const;  // sorted, first < second

    /// No directed cycle once every chain component is contracted.
    bool is_chain_graph() const;

    bool operator==(const PGraph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::set<int>> nbr_;  // undirected adjacency
    std::vector<std::set<int>> out_;  // arc heads by tail
    std::vector<std::set<int>> in_;   // arc tails by head
    std::size_t und_count_ = 0;
    std::size_t arc_count_ = 0;
};

/// Fully directed acyclic graph with a cached topological order.
class Dag {
public:
    Dag() = default;
    Dag(int n, const std::vector<Arc>& arcs);  // throws on cycle / duplicate / self-loop

    int n() const { return n_; }
    bool has_arc(int u, int v) const;
    const std::set<int>& parents(int v) const { return in_[v]; }
    const std::set<int>& children(int v) const { return out_[v]; }

    /// topo()[i] is the vertex in position i of a valid permutation.
    const std::vector<int>& topo() const { return topo_; }
    /// position(v) < position(u) implies no arc u -> v.
    int position(int v) const { return pos_[v]; }

    std::vector<Arc> arc_list() const;
    std::size_t num_arcs() const { return arc_count_; }

    PGraph to_pgraph() const;

    bool operator==(const Dag& other) const {
        return n_ == other.n_ && in_ == other.in_;
    }

private:
    int n_ = 0;
    std::vector<std::set<int>> out_;
    std::vector<std::set<int>> in_;
    std::vector<int> topo_;
    std::vector<int> pos_;
    std::size_t arc_count_ = 0;
};

/// A hidden ground truth DAG together with per-vertex intervention costs.
struct WeightedInstance {
    Dag dag;
    std::vector<double> weights;

    WeightedInstance() = default;
    WeightedInstance(Dag d, std::vector<double> w);  // validates sizes and signs
};

/// Ordered multiset of interventions, each a vertex subset of size <= k.
struct InterventionSet {
    std::vector<std::vector<int>> sets;  // each sorted ascending
    int k = 1;

    void add(std::vector<int> s);
    std::size_t size() const { return sets.size(); }
    bool empty() const { return sets.empty(); }

    double total_weight(const std::vector<double>& w) const;
    double generalized_cost(const std::vector<double>& w, double alpha, double beta) const;
};

struct ChainComponent {
    std::vector<int> vertices;  // sorted original ids
    PGraph graph;               // induced undirected subgraph, relabelled 0..|vertices|-1
};

/// Connected components after dropping all arcs. Requires a chain graph in
/// spirit, but arcs are simply ignored so any input partitions cleanly.
std::vector<ChainComponent> chain_components(const PGraph& g);

struct InducedSubgraph {
    PGraph graph;
    std::vector<int> to_old;  // to_old[new_id] = original id
};

InducedSubgraph induced_subgraph(const PGraph& g, const std::vector<int>& vs);

/// True iff every pair in vs is joined by an edge or arc.
bool is_clique(const PGraph& g, const std::vector<int>& vs);

/// True iff d orients every edge of g, keeps every arc of g, and is acyclic.
/// Throws if the skeletons differ.
bool is_consistent_extension(const Dag& d, const PGraph& g);

// --- instance text format ("wcdag/1") ---
WeightedInstance read_instance(std::istream& is);
void write_instance(std::ostream& os, const WeightedInstance& inst);
WeightedInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const WeightedInstance& inst);

}  // namespace wcdag
