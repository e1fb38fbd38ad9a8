#include "wcdag/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace wcdag {

PGraph::PGraph(int n) : n_(n), nbr_(n), out_(n), in_(n) {
    if (n < 0) throw std::invalid_argument("PGraph: negative vertex count");
}

void PGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("PGraph: vertex id out of range");
}

void PGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("PGraph: self-loop");
    if (adjacent(u, v)) {
        if (has_edge(u, v)) return;
        throw std::invalid_argument("PGraph: edge conflicts with existing arc");
    }
    nbr_[u].insert(v);
    nbr_[v].insert(u);
    ++und_count_;
}

void PGraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("PGraph: self-loop");
    if (adjacent(u, v)) {
        if (has_arc(u, v)) return;
        throw std::invalid_argument("PGraph: arc conflicts with existing edge or arc");
    }
    out_[u].insert(v);
    in_[v].insert(u);
    ++arc_count_;
}

void PGraph::orient(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("PGraph::orient: no such undirected edge");
    nbr_[u].erase(v);
    nbr_[v].erase(u);
    --und_count_;
    out_[u].insert(v);
    in_[v].insert(u);
    ++arc_count_;
}

bool PGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return nbr_[u].count(v) > 0;
}

bool PGraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return out_[u].count(v) > 0;
}

bool PGraph::adjacent(int u, int v) const {
    return has_edge(u, v) || has_arc(u, v) || has_arc(v, u);
}

std::vector<Arc> PGraph::arc_list() const {
    std::vector<Arc> arcs;
    arcs.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) arcs.emplace_back(u, v);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

std::vector<Edge> PGraph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(und_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbr_[u])
            if (u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool PGraph::is_chain_graph() const {
    // Contract chain components, then look for a directed cycle among them.
    std::vector<int> comp(n_, -1);
    int nc = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = nc;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : nbr_[u])
                if (comp[v] == -1) {
                    comp[v] = nc;
                    q.push(v);
                }
        }
        ++nc;
    }
    std::vector<std::set<int>> cadj(nc);
    std::vector<int> indeg(nc, 0);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) {
            if (comp[u] == comp[v]) return false;  // arc inside a chain component
            if (cadj[comp[u]].insert(comp[v]).second) ++indeg[comp[v]];
        }
    std::queue<int> q;
    for (int c = 0; c < nc; ++c)
        if (indeg[c] == 0) q.push(c);
    int seen = 0;
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        ++seen;
        for (int d : cadj[c])
            if (--indeg[d] == 0) q.push(d);
    }
    return seen == nc;
}

Dag::Dag(int n, const std::vector<Arc>& arcs) : n_(n), out_(n), in_(n), pos_(n) {
    if (n < 0) throw std::invalid_argument("Dag: negative vertex count");
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("Dag: vertex id out of range");
        if (u == v) throw std::invalid_argument("Dag: self-loop");
        if (out_[u].count(v) || out_[v].count(u)) throw std::invalid_argument("Dag: duplicate arc");
        out_[u].insert(v);
        in_[v].insert(u);
        ++arc_count_;
    }
    // Kahn's algorithm; smallest-id-first for a deterministic order.
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(in_[v].size());
    std::priority_queue<int, std::vector<int>, std::greater<>> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    topo_.reserve(n);
    while (!q.empty()) {
        int u = q.top();
        q.pop();
        pos_[u] = static_cast<int>(topo_.size());
        topo_.push_back(u);
        for (int v : out_[u])
            if (--indeg[v] == 0) q.push(v);
    }
    if (static_cast<int>(topo_.size()) != n) throw std::invalid_argument("Dag: arcs contain a cycle");
}

bool Dag::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("Dag: vertex id out of range");
    return out_[u].count(v) > 0;
}

std::vector<Arc> Dag::arc_list() const {
    std::vector<Arc> arcs;
    arcs.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) arcs.emplace_back(u, v);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

PGraph Dag::to_pgraph() const {
    PGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) g.add_arc(u, v);
    return g;
}

WeightedInstance::WeightedInstance(Dag d, std::vector<double> w) : dag(std::move(d)), weights(std::move(w)) {
    if (static_cast<int>(weights.size()) != dag.n())
        throw std::invalid_argument("WeightedInstance: weight count mismatch");
    for (double x : weights)
        if (!(x >= 0) || !std::isfinite(x))
            throw std::invalid_argument("WeightedInstance: weights must be finite and nonnegative");
}

void InterventionSet::add(std::vector<int> s) {
    if (s.empty()) throw std::invalid_argument("InterventionSet: empty intervention");
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
}

double InterventionSet::total_weight(const std::vector<double>& w) const {
    double total = 0;
    for (const auto& s : sets)
        for (int v : s) total += w.at(v);
    return total;
}

double InterventionSet::generalized_cost(const std::vector<double>& w, double alpha, double beta) const {
    return alpha * total_weight(w) + beta * static_cast<double>(sets.size());
}

std::vector<ChainComponent> chain_components(const PGraph& g) {
    std::vector<ChainComponent> comps;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> vs;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            vs.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(vs.begin(), vs.end());
        PGraph sub(static_cast<int>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.has_edge(vs[i], vs[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
        comps.push_back({std::move(vs), std::move(sub)});
    }
    return comps;
}

InducedSubgraph induced_subgraph(const PGraph& g, const std::vector<int>& vs) {
    std::vector<int> ids(vs);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex id out of range");
    PGraph sub(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (i < j && g.has_edge(ids[i], ids[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
            if (i != j && g.has_arc(ids[i], ids[j])) sub.add_arc(static_cast<int>(i), static_cast<int>(j));
        }
    return {std::move(sub), std::move(ids)};
}

bool is_clique(const PGraph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_consistent_extension(const Dag& d, const PGraph& g) {
    if (d.n() != g.n()) throw std::invalid_argument("is_consistent_extension: vertex count mismatch");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool in_g = g.adjacent(u, v);
            bool in_d = d.has_arc(u, v) || d.has_arc(v, u);
            if (in_g != in_d) throw std::invalid_argument("is_consistent_extension: skeleton mismatch");
        }
    for (const auto& [u, v] : g.arc_list())
        if (!d.has_arc(u, v)) return false;
    return true;  // d is acyclic by construction and orients everything
}

WeightedInstance read_instance(std::istream& is) {
    std::string header;
    if (!(is >> header) || header != "wcdag/1")
        throw std::invalid_argument("instance: missing or unknown version header");
    int n = 0, m = 0;
    if (!(is >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("instance: bad n/m line");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("instance: truncated arc list");
        arcs.emplace_back(u, v);
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i)
        if (!(is >> w[i])) throw std::invalid_argument("instance: weight count mismatch");
    double extra;
    if (is >> extra) throw std::invalid_argument("instance: trailing data");
    return WeightedInstance(Dag(n, arcs), std::move(w));  // Dag ctor rejects cycles/duplicates
}

void write_instance(std::ostream& os, const WeightedInstance& inst) {
    os << "wcdag/1\n" << inst.dag.n() << ' ' << inst.dag.num_arcs() << '\n';
    for (const auto& [u, v] : inst.dag.arc_list()) os << u << ' ' << v << '\n';
    for (int i = 0; i < inst.dag.n(); ++i) os << inst.weights[i] << (i + 1 == inst.dag.n() ? '\n' : ' ');
    if (inst.dag.n() == 0) os << '\n';
}

WeightedInstance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open instance file: " + path);
    return read_instance(f);
}

void save_instance(const std::string& path, const WeightedInstance& inst) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write instance file: " + path);
    write_instance(f, inst);
}

}  // namespace wcdag
