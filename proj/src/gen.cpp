#include "wcdag/gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wcdag/chordal.hpp"
#include "wcdag/mec.hpp"
#include "wcdag/rng.hpp"

namespace wcdag {

namespace {

// Orders parents into cliques by eliminating vertices in reverse topological
// order, then rebuilds the DAG with the fill arcs oriented by `pos`.
// Eliminating against the topological order means a vertex's remaining
// neighbors are exactly its parents, so the fill leaves no v-structures.
Dag chordalize(int n, const std::vector<Arc>& arcs, const std::vector<int>& topo) {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[topo[i]] = i;
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : arcs) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    for (int i = n - 1; i >= 0; --i) {
        int v = topo[i];
        gone[v] = true;
        std::vector<int> live;
        for (int u : adj[v])
            if (!gone[u]) live.push_back(u);
        for (std::size_t a = 0; a < live.size(); ++a)
            for (std::size_t b = a + 1; b < live.size(); ++b) {
                adj[live[a]].insert(live[b]);
                adj[live[b]].insert(live[a]);
            }
    }
    std::vector<Arc> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (pos[u] < pos[v]) out.emplace_back(u, v);
    return Dag(n, out);
}

void assert_moral_chordal(const Dag& d) {
    if (!v_structures(d).empty()) throw std::logic_error("generator: produced a v-structure");
    PGraph skel = skeleton(d);
    if (!is_chordal(skel)) throw std::logic_error("generator: skeleton not chordal");
    if (d.n() > 1) {
        std::vector<bool> seen(d.n(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int x : skel.neighbors(u))
                if (!seen[x]) {
                    seen[x] = true;
                    ++count;
                    stack.push_back(x);
                }
        }
        if (count != d.n()) throw std::logic_error("generator: skeleton not connected");
    }
}

// First m elements of a random permutation of 0..n-1.
std::vector<int> sample_distinct(int n, int m, Rng& rng) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < m; ++i) std::swap(pool[i], pool[rng.uniform_int(i, n - 1)]);
    pool.resize(m);
    return pool;
}

}  // namespace

Dag gen_er_moral(int n, double rho, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_er_moral: n must be at least 1");
    if (rho < 0 || rho > 1) throw std::invalid_argument("gen_er_moral: density out of range");
    Rng rng(seed);
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.uniform_int(0, i)]);
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) {
        int indeg = std::min(i, std::max(1, rng.binomial(i, rho)));
        for (int j : sample_distinct(i, indeg, rng)) arcs.emplace_back(sigma[j], sigma[i]);
    }
    Dag d = chordalize(n, arcs, sigma);
    assert_moral_chordal(d);
    return d;
}

Dag gen_tree_like(int n, int deg, int e_min, int e_max, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_tree_like: n must be at least 1");
    if (deg < 2) throw std::invalid_argument("gen_tree_like: degree must be at least 2");
    if (e_min < 0 || e_max < e_min) throw std::invalid_argument("gen_tree_like: bad edge range");
    Rng rng(seed);
    std::set<Arc> arcs;
    for (int v = 1; v < n; ++v) arcs.emplace((v - 1) / deg, v);
    if (n > 1) {
        int extra = rng.uniform_int(e_min, e_max);
        for (int added = 0, attempts = 0; added < extra && attempts < 100 * (extra + 1); ++attempts) {
            int u = rng.below(n), v = rng.below(n);
            if (u == v) continue;
            if (u > v) std::swap(u, v);  // tree labels are already topological
            if (arcs.count({u, v})) continue;
            arcs.emplace(u, v);
            ++added;
        }
    }
    // DFS topological order from the root; children visited in label order.
    std::vector<std::vector<int>> children(n);
    for (const auto& [u, v] : arcs) children[u].push_back(v);
    std::vector<int> topo, state(n, 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < n; ++root) {
        if (state[root]) continue;
        stack.push_back({root, 0});
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < children[v].size()) {
                int c = children[v][idx++];
                if (!state[c]) {
                    state[c] = 1;
                    stack.push_back({c, 0});
                }
            } else {
                topo.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::reverse(topo.begin(), topo.end());
    Dag d = chordalize(n, std::vector<Arc>(arcs.begin(), arcs.end()), topo);
    assert_moral_chordal(d);
    return d;
}

std::vector<double> weights_type1(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("weights_type1: n must be at least 1");
    Rng rng(seed);
    std::vector<double> w(n);
    for (double& x : w) x = rng.exponential(static_cast<double>(n) * n);
    return w;
}

std::vector<double> weights_type2(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("weights_type2: n must be at least 1");
    if (p < 0 || p > 1) throw std::invalid_argument("weights_type2: p out of range");
    Rng rng(seed);
    std::vector<double> w(n, 1.0);
    int heavy = static_cast<int>(std::ceil(p * n));
    for (int v : sample_distinct(n, heavy, rng)) w[v] = static_cast<double>(n) * n;
    return w;
}

WeightedInstance star_instance(int n, double heavy) {
    if (n < 3) throw std::invalid_argument("star_instance: n must be at least 3");
    std::vector<Arc> arcs{{1, 0}};
    for (int v = 2; v < n; ++v) arcs.emplace_back(0, v);
    std::vector<double> w(n, 1.0);
    w[0] = heavy;
    return WeightedInstance(Dag(n, arcs), std::move(w));
}

WeightedInstance path_instance(int n) {
    if (n < 2) throw std::invalid_argument("path_instance: n must be at least 2");
    std::vector<Arc> arcs;
    for (int v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
    return WeightedInstance(Dag(n, arcs), std::vector<double>(n, 1.0));
}

}  // namespace wcdag
