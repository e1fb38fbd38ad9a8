#include "wcdag/chordal.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace wcdag {

namespace {

void require_undirected(const PGraph& g) {
    if (g.num_arcs() != 0) throw std::invalid_argument("chordal: input must be undirected");
}

bool connected(const PGraph& g) {
    if (g.n() <= 1) return true;
    std::vector<bool> seen(g.n(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                q.push(v);
            }
    }
    return count == g.n();
}

// Connected components of g with the vertices in `removed` deleted.
std::vector<std::vector<int>> components_without(const PGraph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.n(), false);
    for (int v : removed) gone[v] = true;
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!gone[v] && !seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

std::optional<std::vector<int>> perfect_elimination_order(const PGraph& g) {
    require_undirected(g);
    int n = g.n();
    std::vector<int> label(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<int> visit;  // maximum-cardinality search order
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best == -1 || label[v] > label[best])) best = v;
        numbered[best] = true;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!numbered[u]) ++label[u];
    }
    // Elimination order is the reverse MCS order; verify the fill-in property.
    std::vector<int> peo(visit.rbegin(), visit.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        int first = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > i && (first == -1 || pos[u] < pos[first])) first = u;
        if (first == -1) continue;
        for (int u : g.neighbors(v))
            if (pos[u] > i && u != first && !g.has_edge(first, u)) return std::nullopt;
    }
    return peo;
}

bool is_chordal(const PGraph& g) { return perfect_elimination_order(g).has_value(); }

std::vector<std::vector<int>> maximal_cliques(const PGraph& g) {
    auto peo = perfect_elimination_order(g);
    if (!peo) throw std::invalid_argument("maximal_cliques: graph is not chordal");
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[(*peo)[i]] = i;
    std::vector<std::set<int>> cand;
    for (int i = 0; i < n; ++i) {
        int v = (*peo)[i];
        std::set<int> c{v};
        for (int u : g.neighbors(v))
            if (pos[u] > i) c.insert(u);
        cand.push_back(std::move(c));
    }
    std::vector<std::vector<int>> cliques;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size() && maximal; ++j) {
            if (i == j) continue;
            if (cand[j].size() < cand[i].size()) continue;
            if (cand[j].size() == cand[i].size() && j > i) continue;  // dedup, keep first
            if (std::includes(cand[j].begin(), cand[j].end(), cand[i].begin(), cand[i].end()))
                maximal = cand[j].size() == cand[i].size() && j >= i;
        }
        if (maximal) cliques.emplace_back(cand[i].begin(), cand[i].end());
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

std::pair<std::vector<int>, double> max_weight_clique(const PGraph& g, const std::vector<double>& score) {
    if (static_cast<int>(score.size()) != g.n())
        throw std::invalid_argument("max_weight_clique: score size mismatch");
    for (double s : score)
        if (s < 0) throw std::invalid_argument("max_weight_clique: negative score");
    if (g.n() == 0) return {{}, 0.0};
    auto cliques = maximal_cliques(g);
    std::vector<int> best;
    double best_val = -1;
    for (const auto& c : cliques) {
        double val = 0;
        for (int v : c) val += score[v];
        if (val > best_val) {
            best_val = val;
            best = c;
        }
    }
    return {best, best_val};
}

CliqueSeparator half_clique_separator(const PGraph& g) {
    require_undirected(g);
    int n = g.n();
    if (n < 2) throw std::invalid_argument("half_clique_separator: need at least 2 vertices");
    if (!connected(g)) throw std::invalid_argument("half_clique_separator: graph must be connected");
    auto cliques = maximal_cliques(g);  // throws on non-chordal
    std::size_t omega = 0;
    for (const auto& c : cliques) omega = std::max(omega, c.size());
    const int half = (n + 1) / 2;

    auto balanced = [&](const std::vector<int>& sep) {
        for (const auto& comp : components_without(g, sep))
            if (static_cast<int>(comp.size()) > half) return false;
        return true;
    };

    std::vector<int> chosen;
    if (cliques.size() == 1) {
        chosen = cliques[0];
        chosen.pop_back();  // all but the highest id
    } else {
        int t = static_cast<int>(cliques.size());
        // Clique tree: maximum spanning tree on pairwise intersection sizes.
        std::vector<int> parent(t, -1), key(t, -1);
        std::vector<bool> in_tree(t, false);
        key[0] = 0;
        for (int it = 0; it < t; ++it) {
            int u = -1;
            for (int c = 0; c < t; ++c)
                if (!in_tree[c] && key[c] >= 0 && (u == -1 || key[c] > key[u])) u = c;
            in_tree[u] = true;
            for (int c = 0; c < t; ++c) {
                if (in_tree[c]) continue;
                std::vector<int> inter;
                std::set_intersection(cliques[u].begin(), cliques[u].end(), cliques[c].begin(),
                                      cliques[c].end(), std::back_inserter(inter));
                int w = static_cast<int>(inter.size());
                if (w > key[c]) {
                    key[c] = w;
                    parent[c] = u;
                }
            }
        }
        std::vector<std::vector<int>> children(t);
        for (int c = 1; c < t; ++c) children[parent[c]].push_back(c);

        // Each vertex is charged to the smallest-index clique containing it.
        std::vector<int> weight(t, 0);
        {
            std::vector<bool> assigned(n, false);
            for (int c = 0; c < t; ++c)
                for (int v : cliques[c])
                    if (!assigned[v]) {
                        assigned[v] = true;
                        ++weight[c];
                    }
        }
        std::vector<int> subtree(weight);
        // Sum in reverse Prim insertion order; parents were inserted earlier.
        {
            std::vector<int> order;
            std::vector<bool> done(t, false);
            std::queue<int> q;
            q.push(0);
            while (!q.empty()) {
                int c = q.front();
                q.pop();
                order.push_back(c);
                for (int d : children[c]) q.push(d);
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it)
                if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];
        }
        int node = 0;  // descend to the deepest clique with heavy subtree
        for (;;) {
            int next = -1;
            for (int d : children[node])
                if (2 * subtree[d] > n && next == -1) next = d;
            if (next == -1) break;
            node = next;
        }

        // Prefer sub-cliques of size <= omega-1 that keep all components small.
        auto try_clique = [&](const std::vector<int>& cl) -> bool {
            for (std::size_t drop = 0; drop < cl.size(); ++drop) {
                std::vector<int> cand;
                for (std::size_t i = 0; i < cl.size(); ++i)
                    if (i != drop) cand.push_back(cl[i]);
                if (!cand.empty() && balanced(cand)) {
                    chosen = cand;
                    return true;
                }
            }
            if (cl.size() <= omega - 1 && balanced(cl)) {
                chosen = cl;
                return true;
            }
            return false;
        };
        if (!try_clique(cliques[node])) {
            bool found = false;
            for (const auto& cl : cliques)
                if (try_clique(cl)) {
                    found = true;
                    break;
                }
            if (!found) chosen = cliques[node];  // centroid clique always balances
        }
    }
    if (chosen.empty() || !balanced(chosen))
        throw std::logic_error("half_clique_separator: no balanced clique separator found");

    // Group the remaining components into two sides, as balanced as a
    // subset-sum split allows.
    auto comps = components_without(g, chosen);
    int rest = 0;
    for (const auto& c : comps) rest += static_cast<int>(c.size());
    std::vector<std::vector<int>> reach(rest + 1);  // reach[s] = chosen component subset, by index
    std::vector<bool> ok(rest + 1, false);
    std::vector<int> from(rest + 1, -1), used(rest + 1, -1);
    ok[0] = true;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        int sz = static_cast<int>(comps[i].size());
        for (int s = rest; s >= sz; --s)
            if (!ok[s] && ok[s - sz]) {
                ok[s] = true;
                from[s] = s - sz;
                used[s] = static_cast<int>(i);
            }
    }
    int target = rest / 2;
    while (!ok[target]) --target;
    std::vector<bool> in_a(comps.size(), false);
    for (int s = target; s > 0; s = from[s]) in_a[used[s]] = true;

    CliqueSeparator out;
    out.clique = chosen;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto& side = in_a[i] ? out.side_a : out.side_b;
        side.insert(side.end(), comps[i].begin(), comps[i].end());
    }
    if (out.side_a.size() < out.side_b.size()) std::swap(out.side_a, out.side_b);
    std::sort(out.side_a.begin(), out.side_a.end());
    std::sort(out.side_b.begin(), out.side_b.end());
    return out;
}

}  // namespace wcdag
