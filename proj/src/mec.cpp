#include "wcdag/mec.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace wcdag {

PGraph skeleton(const Dag& d) {
    PGraph g(d.n());
    for (const auto& [u, v] : d.arc_list()) g.add_edge(u, v);
    return g;
}

std::vector<std::array<int, 3>> v_structures(const Dag& d) {
    std::vector<std::array<int, 3>> out;
    for (int v = 0; v < d.n(); ++v) {
        const auto& pa = d.parents(v);
        for (auto it = pa.begin(); it != pa.end(); ++it)
            for (auto jt = std::next(it); jt != pa.end(); ++jt)
                if (!d.has_arc(*it, *jt) && !d.has_arc(*jt, *it)) out.push_back({*it, v, *jt});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Applies one rule at the popped arc (x, y) in every role the arc can play,
// pushing each newly oriented arc back on the queue.
void apply_rules_at(PGraph& g, int x, int y, std::queue<Arc>& q) {
    auto orient = [&](int a, int b) {
        if (!g.has_edge(a, b)) return;
        g.orient(a, b);
        q.push({a, b});
    };
    // R1 with (x, y) as c -> a.
    {
        std::vector<int> nb(g.neighbors(y).begin(), g.neighbors(y).end());
        for (int b : nb)
            if (b != x && !g.adjacent(x, b)) orient(y, b);
    }
    // R2 with (x, y) as a -> c.
    {
        std::vector<int> ch(g.children(y).begin(), g.children(y).end());
        for (int b : ch)
            if (g.has_edge(x, b)) orient(x, b);
    }
    // R2 with (x, y) as c -> b.
    {
        std::vector<int> pa(g.parents(x).begin(), g.parents(x).end());
        for (int a : pa)
            if (g.has_edge(a, y)) orient(a, y);
    }
    // R3 with (x, y) as d -> b; c ranges over the other parents of b. The
    // hub a must hang on undirected edges to b, c and d.
    {
        std::vector<int> pa(g.parents(y).begin(), g.parents(y).end());
        for (int c : pa) {
            if (c == x || g.adjacent(c, x)) continue;
            for (int a = 0; a < g.n(); ++a)
                if (g.has_edge(a, y) && g.has_edge(a, x) && g.has_edge(a, c)) orient(a, y);
        }
    }
    // R4 with (x, y) as d -> c; b ranges over the children of c. Here a - b
    // and a - d are undirected while a and c only need to be adjacent.
    {
        std::vector<int> ch(g.children(y).begin(), g.children(y).end());
        for (int b : ch) {
            if (g.adjacent(b, x)) continue;
            std::vector<int> nb(g.neighbors(b).begin(), g.neighbors(b).end());
            for (int a : nb)
                if (g.has_edge(a, x) && g.adjacent(a, y)) orient(a, b);
        }
    }
    // R4 with (x, y) as c -> b.
    {
        std::vector<int> pa(g.parents(x).begin(), g.parents(x).end());
        for (int d : pa) {
            if (g.adjacent(y, d)) continue;
            std::vector<int> nb(g.neighbors(y).begin(), g.neighbors(y).end());
            for (int a : nb)
                if (g.has_edge(a, d) && g.adjacent(a, x)) orient(a, y);
        }
    }
}

// One full scan for the lowest-priority-first applicable rule instance.
// Returns true if an edge was oriented.
bool apply_one_rule(PGraph& g, int rule) {
    for (const auto& [a0, b0] : g.edge_list()) {
        for (int flip = 0; flip < 2; ++flip) {
            int a = flip ? b0 : a0;
            int b = flip ? a0 : b0;
            bool fire = false;
            switch (rule) {
                case 1:
                    for (int c : g.parents(a))
                        if (!g.adjacent(c, b)) fire = true;
                    break;
                case 2:
                    for (int c : g.children(a))
                        if (g.has_arc(c, b)) fire = true;
                    break;
                case 3:
                    for (int d : g.parents(b)) {
                        if (!g.has_edge(a, d)) continue;
                        for (int c : g.parents(b))
                            if (c != d && g.has_edge(a, c) && !g.adjacent(c, d)) fire = true;
                    }
                    break;
                case 4:
                    for (int c : g.parents(b)) {
                        if (!g.adjacent(a, c)) continue;
                        for (int d : g.parents(c))
                            if (g.has_edge(a, d) && !g.adjacent(b, d)) fire = true;
                    }
                    break;
                default:
                    throw std::invalid_argument("meek_closure_ordered: rule id must be 1..4");
            }
            if (fire) {
                g.orient(a, b);
                return true;
            }
        }
    }
    return false;
}

}  // namespace

PGraph meek_closure(PGraph g) {
    std::queue<Arc> q;
    for (const auto& [u, v] : g.arc_list()) q.push({u, v});
    while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        apply_rules_at(g, x, y, q);
    }
    return g;
}

PGraph meek_closure_ordered(PGraph g, const std::array<int, 4>& rule_order) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int rule : rule_order)
            if (apply_one_rule(g, rule)) {
                changed = true;
                break;
            }
    }
    return g;
}

PGraph essential_graph(const Dag& d) {
    PGraph g = skeleton(d);
    for (const auto& [u, v, w] : v_structures(d)) {
        if (g.has_edge(u, v)) g.orient(u, v);
        if (g.has_edge(w, v)) g.orient(w, v);
    }
    return meek_closure(std::move(g));
}

PGraph interventional_essential_graph(const Dag& d, const InterventionSet& I) {
    PGraph g = essential_graph(d);
    for (const auto& s : I.sets) {
        std::set<int> in_s(s.begin(), s.end());
        for (int u : s) {
            std::vector<int> nb(g.neighbors(u).begin(), g.neighbors(u).end());
            for (int v : nb) {
                if (in_s.count(v)) continue;
                if (d.has_arc(u, v))
                    g.orient(u, v);
                else
                    g.orient(v, u);
            }
        }
    }
    return meek_closure(std::move(g));
}

std::vector<Arc> covered_edges(const Dag& d) {
    std::vector<Arc> out;
    for (const auto& [u, v] : d.arc_list()) {
        std::set<int> pv = d.parents(v);
        pv.erase(u);
        if (pv == d.parents(u)) out.emplace_back(u, v);
    }
    return out;
}

namespace {

struct MecEnum {
    int n;
    std::vector<Edge> und;
    std::vector<std::set<int>> out, in;
    std::set<std::array<int, 3>> target;  // v-structures g's arcs already form
    std::vector<Arc> fixed;
    std::vector<Arc> choice;
    const PGraph* g;
    std::vector<Dag> result;

    bool reaches(int from, int to) const {
        if (from == to) return true;
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        q.push(from);
        seen[from] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : out[u]) {
                if (v == to) return true;
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
            }
        }
        return false;
    }

    bool admissible(int u, int v) const {
        if (reaches(v, u)) return false;  // would close a directed cycle
        for (int w : in[v]) {
            if (w == u || g->adjacent(u, w)) continue;
            std::array<int, 3> t{std::min(u, w), v, std::max(u, w)};
            if (!target.count(t)) return false;  // new collider
        }
        return true;
    }

    void dfs(std::size_t i) {
        if (i == und.size()) {
            std::vector<Arc> arcs(fixed);
            arcs.insert(arcs.end(), choice.begin(), choice.end());
            Dag d(n, arcs);
            auto vs = v_structures(d);
            if (std::set<std::array<int, 3>>(vs.begin(), vs.end()) == target)
                result.push_back(std::move(d));
            return;
        }
        auto [a, b] = und[i];
        for (int flip = 0; flip < 2; ++flip) {
            int u = flip ? b : a;
            int v = flip ? a : b;
            if (!admissible(u, v)) continue;
            out[u].insert(v);
            in[v].insert(u);
            choice.emplace_back(u, v);
            dfs(i + 1);
            choice.pop_back();
            out[u].erase(v);
            in[v].erase(u);
        }
    }
};

}  // namespace

std::vector<Dag> enumerate_mec(const PGraph& g) {
    if (g.num_undirected() > 25)
        throw std::runtime_error("enumerate_mec: more than 25 undirected edges");
    MecEnum e;
    e.n = g.n();
    e.g = &g;
    e.und = g.edge_list();
    e.out.assign(g.n(), {});
    e.in.assign(g.n(), {});
    e.fixed = g.arc_list();
    for (const auto& [u, v] : e.fixed) {
        e.out[u].insert(v);
        e.in[v].insert(u);
    }
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.parents(v))
            for (int w : g.parents(v))
                if (u < w && !g.adjacent(u, w)) e.target.insert({u, v, w});
    e.dfs(0);
    std::sort(e.result.begin(), e.result.end(),
              [](const Dag& a, const Dag& b) { return a.arc_list() < b.arc_list(); });
    return e.result;
}

}  // namespace wcdag
