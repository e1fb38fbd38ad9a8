#include "wcdag/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "wcdag/chordal.hpp"
#include "wcdag/mec.hpp"

namespace wcdag {

bool is_verifying_set(const Dag& d, const InterventionSet& I) {
    return interventional_essential_graph(d, I).fully_oriented();
}

namespace {

// Exact minimum vertex cover by cost, branching on an endpoint of the first
// uncovered edge. Covered-edge graphs are tiny, so plain branch and bound.
void mvc_search(const std::vector<Arc>& edges, const std::vector<double>& cost,
                std::set<int>& picked, double acc, double& best, std::set<int>& best_set) {
    if (acc >= best) return;
    const Arc* open = nullptr;
    for (const auto& e : edges)
        if (!picked.count(e.first) && !picked.count(e.second)) {
            open = &e;
            break;
        }
    if (!open) {
        best = acc;
        best_set = picked;
        return;
    }
    for (int v : {open->first, open->second}) {
        picked.insert(v);
        mvc_search(edges, cost, picked, acc + cost[v], best, best_set);
        picked.erase(v);
    }
}

std::pair<double, std::vector<int>> min_cost_cover(const std::vector<Arc>& edges,
                                                   const std::vector<double>& cost) {
    double best = std::numeric_limits<double>::infinity();
    std::set<int> picked, best_set;
    mvc_search(edges, cost, picked, 0, best, best_set);
    return {best, std::vector<int>(best_set.begin(), best_set.end())};
}

}  // namespace

VerificationNumbers atomic_verification_numbers(const WeightedInstance& inst) {
    auto cov = covered_edges(inst.dag);
    VerificationNumbers out;
    if (cov.empty()) return out;
    std::vector<double> ones(inst.dag.n(), 1.0);
    auto [sz, size_witness] = min_cost_cover(cov, ones);
    auto [wt, weight_witness] = min_cost_cover(cov, inst.weights);
    out.nu1 = static_cast<int>(sz + 0.5);
    out.nubar1 = wt;
    out.min_size_witness = std::move(size_witness);
    out.min_weight_witness = std::move(weight_witness);
    return out;
}

BenchmarkMax benchmark_max(const WeightedInstance& inst) {
    PGraph eg = essential_graph(inst.dag);
    BenchmarkMax out;
    for (const Dag& member : enumerate_mec(eg)) {
        auto nums = atomic_verification_numbers(WeightedInstance(member, inst.weights));
        out.nu1_max = std::max(out.nu1_max, nums.nu1);
        out.nubar1_max = std::max(out.nubar1_max, nums.nubar1);
    }
    return out;
}

std::pair<int, double> relate_k_bounds(int nu1_max, double nubar1_max, int k) {
    if (k < 1) throw std::invalid_argument("relate_k_bounds: k must be at least 1");
    return {(nu1_max + k - 1) / k, nubar1_max};
}

namespace {

// Best value of sum(add over C) - max(sub over C) across all cliques C of g.
// With vertices of a maximal clique sorted by sub descending, the optimum
// restricted to that clique is attained on a suffix, so suffixes suffice.
double best_subtract_max_clique(const PGraph& g, const std::vector<double>& add,
                                const std::vector<double>& sub) {
    double best = 0;
    for (auto clique : maximal_cliques(g)) {
        std::sort(clique.begin(), clique.end(), [&](int a, int b) {
            return sub[a] != sub[b] ? sub[a] > sub[b] : a < b;
        });
        double tail = 0;
        for (auto it = clique.rbegin(); it != clique.rend(); ++it) {
            tail += add[*it];
            best = std::max(best, tail - sub[*it]);
        }
    }
    return best;
}

// Components of g with vertex v removed.
std::vector<std::vector<int>> components_minus(const PGraph& g, int v) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n(), false);
    seen[v] = true;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int x : g.neighbors(u))
                if (!seen[x]) {
                    seen[x] = true;
                    q.push(x);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Sum over the components of H - v of the best clique (by add score) inside
// that component's intersection with the neighborhood of v.
double gamma_value(const PGraph& h, int v, const std::vector<double>& add) {
    double total = 0;
    for (const auto& comp : components_minus(h, v)) {
        std::vector<int> inter;
        for (int u : comp)
            if (h.has_edge(u, v)) inter.push_back(u);
        if (inter.empty()) continue;
        auto [sub, to_old] = induced_subgraph(h, inter);
        std::vector<double> score(sub.n());
        for (int i = 0; i < sub.n(); ++i) score[i] = add[to_old[i]];
        total += max_weight_clique(sub, score).second;
    }
    return total;
}

double best_hinge(const PGraph& h, const std::vector<double>& vert_cost,
                  const std::vector<double>& add) {
    double best = 0;
    for (int v = 0; v < h.n(); ++v)
        if (!h.neighbors(v).empty())
            best = std::max(best, std::min(vert_cost[v], gamma_value(h, v, add)));
    return best;
}

}  // namespace

std::vector<ZetaRecord> zeta_terms(const Dag& d, const std::vector<double>& w,
                                   const InterventionSet& I, double alpha, double beta, int k) {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("zeta_terms: negative cost parameter");
    if (k < 1) throw std::invalid_argument("zeta_terms: k must be at least 1");
    PGraph view = interventional_essential_graph(d, I);
    std::vector<ZetaRecord> out;
    for (auto& cc : chain_components(view)) {
        if (cc.vertices.size() < 2) continue;
        const PGraph& h = cc.graph;
        if (!is_chordal(h)) throw std::invalid_argument("zeta_terms: non-chordal chain component");
        int m = h.n();
        std::vector<double> wl(m), gen(m), genk(m), a_w(m);
        for (int i = 0; i < m; ++i) {
            wl[i] = w[cc.vertices[i]];
            a_w[i] = alpha * wl[i];
            gen[i] = a_w[i] + beta;
            genk[i] = a_w[i] + beta / k;
        }
        ZetaRecord rec;
        rec.component = cc.vertices;
        rec.zeta1 = 0.5 * best_subtract_max_clique(h, wl, wl);
        rec.zeta2 = 0.5 * best_hinge(h, wl, wl);
        rec.zeta3 = 0.5 * best_subtract_max_clique(h, gen, a_w);
        rec.zeta4 = 0.5 * best_hinge(h, gen, gen);
        rec.zeta5 = 0.5 * best_subtract_max_clique(h, genk, a_w);
        rec.zeta6 = 0.5 * best_hinge(h, genk, genk);
        out.push_back(std::move(rec));
    }
    return out;
}

double lower_bound(const Dag& d, const std::vector<double>& w, double alpha, double beta,
                   int k, long long budget) {
    int n = d.n();
    std::set<std::vector<int>> family;
    family.insert({});
    for (int v = 0; v < n; ++v) family.insert({v});
    if (n <= 10) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) family.insert({u, v});
        if (n <= 10 && (1LL << n) <= budget)
            for (long long mask = 0; mask < (1LL << n); ++mask) {
                std::vector<int> s;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) s.push_back(v);
                family.insert(std::move(s));
            }
    }
    double best = 0;
    long long evaluated = 0;
    for (const auto& s : family) {
        if (evaluated++ >= budget && !s.empty()) continue;
        InterventionSet I;
        I.k = 1;
        for (int v : s) I.add({v});
        double bound = 0;
        try {
            for (const auto& rec : zeta_terms(d, w, I, alpha, beta, k))
                bound += k == 1 ? std::max(rec.zeta3, rec.zeta4) : std::max(rec.zeta5, rec.zeta6);
        } catch (const std::invalid_argument&) {
            continue;  // non-chordal component; skip the candidate, stay sound
        }
        best = std::max(best, bound);
    }
    return best;
}

}  // namespace wcdag
