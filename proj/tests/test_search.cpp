#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "wcdag/gen.hpp"
#include "wcdag/mec.hpp"
#include "wcdag/oracle.hpp"
#include "wcdag/search.hpp"

using namespace wcdag;

namespace {

WeightedInstance random_instance(int n, std::uint64_t seed) {
    Dag d = gen_er_moral(n, 0.3, seed);
    std::vector<double> w(n);
    Rng rng(seed * 101 + 5);
    for (double& x : w) x = 0.5 + rng.below(10);
    return WeightedInstance(std::move(d), std::move(w));
}

void check_done(const Simulator& sim) {
    CHECK(sim.is_fully_oriented());
    CHECK(sim.view() == sim.ground_truth().to_pgraph());
}

}  // namespace

TEST_CASE("clique intervention separating system") {
    CHECK(clique_intervention({}, 3).empty());
    CHECK(clique_intervention({7}, 3) == std::vector<std::vector<int>>{{7}});
    CHECK(clique_intervention({5, 2, 9}, 1) ==
          std::vector<std::vector<int>>{{2}, {5}, {9}});
    CHECK_THROWS_AS(clique_intervention({0, 1}, 0), std::invalid_argument);

    for (int n = 2; n <= 40; ++n) {
        for (int k = 1; k <= 8; ++k) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = 3 * i;  // arbitrary ids
            auto sets = clique_intervention(c, k);
            std::map<int, std::set<int>> label;  // vertex -> indices of sets holding it
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (int v : sets[i]) {
                    CHECK((int)sets[i].size() <= k);
                    label[v].insert((int)i);
                }
            CHECK((int)label.size() == n);  // every vertex appears
            // Distinct label sets mean every pair is split by some set.
            std::set<std::set<int>> distinct;
            for (const auto& [v, s] : label) distinct.insert(s);
            CHECK(distinct.size() == label.size());
            if (k == 1) {
                CHECK((int)sets.size() == n);
            } else {
                int kp = std::min(k, (n + 1) / 2);
                int a = (n + kp - 1) / kp;
                int ell = 1;
                long long pw = a;
                while (pw < n) {
                    pw *= a;
                    ++ell;
                }
                for (const auto& [v, s] : label) CHECK((int)s.size() <= ell);
                CHECK((int)sets.size() <= ell * a);
            }
        }
    }
}

TEST_CASE("source set location in a directed clique") {
    Dag k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    PGraph view = k4.to_pgraph();
    CHECK(s_source_locate(view, {{0, 1}, {2, 3}}) == 0);
    CHECK(s_source_locate(view, {{2, 3}, {0, 1}}) == 1);
    CHECK(s_source_locate(view, {{1, 3}, {0, 2}}) == 1);  // 0 has no incoming

    PGraph part(4);
    part.add_edge(0, 1);  // unoriented between the sets
    CHECK_THROWS_AS(s_source_locate(part, {{0}, {1}}), std::invalid_argument);
}

TEST_CASE("incoming chain component") {
    PGraph view(3);  // 0 -> 1 -> 2 revealed around target {1}, 0 - 1 - 2 path
    view.add_arc(0, 1);
    view.add_arc(1, 2);
    auto q = incoming_chain_component(view, {0, 1, 2}, {1});
    REQUIRE(q.has_value());
    CHECK(*q == std::vector<int>{0});
    CHECK_FALSE(incoming_chain_component(view, {0, 1, 2}, {0}).has_value());

    PGraph bad(3);
    bad.add_edge(0, 1);
    CHECK_THROWS_AS(incoming_chain_component(bad, {0, 1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(incoming_chain_component(view, {0, 1}, {2}), std::invalid_argument);

    PGraph two(3);  // both outer components point into the target
    two.add_arc(0, 1);
    two.add_arc(2, 1);
    CHECK_THROWS_AS(incoming_chain_component(two, {0, 1, 2}, {1}), std::logic_error);
}

TEST_CASE("weighted search avoids the heavy star center") {
    int n = 50;
    Simulator sim(star_instance(n, 1e9), 1, 0, 1);
    auto res = weighted_search(sim);
    check_done(sim);
    for (const auto& s : res.ledger.sets) CHECK(s != std::vector<int>{0});
    CHECK(sim.total_cost() == doctest::Approx(n - 1));
    CHECK(res.phases == 1);
}

TEST_CASE("cheap hub is taken directly") {
    // Same star but a center cheaper than its leaves combined: the dangling
    // cleanup should just intervene the center once.
    WeightedInstance star = star_instance(12, 0.5);
    Simulator sim(star, 1, 0, 1);
    auto res = weighted_search(sim);
    check_done(sim);
    CHECK(res.ledger.sets == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("logarithmic behavior on a long path") {
    Simulator sim(path_instance(256), 1, 0, 1);
    auto res = weighted_search(sim);
    check_done(sim);
    CHECK(res.phases <= 18);  // 2 ceil(log2 n) + 2
    CHECK((int)res.ledger.size() <= 20);
}

TEST_CASE("full orientation on random instances across k") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        WeightedInstance inst = random_instance(4 + (int)(seed % 14), seed);
        for (int k : {1, 3, 5}) {
            Simulator sim(inst, 1, 1, k);
            auto res = generalized_search(sim);
            check_done(sim);
            for (const auto& s : res.ledger.sets) CHECK((int)s.size() <= k);
            CHECK(res.ledger.generalized_cost(inst.weights, 1, 1) ==
                  doctest::Approx(sim.total_cost()));
        }
    }
}

TEST_CASE("generalized search at k = 1 reproduces the atomic ledger") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        WeightedInstance inst = random_instance(5 + (int)(seed % 12), seed * 7);
        Simulator a(inst, 1, 0, 1);
        Simulator b(inst, 1, 0, 1);
        auto ra = weighted_search(a);
        auto rb = generalized_search(b);
        CHECK(ra.ledger.sets == rb.ledger.sets);
        CHECK(ra.phases == rb.phases);
    }
}

TEST_CASE("search is deterministic") {
    WeightedInstance inst = random_instance(15, 99);
    Simulator a(inst, 0, 1, 3);
    Simulator b(inst, 0, 1, 3);
    CHECK(generalized_search(a).ledger.sets == generalized_search(b).ledger.sets);
}

TEST_CASE("naive search goes cheapest first") {
    WeightedInstance p(Dag(4, {{0, 1}, {1, 2}, {2, 3}}), {4, 3, 2, 1});
    Simulator sim(p, 1, 0, 1);
    auto res = naive_search(sim);
    check_done(sim);
    // Ascending weight, stopping as soon as the last edge is pinned down.
    CHECK(res.ledger.sets == std::vector<std::vector<int>>{{3}, {2}, {1}});
    CHECK(res.phases == 3);
}

TEST_CASE("baselines orient fully") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        WeightedInstance inst = random_instance(10, seed * 3);
        {
            Simulator sim(inst, 1, 0, 1);
            Rng rng(seed);
            random_baseline(sim, rng);
            check_done(sim);
        }
        {
            Simulator a(inst, 1, 0, 1), b(inst, 1, 0, 1);
            Rng r1(seed), r2(seed);
            CHECK(random_baseline(a, r1).ledger.sets == random_baseline(b, r2).ledger.sets);
        }
        for (int k : {1, 2}) {
            Simulator sim(inst, 1, 0, k);
            separator_baseline(sim);
            check_done(sim);
        }
    }
}

TEST_CASE("budget doubling combiner") {
    // Star: the cheap arm finishes within a small budget, so the combined
    // run never pays for the heavy center.
    WeightedInstance star = star_instance(40, 1e9);
    auto ledger = blackbox_combine(star, 1, 0, [](SearchInterface& s) { weighted_search(s); });
    CHECK(ledger.total_weight(star.weights) < 1e6);
    Simulator replay(star, 1, 0, 1);
    for (const auto& s : ledger.sets) replay.intervene(s);
    check_done(replay);

    // Zero weight vertices are free and always taken first.
    WeightedInstance p(Dag(3, {{0, 1}, {1, 2}}), {5, 0, 5});
    auto l2 = blackbox_combine(p, 1, 0, [](SearchInterface& s) { weighted_search(s); });
    REQUIRE_FALSE(l2.sets.empty());
    CHECK(l2.sets.front() == std::vector<int>{1});
    CHECK(l2.total_weight(p.weights) == doctest::Approx(0));

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        WeightedInstance inst = random_instance(12, seed * 11);
        auto l = blackbox_combine(inst, 1, 0, [](SearchInterface& s) { weighted_search(s); });
        Simulator sim(inst, 1, 0, 1);
        for (const auto& s : l.sets) sim.intervene(s);
        check_done(sim);
    }
}

TEST_CASE("dangling cleanup leaves the rest of the graph alone") {
    // Build a view where the cleanup target is one chain component among
    // several; vertices outside h must never be intervened.
    WeightedInstance inst = random_instance(14, 4242);
    Simulator sim(inst, 1, 0, 1);
    auto comps = chain_components(sim.view());
    const auto* big = &comps.front();
    for (const auto& c : comps)
        if (c.vertices.size() > big->vertices.size()) big = &c;
    REQUIRE(big->vertices.size() >= 2);
    int v = big->vertices.front();
    auto done = resolve_dangling(sim, big->vertices, v);
    std::set<int> allowed(big->vertices.begin(), big->vertices.end());
    for (const auto& s : done.sets)
        for (int u : s) CHECK(allowed.count(u) == 1);
    // Afterwards every edge at v inside the component is oriented.
    for (int u : sim.view().neighbors(v)) CHECK(allowed.count(u) == 0);

    CHECK_THROWS_AS(resolve_dangling(sim, {0, 1}, 13), std::invalid_argument);
}
