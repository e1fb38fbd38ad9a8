#include <doctest.h>

#include <algorithm>
#include <set>

#include "wcdag/gen.hpp"
#include "wcdag/mec.hpp"

using namespace wcdag;

namespace {

// Reference interventional essential graph: keep exactly the orientations
// shared by every class member that agrees with d on the edges cut by I.
PGraph brute_interventional(const Dag& d, const InterventionSet& I) {
    std::vector<Dag> mec = enumerate_mec(essential_graph(d));
    std::vector<Dag> agree;
    for (const Dag& m : mec) {
        bool ok = true;
        for (const auto& s : I.sets) {
            std::set<int> in_s(s.begin(), s.end());
            for (auto [u, v] : d.arc_list()) {
                if (in_s.count(u) == in_s.count(v)) continue;  // not cut
                if (!m.has_arc(u, v)) ok = false;
            }
        }
        if (ok) agree.push_back(m);
    }
    PGraph out(d.n());
    for (auto [u, v] : d.arc_list()) {
        bool all_uv = true, all_vu = true;
        for (const Dag& m : agree) {
            all_uv = all_uv && m.has_arc(u, v);
            all_vu = all_vu && m.has_arc(v, u);
        }
        if (all_uv)
            out.add_arc(u, v);
        else if (all_vu)
            out.add_arc(v, u);
        else
            out.add_edge(u, v);
    }
    return out;
}

std::vector<Dag> random_moral_dags() {
    std::vector<Dag> out;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        out.push_back(gen_er_moral(3 + (int)(seed % 5), 0.3, seed + 77));
    return out;
}

}  // namespace

TEST_CASE("skeleton and v-structures") {
    Dag collider(3, {{0, 2}, {1, 2}});
    PGraph sk = skeleton(collider);
    CHECK(sk.num_arcs() == 0);
    CHECK(sk.edge_list() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(v_structures(collider) == std::vector<std::array<int, 3>>{{0, 2, 1}});

    // Shielded collider is not a v-structure.
    Dag shielded(3, {{0, 2}, {1, 2}, {0, 1}});
    CHECK(v_structures(shielded).empty());
    CHECK(v_structures(Dag(3, {{0, 1}, {1, 2}})).empty());
}

TEST_CASE("each orientation rule fires") {
    SUBCASE("arrow chained through a non-adjacent tail") {
        PGraph g(3);  // 0 -> 1, 1 - 2, 0 not adjacent 2
        g.add_arc(0, 1);
        g.add_edge(1, 2);
        PGraph c = meek_closure(g);
        CHECK(c.has_arc(1, 2));
        CHECK(c.fully_oriented());
    }
    SUBCASE("edge parallel to a directed path") {
        PGraph g(3);  // 0 -> 1 -> 2, 0 - 2
        g.add_arc(0, 1);
        g.add_arc(1, 2);
        g.add_edge(0, 2);
        CHECK(meek_closure(g).has_arc(0, 2));
    }
    SUBCASE("hub above an unshielded collider") {
        PGraph g(4);  // 0 - 1, 0 - 2, 0 - 3, 2 -> 1 <- 3, 2 not adjacent 3
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_arc(2, 1);
        g.add_arc(3, 1);
        PGraph c = meek_closure(g);
        CHECK(c.has_arc(0, 1));
        CHECK(c.has_edge(0, 2));
        CHECK(c.has_edge(0, 3));
    }
    SUBCASE("hub above a directed path of two arcs") {
        PGraph g(4);  // 3 - 0 - 2 with 3 -> 2 -> 1, 0 - 1, 1 not adjacent 3
        g.add_edge(0, 3);
        g.add_edge(0, 2);
        g.add_edge(0, 1);
        g.add_arc(3, 2);
        g.add_arc(2, 1);
        PGraph c = meek_closure(g);
        CHECK(c.has_arc(0, 1));
    }
}

TEST_CASE("closure keeps the skeleton and is idempotent") {
    PGraph g(4);
    g.add_arc(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    PGraph c = meek_closure(g);
    CHECK(c.num_arcs() + c.num_undirected() == g.num_arcs() + g.num_undirected());
    for (auto [u, v] : g.arc_list()) CHECK(c.has_arc(u, v));
    CHECK(meek_closure(c) == c);
}

TEST_CASE("closure is order independent") {
    std::vector<std::array<int, 4>> orders;
    std::array<int, 4> p{1, 2, 3, 4};
    do orders.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(orders.size() == 24);

    std::vector<PGraph> inputs;
    for (const Dag& d : random_moral_dags()) {
        PGraph sk = skeleton(d);
        // Orient the edges cut by a singleton intervention to create work.
        for (auto [u, v] : d.arc_list())
            if (u == d.topo()[0] || v == d.topo()[0]) sk.orient(u, v);
        inputs.push_back(sk);
    }
    Dag collider(4, {{0, 2}, {1, 2}, {2, 3}});
    PGraph withv = skeleton(collider);
    withv.orient(0, 2);
    withv.orient(1, 2);
    inputs.push_back(withv);

    for (const PGraph& g : inputs) {
        PGraph base = meek_closure(g);
        for (const auto& o : orders) CHECK(meek_closure_ordered(g, o) == base);
    }
}

TEST_CASE("essential graphs of standard DAGs") {
    // Markov equivalent orientations of a path leave everything undirected.
    PGraph p = essential_graph(Dag(3, {{0, 1}, {1, 2}}));
    CHECK(p.num_arcs() == 0);
    CHECK(p.num_undirected() == 2);

    PGraph c = essential_graph(Dag(3, {{0, 2}, {1, 2}}));
    CHECK(c.has_arc(0, 2));
    CHECK(c.has_arc(1, 2));

    PGraph k3 = essential_graph(Dag(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(k3.num_arcs() == 0);
    CHECK(k3.num_undirected() == 3);

    // Collider plus a tail: the tail edge is forced away from the collider.
    PGraph t = essential_graph(Dag(4, {{0, 2}, {1, 2}, {2, 3}}));
    CHECK(t.has_arc(2, 3));
}

TEST_CASE("interventional essential graph") {
    Dag path(3, {{0, 1}, {1, 2}});
    InterventionSet mid;
    mid.add({1});
    CHECK(interventional_essential_graph(path, mid).fully_oriented());

    InterventionSet end;
    end.add({0});
    PGraph v = interventional_essential_graph(path, end);
    CHECK(v.fully_oriented());  // 0 -> 1 revealed, 1 -> 2 follows by rule one

    InterventionSet empty;
    CHECK(interventional_essential_graph(path, empty) == essential_graph(path));

    // A size-2 intervention cuts only edges crossing the set boundary; the
    // internal 0-1 edge of a triangle stays ambiguous.
    Dag k3(3, {{0, 1}, {0, 2}, {1, 2}});
    InterventionSet pair;
    pair.add({0, 1});
    PGraph g = interventional_essential_graph(k3, pair);
    CHECK(g.has_arc(0, 2));
    CHECK(g.has_arc(1, 2));
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("covered edges") {
    CHECK(covered_edges(Dag(3, {{0, 1}, {1, 2}})) == std::vector<Arc>{{0, 1}});
    CHECK(covered_edges(Dag(3, {{0, 1}, {0, 2}, {1, 2}})) ==
          std::vector<Arc>{{0, 1}, {1, 2}});
    CHECK(covered_edges(Dag(3, {{0, 2}, {1, 2}})).empty());
    // Star out of the center: every arc is covered.
    CHECK(covered_edges(Dag(3, {{0, 1}, {0, 2}})) == std::vector<Arc>{{0, 1}, {0, 2}});
}

TEST_CASE("class enumeration on small graphs") {
    CHECK(enumerate_mec(essential_graph(Dag(3, {{0, 1}, {1, 2}}))).size() == 3);
    CHECK(enumerate_mec(essential_graph(Dag(3, {{0, 1}, {0, 2}, {1, 2}}))).size() == 6);
    CHECK(enumerate_mec(essential_graph(Dag(3, {{0, 2}, {1, 2}}))).size() == 1);
    // Star with 4 leaves: the class is center-out plus one leaf-in per leaf.
    Dag star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(enumerate_mec(essential_graph(star)).size() == 5);
}

TEST_CASE("enumeration members are exactly the equivalent DAGs") {
    for (const Dag& d : random_moral_dags()) {
        PGraph eg = essential_graph(d);
        std::vector<Dag> mec = enumerate_mec(eg);
        CHECK(std::count(mec.begin(), mec.end(), d) == 1);
        std::set<std::vector<Arc>> dedup;
        for (const Dag& m : mec) {
            dedup.insert(m.arc_list());
            CHECK(essential_graph(m) == eg);
            CHECK(is_consistent_extension(m, eg));
        }
        CHECK(dedup.size() == mec.size());
    }
}

TEST_CASE("enumeration guard on oversized inputs") {
    PGraph big(9);  // 36 undirected edges
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) big.add_edge(u, v);
    CHECK_THROWS_AS(enumerate_mec(big), std::runtime_error);
}

TEST_CASE("interventional graph matches the class intersection") {
    for (const Dag& d : random_moral_dags()) {
        if (d.n() > 5) continue;
        for (int v = 0; v < d.n(); ++v) {
            InterventionSet I;
            I.add({v});
            CHECK(interventional_essential_graph(d, I) == brute_interventional(d, I));
        }
        InterventionSet two;
        two.add({0});
        two.add({d.n() - 1});
        CHECK(interventional_essential_graph(d, two) == brute_interventional(d, two));
    }
}
