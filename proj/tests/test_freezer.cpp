#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homreconf/families.hpp"
#include "homreconf/freezer.hpp"
#include "homreconf/frozen_search.hpp"
#include "homreconf/structure.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace homreconf;

namespace {

Graph random_graph(std::mt19937_64 & rng, std::size_t n, double p, double loop_p)
{
    std::bernoulli_distribution edge(p), loop(loop_p);
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex(std::to_string(i));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v)
            if (u == v ? loop(rng) : edge(rng))
                b.add_edge(u, v);
    return b.build();
}

Graph random_connected(std::mt19937_64 & rng, std::size_t n, double p, double loop_p)
{
    while (true) {
        Graph g = random_graph(rng, n, p, loop_p);
        if (is_connected(g))
            return g;
    }
}

Graph reflexive_point()
{
    GraphBuilder b;
    b.add_vertex("o");
    b.add_edge(0, 0);
    return b.build();
}

std::vector<Vertex> s_f_members(const Graph & f)
{
    return compute_s_f(f).s_f.members();
}

} // namespace

TEST_CASE("S_F of named graphs")
{
    for (std::size_t n = 2; n <= 6; ++n) {
        CHECK(s_f_members(clique(n)).size() == n);
        CHECK(s_f_members(clique(n)) == oracle::s_f(clique(n)));
    }
    CHECK(s_f_members(wheel(5)).size() == 6);
    CHECK(s_f_members(wheel(5)) == oracle::s_f(wheel(5)));
    CHECK(s_f_members(cycle(5)).size() == 5);
    CHECK(s_f_members(cycle(6)).size() == 6);
    CHECK(is_thermal(path(3)));
    CHECK(is_thermal(path(5)));
    CHECK(is_thermal(z_graph(5)));
    CHECK(oracle::s_f(z_graph(5)).empty());
    CHECK(is_thermal(complete_multipartite({2, 2, 2})));
    CHECK(oracle::s_f(complete_multipartite({2, 2, 2})).empty());
    CHECK(is_thermal(complete_multipartite({1, 3})));
    CHECK_FALSE(is_thermal(reflexive_point()));
    CHECK_FALSE(is_thermal(clique(2)));
    CHECK_THROWS(compute_s_f(disjoint_union({clique(2), clique(2)})));
}

TEST_CASE("elimination records a witness for every removed vertex")
{
    Graph p = path(4);
    auto c = compute_s_f(p);
    CHECK(c.thermal);
    CHECK(c.eliminations.size() == 4);
    VertexSet s = VertexSet::full(4);
    for (auto e : c.eliminations) {
        VertexSet mine = p.neighbourhood(e.vertex) & s;
        CHECK(e.vertex != e.witness);
        CHECK(mine.is_subset_of(p.neighbourhood(e.witness)));
        s.erase(e.vertex);
    }
}

TEST_CASE("S_F agrees with brute force and ignores elimination order")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 120; ++i) {
        std::size_t n = 1 + i % 7;
        Graph g = random_connected(rng, n, 0.45, i % 3 == 0 ? 0.3 : 0.0);
        auto expected = oracle::s_f(g);
        CHECK(s_f_members(g) == expected);
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v)
            order[v] = v;
        for (int r = 0; r < 20; ++r) {
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(compute_s_f(g, order).s_f.members() == expected);
        }
    }
}

TEST_CASE("freezer of a disconnected graph")
{
    Graph h = disjoint_union({path(3), cycle(5), clique(2)});
    auto report = analyse_freezer(h);
    REQUIRE(report.components.size() == 3);
    CHECK(report.components[0].thermal);
    CHECK(report.s_h.count() == 7);
    Graph f = report.freezer;
    CHECK(f.order() == 7);
    CHECK(f.tagged("component1").size() == 5);
    CHECK(f.tagged("component2").size() == 2);
    CHECK(f.size() == 6);
    CHECK(freezer(h) == f);
}

TEST_CASE("distinguishing sets")
{
    Graph w5 = wheel(5);
    const Vertex a = w5.at(alpha_label);
    VertexSet all = VertexSet::full(6);
    CHECK(is_distinguishing(w5, all, VertexSet(6, {1, 2}), a));
    CHECK(is_distinguishing(w5, all, VertexSet(6, {0, 1, 2, 3, 4}), a));
    CHECK_FALSE(distinguishing_target(w5, all, VertexSet(6, {1, 4})).has_value());
    CHECK(distinguishing_target(w5, all, VertexSet(6, {1, 3, a})) == 2u);

    auto fam = distinguishing_family(w5);
    for (const auto & d : fam) {
        std::vector<Vertex> common = oracle::common_neighbours(w5, d.set.members());
        REQUIRE(common.size() == 1);
        CHECK(common[0] == d.target);
        CHECK(d.set.count() >= 2);
    }
    std::size_t brute = 0;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        std::vector<Vertex> d;
        for (Vertex v = 0; v < 6; ++v)
            if ((mask >> v) & 1)
                d.push_back(v);
        brute += oracle::common_neighbours(w5, d).size() == 1 ? 1 : 0;
    }
    CHECK(fam.size() == brute);
    for (std::size_t i = 1; i < fam.size(); ++i)
        CHECK(fam[i - 1].set.count() <= fam[i].set.count());

    CHECK_THROWS(distinguishing_family(clique(2)));
}

TEST_CASE("classification")
{
    CHECK(classify(clique(3)).summary() == "np-complete");
    CHECK(classify(cycle(5)).summary() == "np-complete");
    CHECK(classify(wheel(5)).summary() == "np-complete");
    CHECK(classify(path(3)).summary() == "poly: thermal");
    CHECK(classify(z_graph(5)).summary() == "poly: thermal");
    CHECK(classify(complete_multipartite({2, 2, 2})).summary() == "poly: thermal");
    CHECK(classify(clique(2)).summary() == "poly: thermal-or-small");
    CHECK(classify(disjoint_union({clique(2), path(4)})).summary() == "poly: thermal-or-small");
    CHECK(classify(reflexive_point()).summary() == "poly: thermal-or-small");

    auto k2c6 = classify(disjoint_union({clique(2), cycle(6)}));
    CHECK(k2c6.which == DichotomyCase::poly_k2_bipartite_freezer);
    CHECK(k2c6.summary() == "poly: K2 with bipartite freezer");
    CHECK(k2c6.evidence == std::vector<std::size_t>{0});

    auto k2c5 = classify(disjoint_union({clique(2), cycle(5)}));
    CHECK(k2c5.which == DichotomyCase::np_complete);
    CHECK(k2c5.evidence == std::vector<std::size_t>{1});

    auto refl = classify(disjoint_union({clique(3), reflexive_point()}));
    CHECK(refl.summary() == "poly: reflexive singleton");
    CHECK(refl.evidence == std::vector<std::size_t>{1});
    CHECK(refl.polynomial());
}

TEST_CASE("polynomial decider agrees with exhaustive search")
{
    std::vector<Graph> targets{
        clique(2),
        path(4),
        z_graph(3),
        disjoint_union({clique(2), cycle(6)}),
        disjoint_union({clique(3), reflexive_point()}),
        disjoint_union({cycle(5), reflexive_point(), clique(2)}),
        disjoint_union({clique(2), path(3)}),
        reflexive_point(),
    };
    std::mt19937_64 rng(77);
    for (const auto & h : targets) {
        REQUIRE(classify(h).polynomial());
        for (int i = 0; i < 25; ++i) {
            Graph g = random_graph(rng, 1 + i % 6, 0.45, 0.0);
            auto r = frozen_hom_search(g, h);
            REQUIRE(r.status != SearchStatus::budget_exhausted);
            CHECK(decide_frozen_poly(h, g) == (r.status == SearchStatus::found));
        }
    }
    CHECK_THROWS(decide_frozen_poly(clique(3), clique(3)));
}

TEST_CASE("distinguishing criterion matches freezing")
{
    std::vector<Graph> targets{wheel(5), cycle(5), clique(3), clique(4), disjoint_union({clique(2), cycle(5)})};
    std::vector<Graph> sources{clique(3), cycle(5), cycle(7), path(3), wheel(5), clique(2)};
    for (const auto & h : targets) {
        auto report = analyse_freezer(h);
        for (const auto & g : sources) {
            HomInstance inst(g, h);
            for (const auto & f : all_homs(inst).homs)
                CHECK(is_frozen_via_distinguishing(g, h, report, f) == inst.is_frozen(f));
        }
    }
    CHECK_THROWS(is_frozen_via_distinguishing(reflexive_point(), z_graph(3), Hom(std::vector<Vertex>{0})));
}
