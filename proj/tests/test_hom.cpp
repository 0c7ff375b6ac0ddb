#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homreconf/families.hpp"
#include "homreconf/frozen_search.hpp"
#include "homreconf/hom.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace homreconf;

namespace {

Hom make(std::initializer_list<Vertex> xs)
{
    return Hom(std::vector<Vertex>(xs));
}

Graph reflexive_vertex()
{
    GraphBuilder b;
    b.add_vertex("v");
    b.add_edge(0, 0);
    return b.build();
}

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

std::set<Hom> as_set(const std::vector<Hom> & v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("homomorphism checks")
{
    Graph w5 = wheel(5);
    HomInstance ww(w5, w5);
    CHECK(ww.is_hom(make({0, 1, 2, 3, 4, 5})));
    HomInstance cc(cycle(5), cycle(5));
    CHECK_FALSE(cc.is_hom(make({0, 0, 0, 0, 0})));
    HomInstance cz(cycle(5), z_graph(5));
    CHECK(cz.is_hom(make({2, 2, 2, 2, 2})));
    CHECK_THROWS(cc.check(make({0, 1})));
}

TEST_CASE("enumeration matches brute force")
{
    CHECK(all_homs(HomInstance(clique(2), clique(3))).homs.size() == 6);
    CHECK(all_homs(HomInstance(cycle(5), cycle(5))).homs.size() == oracle::all_homs(cycle(5), cycle(5)).size());
    CHECK(oracle::all_homs(cycle(5), cycle(5)).size() == 10);
    auto ww = all_homs(HomInstance(wheel(5), wheel(5))).homs;
    CHECK(ww.size() == 10);
    CHECK(oracle::all_homs(wheel(5), wheel(5)).size() == 10);
    for (const auto & f : ww)
        CHECK(f[5] == 5);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, 1 + i % 5, 0.5, 0.15);
        Graph h = random_graph(rng, 1 + i % 4, 0.6, 0.3);
        HomInstance inst(g, h);
        auto lib = all_homs(inst).homs;
        CHECK(as_set(lib) == as_set(oracle::all_homs(g, h)));
        CHECK(lib.size() == as_set(lib).size());
        CHECK(first_hom(inst).has_value() == !lib.empty());
    }

    auto capped = all_homs(HomInstance(path(6), clique(4)), {}, 10);
    CHECK(capped.homs.size() == 10);
    CHECK(capped.truncated);

    auto pinned = all_homs(HomInstance(clique(2), clique(3)), {{0, 2}});
    CHECK(pinned.homs.size() == 2);
}

TEST_CASE("adjacency in the reconfiguration graph")
{
    HomInstance inst(clique(2), clique(3));
    Hom f = make({0, 1});
    CHECK(inst.adjacent(f, f));
    CHECK(inst.adjacent(make({0, 1}), make({2, 1})));
    CHECK_FALSE(inst.adjacent(make({0, 1}), make({1, 0})));
    CHECK(oracle::adjacent(clique(2), clique(3), {0, 1}, {2, 1}));
    CHECK_FALSE(oracle::adjacent(clique(2), clique(3), {0, 1}, {1, 0}));
}

TEST_CASE("single-vertex moves")
{
    HomInstance inst(clique(2), clique(3));
    auto moves = inst.single_vertex_moves(make({0, 1}));
    CHECK(as_set(moves) == std::set<Hom>{make({2, 1}), make({0, 2})});

    Graph z5 = z_graph(5);
    HomInstance refl(reflexive_vertex(), z5);
    auto rm = refl.single_vertex_moves(make({0}));
    std::set<Hom> expected;
    for (Vertex c : z5.neighbours(0))
        if (c != 0 && z5.has_loop(c))
            expected.insert(make({c}));
    CHECK(as_set(rm) == expected);
    CHECK(rm.size() == 4);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, 1 + i % 4, 0.5, 0.25);
        Graph h = random_graph(rng, 2 + i % 3, 0.6, 0.4);
        HomInstance hi(g, h);
        for (const auto & f : oracle::all_homs(g, h)) {
            CHECK(as_set(hi.single_vertex_moves(f)) == as_set(oracle::one_vertex_neighbours(g, h, f)));
            for (const auto & k : hi.single_vertex_moves(f))
                CHECK(as_set(hi.single_vertex_moves(k)).count(f) == 1);
        }
    }
}

TEST_CASE("reconfiguration by breadth-first search")
{
    HomInstance inst(clique(2), clique(3));
    auto same = reconfigures(inst, make({0, 1}), make({0, 1}));
    REQUIRE(same.path);
    CHECK(same.path->length() == 0);

    auto swap = reconfigures(inst, make({0, 1}), make({1, 0}));
    REQUIRE(swap.status == SearchStatus::found);
    CHECK(swap.path->length() == 3);
    CHECK(oracle::distance(clique(2), clique(3), make({0, 1}), make({1, 0})) == 3u);
    CHECK(is_valid_path(inst, *swap.path));

    HomInstance k5(clique(5), clique(5));
    auto homs = all_homs(k5).homs;
    CHECK(homs.size() == 120);
    for (const auto & f : homs)
        CHECK(k5.is_frozen(f));
    auto none = reconfigures(k5, make({0, 1, 2, 3, 4}), make({1, 0, 2, 3, 4}));
    CHECK(none.status == SearchStatus::none);

    SearchOptions tiny;
    tiny.state_budget = 2;
    auto cut = reconfigures(HomInstance(path(4), cycle(5)), make({0, 1, 0, 1}), make({2, 3, 2, 3}), tiny);
    CHECK(cut.status == SearchStatus::budget_exhausted);
}

TEST_CASE("reachability agrees with components")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(rng, 2 + i % 3, 0.6, 0.0);
        Graph h = random_graph(rng, 3 + i % 2, 0.7, 0.3);
        HomInstance inst(g, h);
        auto homs = all_homs(inst).homs;
        if (homs.empty())
            continue;
        auto comp = component_of(inst, homs.front());
        std::set<Hom> members(comp.members.begin(), comp.members.end());
        for (const auto & k : homs) {
            auto r = reconfigures(inst, homs.front(), k);
            CHECK((r.status == SearchStatus::found) == (members.count(k) == 1));
            if (r.path) {
                CHECK(is_valid_path(inst, *r.path));
                CHECK(r.path->length() == oracle::distance(g, h, homs.front(), k));
            }
        }
    }
}

TEST_CASE("mixing")
{
    CHECK(is_mixing(HomInstance(path(4), cycle(5))) == true);
    CHECK(is_mixing(HomInstance(cycle(6), cycle(5))) == true);
    CHECK(is_mixing(HomInstance(cycle(5), cycle(5))) == false);
    auto hg = analyse_hom_graph(HomInstance(cycle(5), cycle(5)));
    CHECK(hg.component_count == 10);
    CHECK(oracle::component_count(cycle(5), cycle(5)) == 10);
    CHECK(hg.component_count == hg.homs.size());
    CHECK_FALSE(is_mixing(HomInstance(path(6), clique(4)), 5).has_value());
}

TEST_CASE("fixed and frozen vertices")
{
    HomInstance ww(wheel(5), wheel(5));
    for (const auto & f : all_homs(ww).homs)
        CHECK(ww.is_frozen(f));

    HomInstance kk(clique(2), clique(3));
    for (const auto & f : all_homs(kk).homs)
        CHECK_FALSE(kk.is_frozen(f));

    std::mt19937_64 rng(19);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng, 1 + i % 4, 0.5, 0.2);
        Graph h = random_graph(rng, 2 + i % 4, 0.55, 0.3);
        HomInstance inst(g, h);
        for (const auto & f : all_homs(inst).homs) {
            VertexSet fixed = inst.fixed_vertices(f);
            auto frozen = frozen_vertices(inst, f);
            REQUIRE(frozen);
            CHECK(frozen->is_subset_of(fixed));
            auto comp = component_of(inst, f);
            bool singleton = comp.members.size() == 1;
            CHECK(inst.is_frozen(f) == singleton);
            CHECK(inst.is_frozen(f) == (fixed.count() == g.order()));
            CHECK(singleton == oracle::isolated(g, h, f));
        }
    }
}

TEST_CASE("component diameter")
{
    HomInstance inst(clique(2), clique(3));
    auto d = component_diameter(inst, make({0, 1}));
    CHECK(d.exact);
    CHECK(d.value == 3);
    auto single = component_diameter(HomInstance(cycle(5), cycle(5)), make({0, 1, 2, 3, 4}));
    CHECK(single.value == 0);
}

TEST_CASE("normalising multi-vertex steps")
{
    HomInstance inst(path(3), cycle(5));
    ReconfigPath p;
    p.steps = {make({0, 1, 0}), make({2, 1, 2})};
    REQUIRE(is_valid_path(inst, p));
    ReconfigPath n = normalise_path(p);
    CHECK(n.length() == 2);
    CHECK(is_valid_path(inst, n));
}

TEST_CASE("state encoding round-trips")
{
    StateCodec codec(7, 6);
    Hom f = make({0, 5, 3, 1, 4, 2, 5});
    CHECK(codec.decode(codec.encode(f)) == f);
}

TEST_CASE("frozen search")
{
    auto two = disjoint_union({clique(2), clique(2)});
    auto r = frozen_hom_search(cycle(6), two);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(HomInstance(cycle(6), two).is_frozen(*r.witness));

    CHECK(frozen_hom_search(clique(3), complete_multipartite({2, 2, 2})).status == SearchStatus::none);

    auto k5 = frozen_hom_search(clique(5), clique(5));
    REQUIRE(k5.status == SearchStatus::found);
    CHECK(HomInstance(clique(5), clique(5)).is_frozen(*k5.witness));

    FrozenSearchOptions tiny;
    tiny.node_budget = 1;
    CHECK(frozen_hom_search(cycle(9), cycle(3), tiny).status != SearchStatus::found);
}

TEST_CASE("frozen search agrees with filtering every homomorphism")
{
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 1 + i % 6;
        std::size_t m = 2 + (i / 6) % 2;  // m^n stays within 3^6
        Graph g = random_graph(rng, n, 0.5, i % 5 == 0 ? 0.2 : 0.0);
        Graph h = random_graph(rng, m, 0.6, 0.3);
        bool expected = false;
        for (const auto & f : oracle::all_homs(g, h))
            expected = expected || oracle::isolated(g, h, f);
        auto r = frozen_hom_search(g, h);
        REQUIRE(r.status != SearchStatus::budget_exhausted);
        CHECK((r.status == SearchStatus::found) == expected);
        ++checked;
    }
    CHECK(checked == 300);
}
