#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homreconf/families.hpp"
#include "homreconf/reduction.hpp"
#include "oracles.hpp"

#include <random>

using namespace homreconf;

namespace {

Graph random_small_graph(std::mt19937_64 & rng, std::size_t max_vertices, std::size_t max_edges)
{
    std::uniform_int_distribution<std::size_t> nd(1, max_vertices);
    std::size_t n = nd(rng);
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex("v" + std::to_string(i));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_int_distribution<std::size_t> md(0, std::min(max_edges, pairs.size()));
    std::size_t m = md(rng);
    for (std::size_t i = 0; i < m; ++i)
        b.add_edge(pairs[i].first, pairs[i].second);
    return b.build();
}

Hom random_colouring(std::mt19937_64 & rng, const Graph & g, std::size_t colours)
{
    auto f = random_hom(HomInstance(g, clique(colours)), rng);
    REQUIRE(f);
    return *f;
}

// Whether the first |V(g)| entries of h form a proper colouring with the given colours.
bool proper_on(const Graph & g, const Hom & h, Vertex colours)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (h[v] >= colours)
            return false;
    for (const auto & e : g.edges())
        if (h[e.u] == h[e.v])
            return false;
    return true;
}

ReconfigPath random_walk(const HomInstance & inst, const Hom & start, std::size_t steps, std::mt19937_64 & rng)
{
    ReconfigPath p;
    p.steps.push_back(start);
    for (std::size_t i = 0; i < steps; ++i) {
        auto moves = inst.single_vertex_moves(p.back());
        if (moves.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        p.steps.push_back(moves[pick(rng)]);
    }
    return p;
}

} // namespace

TEST_CASE("two-layer target")
{
    auto t = wheel_z_target(2);
    REQUIRE(t.layer_count() == 2);
    CHECK(t.layer(0) == wheel(5));
    CHECK(t.layer(1).labels() == z_graph(5).labels());
    CHECK(t.layer(1).size() == z_graph(5).size());
}

TEST_CASE("clique construction on K2")
{
    Hom phi(std::vector<Vertex>{0, 1}), psi(std::vector<Vertex>{1, 0});
    auto red = reduce_clique_to_ecol(2, clique(2), phi, psi);
    const Graph & l1 = red.ec.graph.layer(0);
    CHECK(l1.order() == 18);
    CHECK(l1.tagged("original").size() == 2);
    CHECK(l1.tagged("subdivision").size() == 2);
    CHECK(l1.tagged("locking").size() == 8);
    CHECK(l1.tagged("W").size() == 6);
    CHECK(red.wheel_copy.size() == 6);
    CHECK(l1.label(red.hub()) == "Walpha");
    CHECK(red.subdivision.size() == 1);
    CHECK(red.subdivision[0].size() == 2);

    auto inst = red.ec.hom_instance();
    CHECK(inst.is_hom(red.ec.start));
    CHECK(inst.is_hom(red.ec.end));
    CHECK(red.ec.start == clique_extension(red, phi));
    for (Vertex v = 0; v < 2; ++v) {
        CHECK(red.ec.start[v] == phi[v]);
        CHECK(red.ec.end[v] == psi[v]);
    }
    for (Vertex v = 0; v < l1.order(); ++v)
        if (v != red.hub())
            CHECK(red.ec.start[v] != 5);
}

TEST_CASE("clique construction rejects bad input")
{
    Hom phi(std::vector<Vertex>{0, 1}), same(std::vector<Vertex>{0, 0});
    CHECK_THROWS_AS(reduce_clique_to_ecol(1, clique(2), phi, phi), std::invalid_argument);
    CHECK_THROWS_AS(reduce_clique_to_ecol(2, clique(2), phi, same), std::invalid_argument);
    CHECK_THROWS_AS(reduce_clique_to_ecol(2, clique(2), phi, Hom(std::vector<Vertex>{0, 7})), std::invalid_argument);
    CHECK_THROWS_AS(reduce_clique_to_ecol(2, z_graph(3), Hom(std::vector<Vertex>(4, 0)), Hom(std::vector<Vertex>(4, 0))),
                    std::invalid_argument);
}

TEST_CASE("clique translation and restriction on random graphs")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t k = trial % 5 == 4 ? 3 : 2;
        Graph g = random_small_graph(rng, 4, 4);
        Hom phi = random_colouring(rng, g, 2 * k + 1), psi = random_colouring(rng, g, 2 * k + 1);
        HomInstance source(g, clique(2 * k + 1));
        auto found = reconfigures(source, phi, psi);
        REQUIRE(found.path);

        auto red = reduce_clique_to_ecol(k, g, phi, psi);
        auto inst = red.ec.hom_instance();
        ReconfigPath lifted = translate_clique_to_ecol(red, *found.path);
        CHECK(lifted.front() == red.ec.start);
        CHECK(lifted.back() == red.ec.end);
        CHECK(is_valid_path(inst, lifted));

        ReconfigPath back = restrict_ecol_to_clique(red, lifted);
        CHECK(back.front() == phi);
        CHECK(back.back() == psi);
        CHECK(is_valid_path(source, back));
        for (const auto & step : back.steps)
            CHECK(proper_on(g, step, static_cast<Vertex>(2 * k + 1)));
    }
}

TEST_CASE("wheel construction")
{
    Hom phi(std::vector<Vertex>{0, 1}), psi(std::vector<Vertex>{1, 0});
    auto red = reduce_clique_to_ecol(2, clique(2), phi, psi);
    auto wr = reduce_ecol_to_wheel(red.ec);
    const std::size_t n = red.ec.graph.order(), m2 = red.ec.graph.layer(1).size();
    CHECK(wr.graph.order() == n + 10 * 2 * m2);
    CHECK(wr.graph.tagged("gadget").size() == 10 * 2 * m2);
    CHECK(wr.placements.size() == m2);
    CHECK(wr.graph.has_loops() == false);
    auto inst = wr.hom_instance();
    CHECK(inst.is_hom(wr.start));
    CHECK(inst.is_hom(wr.end));
    CHECK(wr.start == wheel_extension(wr, red.ec.start));
    for (Vertex v = 0; v < n; ++v)
        CHECK(wr.start[v] == red.ec.start[v]);

    // Every first-layer edge survives, and every second-layer edge is replaced by a gadget.
    oracle::Matrix mw(wr.graph);
    for (auto [u, v] : oracle::edge_pairs(red.ec.graph.layer(0)))
        CHECK(mw(u, v));
    for (const auto & p : wr.placements) {
        CHECK(p.a < p.b);
        CHECK(red.ec.graph.layer(1).adjacent(p.a, p.b));
        CHECK(p.globals[wr.gadget.x()] == p.a);
        CHECK(p.globals[wr.gadget.y()] == p.b);
    }
}

TEST_CASE("composed round trip")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_small_graph(rng, 3, 3);
        Hom phi = random_colouring(rng, g, 5), psi = random_colouring(rng, g, 5);
        HomInstance source(g, clique(5));
        auto found = reconfigures(source, phi, psi);
        REQUIRE(found.path);
        auto red = reduce_clique_to_wheel(2, g, phi, psi);
        auto inst = red.wheel.hom_instance();
        ReconfigPath lifted = translate_composed(red, *found.path);
        CHECK(lifted.front() == red.wheel.start);
        CHECK(lifted.back() == red.wheel.end);
        CHECK(is_valid_path(inst, lifted));

        ReconfigPath mid = restrict_wheel_to_ecol(red.wheel, lifted);
        CHECK(is_valid_path(red.clique.ec.hom_instance(), mid));
        CHECK(mid.front() == red.clique.ec.start);
        CHECK(mid.back() == red.clique.ec.end);

        ReconfigPath back = restrict_composed(red, lifted);
        CHECK(is_valid_path(source, back));
        CHECK(back.front() == phi);
        CHECK(back.back() == psi);
    }
}

TEST_CASE("random walks restrict to source paths")
{
    // Every proper 5-colouring of K5 is frozen. Walks in the constructed instances may pass
    // through improper restrictions, but the proper ones must all equal the identity.
    Hom id(std::vector<Vertex>{0, 1, 2, 3, 4}), other(std::vector<Vertex>{1, 0, 2, 3, 4});
    Graph k5 = clique(5);
    auto red = reduce_clique_to_wheel(2, k5, id, other);
    std::mt19937_64 rng(8);
    auto ec_inst = red.clique.ec.hom_instance();
    auto wheel_inst = red.wheel.hom_instance();
    for (int walk = 0; walk < 3; ++walk) {
        ReconfigPath p = random_walk(ec_inst, red.clique.ec.start, 4000, rng);
        while (!proper_on(k5, p.back(), 5))
            p.steps.pop_back();
        for (const auto & step : restrict_ecol_to_clique(red.clique, p).steps)
            CHECK(step == id);
    }
    ReconfigPath q = random_walk(wheel_inst, red.wheel.start, 1500, rng);
    while (!proper_on(k5, q.back(), 5))
        q.steps.pop_back();
    for (const auto & step : restrict_composed(red, q).steps)
        CHECK(step == id);

    // A source whose colourings do move: restrictions stay valid source paths.
    Graph g = path(3);
    Hom phi(std::vector<Vertex>{0, 1, 0}), psi(std::vector<Vertex>{2, 3, 4});
    auto small = reduce_clique_to_ecol(2, g, phi, psi);
    auto inst = small.ec.hom_instance();
    for (int walk = 0; walk < 10; ++walk) {
        ReconfigPath p = random_walk(inst, small.ec.start, 3000, rng);
        while (!proper_on(g, p.back(), 5))
            p.steps.pop_back();
        CHECK(is_valid_path(HomInstance(g, clique(5)), restrict_ecol_to_clique(small, p)));
    }
}
