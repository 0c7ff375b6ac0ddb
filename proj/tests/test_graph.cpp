#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homreconf/families.hpp"
#include "homreconf/io.hpp"
#include "homreconf/product.hpp"
#include "homreconf/structure.hpp"
#include "oracles.hpp"

#include <random>

using namespace homreconf;

namespace {

bool same_shape(const Graph & a, const Graph & b)
{
    return a.order() == b.order() && a.edges() == b.edges();
}

Graph random_graph(std::mt19937_64 & rng, std::size_t n, double p, double loop_p)
{
    std::bernoulli_distribution edge(p), loop(loop_p);
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex("r" + std::to_string(i));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v)
            if (u == v ? loop(rng) : edge(rng))
                b.add_edge(u, v);
    return b.build();
}

} // namespace

TEST_CASE("cycles")
{
    Graph c5 = cycle(5);
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    CHECK_FALSE(is_bipartite(c5));
    CHECK(same_shape(cycle(3), clique(3)));
    CHECK(is_bipartite(cycle(6)));
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("paths")
{
    CHECK(path(5).size() == 4);
    CHECK(path(1).order() == 1);
    CHECK(path(1).size() == 0);
    CHECK(same_shape(path(2), clique(2)));
    CHECK_THROWS(path(0));
}

TEST_CASE("wheels")
{
    Graph w5 = wheel(5);
    CHECK(w5.order() == 6);
    CHECK(w5.size() == 10);
    CHECK(same_shape(wheel(3), clique(4)));
    Graph w7 = wheel(7);
    CHECK(w7.degree(w7.at(alpha_label)) == 7);
    CHECK_FALSE(w5.has_loops());
    CHECK_THROWS(wheel(2));
}

TEST_CASE("Z graphs")
{
    Graph z5 = z_graph(5);
    CHECK(z5.order() == 6);
    std::size_t loops = 0;
    for (Vertex v = 0; v < 6; ++v)
        loops += z5.has_loop(v) ? 1 : 0;
    CHECK(loops == 5);
    const Vertex a = z5.at(alpha_label);
    CHECK_FALSE(z5.adjacent(a, a));
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = 0; v < 6; ++v)
            if (u != v)
                CHECK(z5.adjacent(u, v));
    for (std::size_t m : {3, 5, 7})
        CHECK(z_graph(m).labels() == wheel(m).labels());
    CHECK(z_graph(3).size() == 6 + 3);
    CHECK_THROWS(z_graph(2));
}

TEST_CASE("subdivision, multipartite, induced subgraphs")
{
    Graph s = subdivide_edges(clique(3), 2);
    CHECK(s.order() == 9);
    CHECK(s.size() == 9);
    CHECK(s.tagged("subdivision").size() == 6);
    for (std::size_t t = 0; t < 4; ++t) {
        Graph g = subdivide_edges(wheel(5), t);
        CHECK(g.order() == 6 + t * 10);
        CHECK(g.size() == (t + 1) * 10);
    }

    Graph c4 = complete_multipartite({2, 2});
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    CHECK(is_connected(c4));
    for (Vertex v = 0; v < 4; ++v)
        CHECK(c4.degree(v) == 2);
    CHECK(is_bipartite(c4));

    Graph w5 = wheel(5);
    Graph tri = induced_subgraph(w5, VertexSet(6, {0, 1, w5.at(alpha_label)}));
    CHECK(same_shape(tri, clique(3)));
    CHECK(tri.label(2) == alpha_label);

    Graph u = disjoint_union({clique(2), path(3)});
    CHECK(u.order() == 5);
    CHECK(components(u).size() == 2);
}

TEST_CASE("structural predicates")
{
    CHECK(odd_girth(cycle(5)) == 5u);
    CHECK(odd_girth(wheel(5)) == 3u);
    CHECK_FALSE(odd_girth(cycle(6)).has_value());
    CHECK(odd_girth(z_graph(5)) == 1u);
    CHECK_FALSE(is_bipartite(z_graph(5)));
    CHECK(neighbourhood(z_graph(5), 0).contains(0));
    CHECK_FALSE(neighbourhood(wheel(5), 0).contains(0));
    CHECK(isolated_vertices(disjoint_union({clique(1), clique(2)})) == std::vector<Vertex>{0});
}

TEST_CASE("categorical products")
{
    auto k2k2 = categorical_product({clique(2), clique(2)});
    CHECK(k2k2.graph.order() == 4);
    CHECK(k2k2.graph.size() == 2);
    CHECK(components(k2k2.graph).size() == 2);

    auto c5c5 = power(cycle(5), 2);
    CHECK(c5c5.graph.order() == 25);
    for (const auto & comp : components(c5c5.graph)) {
        VertexSet s(25);
        for (Vertex v : comp)
            s.insert(v);
        CHECK_FALSE(is_bipartite(induced_subgraph(c5c5.graph, s)));
    }

    // Every vertex of K_3^3 has 2^3 neighbours: choose a different value in every coordinate.
    auto k33 = power(clique(3), 3);
    CHECK(k33.graph.order() == 27);
    std::size_t arcs = 0;
    oracle::Matrix k3(clique(3));
    for (Vertex u = 0; u < 27; ++u) {
        std::size_t brute = 0;
        for (Vertex v = 0; v < 27; ++v) {
            bool adj = true;
            for (std::size_t i = 0; i < 3; ++i)
                adj = adj && k3(k33.coordinate(u, i), k33.coordinate(v, i));
            brute += adj ? 1 : 0;
        }
        CHECK(k33.graph.degree(u) == brute);
        CHECK(brute == 8);
        CHECK_FALSE(k33.graph.has_loop(u));
        arcs += brute;
    }
    CHECK(k33.graph.size() * 2 == arcs);

    CHECK(k33.index_of(k33.coordinates(17)) == 17);
}

TEST_CASE("projections")
{
    auto k2k2 = categorical_product({clique(2), clique(2)});
    Hom p0 = projection(k2k2, 0);
    CHECK(oracle::is_hom(k2k2.graph, clique(2), p0.image));

    auto c5sq = power(cycle(5), 2);
    Hom p1 = projection(c5sq, 1);
    CHECK(oracle::is_hom(c5sq.graph, cycle(5), p1.image));
    CHECK_THROWS(projection(c5sq, 2));

    // Without isolated vertices in J, the projection is onto every neighbourhood.
    for (const auto & j : {cycle(5), wheel(5), clique(3)}) {
        auto jt = power(j, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (Vertex u = 0; u < jt.graph.order(); ++u) {
                VertexSet seen(j.order());
                for (Vertex v : jt.graph.neighbours(u))
                    seen.insert(jt.coordinate(v, i));
                CHECK(seen == j.neighbourhood(jt.coordinate(u, i)));
            }
    }
}

TEST_CASE("product properties over a small catalog")
{
    std::vector<Graph> catalog{clique(2), clique(3), cycle(5), wheel(5), path(3), z_graph(3)};
    for (const auto & a : catalog)
        for (const auto & b : catalog) {
            auto p = categorical_product({a, b});
            oracle::Matrix ma(a), mb(b);
            for (const auto & e : p.graph.edges()) {
                CHECK(ma(p.coordinate(e.u, 0), p.coordinate(e.v, 0)));
                CHECK(mb(p.coordinate(e.u, 1), p.coordinate(e.v, 1)));
            }
            bool factors_odd = true;
            for (const Graph * f : {&a, &b})
                for (const auto & comp : components(*f)) {
                    VertexSet s(f->order());
                    for (Vertex v : comp)
                        s.insert(v);
                    factors_odd = factors_odd && !is_bipartite(induced_subgraph(*f, s));
                }
            if (!factors_odd)
                continue;
            for (const auto & comp : components(p.graph)) {
                VertexSet s(p.graph.order());
                for (Vertex v : comp)
                    s.insert(v);
                CHECK_FALSE(is_bipartite(induced_subgraph(p.graph, s)));
            }
        }
}

TEST_CASE("product size limits")
{
    CHECK_THROWS_AS(power(clique(10), 7), std::length_error);
}

TEST_CASE("text formats round-trip")
{
    std::mt19937_64 rng(7);
    std::vector<Graph> graphs{wheel(5), z_graph(5), subdivide_edges(clique(4), 2), clique(1)};
    for (int i = 0; i < 20; ++i)
        graphs.push_back(random_graph(rng, 1 + i % 7, 0.4, 0.2));
    for (const auto & g : graphs) {
        std::string text = write_graph(g);
        Graph back = read_graph(text);
        CHECK(back == g);
        CHECK(write_graph(back) == text);
    }

    EdgeColouredGraph ec({wheel(5), z_graph(5)});
    std::string text = write_ec_graph(ec);
    CHECK(read_ec_graph(text) == ec);
    CHECK(write_ec_graph(read_ec_graph(text)) == text);

    Hom id(std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK(read_hom(write_hom(wheel(5), wheel(5), id), wheel(5), wheel(5)) == id);

    KRelation r({"a", "b"}, 2, {{0, 1}, {1, 0}});
    CHECK(read_relation(write_relation(r)) == r);
}

TEST_CASE("parse errors carry line numbers")
{
    try {
        read_graph("v a\nv b\ne a c\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
    CHECK_THROWS_AS(read_graph("v a\nv a\n"), ParseError);
    CHECK_THROWS_AS(read_graph("x a\n"), ParseError);
    CHECK_THROWS_AS(read_relation("relation 2 over a b\na\n"), ParseError);
    CHECK_THROWS_AS(read_hom("map 0 0\n", clique(2), clique(2)), ParseError);
}

TEST_CASE("dot output")
{
    std::string dot = write_dot(EdgeColouredGraph({wheel(3), z_graph(3)}));
    CHECK(dot.rfind("graph \"G\" {", 0) == 0);
    CHECK(dot.find("color=red") != std::string::npos);
}
