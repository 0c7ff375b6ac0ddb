#include "homreconf/families.hpp"

#include <stdexcept>

namespace homreconf {

Graph cycle(std::size_t m)
{
    if (m < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(m);
    for (std::size_t i = 0; i < m; ++i)
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
    return b.build();
}

Graph path(std::size_t m)
{
    if (m < 1)
        throw std::invalid_argument("path needs at least 1 vertex");
    GraphBuilder b(m);
    for (std::size_t i = 0; i + 1 < m; ++i)
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return b.build();
}

Graph wheel(std::size_t m)
{
    if (m < 3)
        throw std::invalid_argument("wheel needs a rim of at least 3 vertices");
    GraphBuilder b(m);
    Vertex hub = b.add_vertex(alpha_label);
    for (std::size_t i = 0; i < m; ++i) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
        b.add_edge(static_cast<Vertex>(i), hub);
    }
    return b.build();
}

Graph z_graph(std::size_t m)
{
    if (m < 3)
        throw std::invalid_argument("Z graph needs m >= 3");
    GraphBuilder b(m);
    Vertex hub = b.add_vertex(alpha_label);
    for (Vertex u = 0; u <= hub; ++u)
        for (Vertex v = u; v <= hub; ++v)
            if (u != v || u != hub)
                b.add_edge(u, v);
    return b.build();
}

Graph clique(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph complete_multipartite(const std::vector<std::size_t> & part_sizes)
{
    std::vector<std::size_t> part;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part.insert(part.end(), part_sizes[p], p);
    GraphBuilder b(part.size());
    for (Vertex u = 0; u < part.size(); ++u)
        for (Vertex v = u + 1; v < part.size(); ++v)
            if (part[u] != part[v])
                b.add_edge(u, v);
    return b.build();
}

Graph disjoint_union(const std::vector<Graph> & graphs)
{
    GraphBuilder b;
    std::vector<Vertex> offset;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        offset.push_back(static_cast<Vertex>(b.order()));
        for (Vertex v = 0; v < graphs[i].order(); ++v)
            b.add_vertex(std::to_string(i) + "." + graphs[i].label(v), graphs[i].tag(v));
    }
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (const auto & e : graphs[i].edges())
            b.add_edge(offset[i] + e.u, offset[i] + e.v);
    return b.build();
}

Graph induced_subgraph(const Graph & g, const VertexSet & s)
{
    if (s.capacity() != g.order())
        throw std::invalid_argument("vertex set does not belong to this graph");
    GraphBuilder b;
    std::vector<Vertex> to_new(g.order(), 0);
    s.for_each([&](Vertex v) { to_new[v] = b.add_vertex(g.label(v), g.tag(v)); });
    for (const auto & e : g.edges())
        if (s.contains(e.u) && s.contains(e.v))
            b.add_edge(to_new[e.u], to_new[e.v]);
    return b.build();
}

Graph subdivide_edges(const Graph & g, std::size_t t)
{
    if (t == 0)
        return g;
    GraphBuilder b;
    for (Vertex v = 0; v < g.order(); ++v)
        b.add_vertex(g.label(v), g.tag(v));
    for (const auto & e : g.edges()) {
        if (e.u == e.v)
            throw std::invalid_argument("cannot subdivide a loop");
        Vertex prev = e.u;
        for (std::size_t i = 0; i < t; ++i) {
            Vertex s = b.add_vertex(g.label(e.u) + "~" + g.label(e.v) + "~" + std::to_string(i), "subdivision");
            b.add_edge(prev, s);
            prev = s;
        }
        b.add_edge(prev, e.v);
    }
    return b.build();
}

} // namespace homreconf
