#include "homreconf/product.hpp"

#include <stdexcept>
#include <string>

namespace homreconf {

Vertex ProductGraph::coordinate(Vertex v, std::size_t i) const
{
    if (i >= factors.size())
        throw std::out_of_range("coordinate index out of range");
    for (std::size_t j = factors.size(); j-- > i + 1;)
        v /= static_cast<Vertex>(factors[j].order());
    return v % static_cast<Vertex>(factors[i].order());
}

std::vector<Vertex> ProductGraph::coordinates(Vertex v) const
{
    std::vector<Vertex> out(factors.size());
    for (std::size_t j = factors.size(); j-- > 0;) {
        auto n = static_cast<Vertex>(factors[j].order());
        out[j] = v % n;
        v /= n;
    }
    return out;
}

Vertex ProductGraph::index_of(const std::vector<Vertex> & coords) const
{
    if (coords.size() != factors.size())
        throw std::invalid_argument("wrong number of coordinates");
    Vertex v = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (coords[j] >= factors[j].order())
            throw std::out_of_range("coordinate out of range");
        v = v * static_cast<Vertex>(factors[j].order()) + coords[j];
    }
    return v;
}

ProductGraph categorical_product(const std::vector<Graph> & factors)
{
    if (factors.empty())
        throw std::invalid_argument("a product needs at least one factor");
    std::size_t vertices = 1, arcs = 1;
    for (const auto & f : factors) {
        std::size_t a = 0;
        for (Vertex v = 0; v < f.order(); ++v)
            a += f.degree(v);
        if (f.order() != 0 && vertices > product_vertex_limit / f.order())
            throw std::length_error("product has too many vertices");
        vertices *= f.order();
        if (a != 0 && arcs > product_arc_limit / a)
            throw std::length_error("product has too many edges");
        arcs *= a;
    }
    if (vertices > product_vertex_limit)
        throw std::length_error("product has too many vertices");
    if (arcs > product_arc_limit)
        throw std::length_error("product has too many edges");

    ProductGraph p;
    p.factors = factors;
    const std::size_t t = factors.size();
    GraphBuilder b;
    for (Vertex v = 0; v < vertices; ++v) {
        auto coords = p.coordinates(v);
        std::string label = "(";
        for (std::size_t j = 0; j < t; ++j) {
            if (j)
                label += ',';
            label += factors[j].label(coords[j]);
        }
        label += ')';
        b.add_vertex(std::move(label));
    }

    // Odometer over the neighbour lists of each coordinate.
    std::vector<std::size_t> pos(t);
    for (Vertex u = 0; u < vertices; ++u) {
        auto coords = p.coordinates(u);
        bool empty = false;
        for (std::size_t j = 0; j < t; ++j)
            if (factors[j].degree(coords[j]) == 0)
                empty = true;
        if (empty)
            continue;
        std::fill(pos.begin(), pos.end(), 0);
        while (true) {
            Vertex w = 0;
            for (std::size_t j = 0; j < t; ++j)
                w = w * static_cast<Vertex>(factors[j].order()) + factors[j].neighbours(coords[j])[pos[j]];
            if (u <= w)
                b.add_new_edge(u, w);
            std::size_t j = t;
            while (j-- > 0) {
                if (++pos[j] < factors[j].degree(coords[j]))
                    break;
                pos[j] = 0;
            }
            if (j == static_cast<std::size_t>(-1))
                break;
        }
    }
    p.graph = b.build();
    return p;
}

ProductGraph power(const Graph & g, std::size_t t)
{
    if (t == 0)
        throw std::invalid_argument("power needs at least one factor");
    return categorical_product(std::vector<Graph>(t, g));
}

Hom projection(const ProductGraph & p, std::size_t i)
{
    if (i >= p.factor_count())
        throw std::out_of_range("projection index out of range");
    Hom h(std::vector<Vertex>(p.graph.order()));
    for (Vertex v = 0; v < p.graph.order(); ++v)
        h.image[v] = p.coordinate(v, i);
    HomInstance inst(p.graph, p.factors[i]);
    if (!inst.is_hom(h))
        throw std::logic_error("projection is not a homomorphism");
    return h;
}

} // namespace homreconf
