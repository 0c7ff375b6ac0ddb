#pragma once

#include "homreconf/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace homreconf {

/// Loop-free and without odd cycles.
bool is_bipartite(const Graph & g);

/// Connected components, each sorted ascending; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph & g);

/// True for graphs with exactly one component (the empty graph is not connected).
bool is_connected(const Graph & g);

/// Length of a shortest odd cycle (1 for a loop), or nullopt when there is none.
std::optional<std::size_t> odd_girth(const Graph & g);

inline VertexSet neighbourhood(const Graph & g, Vertex v)
{
    return g.neighbourhood(v);
}

/// Vertices of degree zero (a vertex with only a loop is not isolated).
std::vector<Vertex> isolated_vertices(const Graph & g);

} // namespace homreconf
