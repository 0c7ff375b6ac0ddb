#pragma once

#include "homreconf/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homreconf {

/// Label used for the hub of wheels and of Z graphs.
inline const std::string alpha_label = "alpha";

/// C_m on 0..m-1, i ~ i +- 1 (mod m). Requires m >= 3.
Graph cycle(std::size_t m);

/// C_m without the edge between 0 and m-1. Requires m >= 1.
Graph path(std::size_t m);

/// C_m plus a hub "alpha" joined to every cycle vertex. Requires m >= 3.
Graph wheel(std::size_t m);

/// Clique on the vertex set of wheel(m), with a loop at every vertex except the hub.
Graph z_graph(std::size_t m);

Graph clique(std::size_t n);

/// Complete multipartite graph; vertices are numbered part by part.
Graph complete_multipartite(const std::vector<std::size_t> & part_sizes);

/// Vertices of graph i are relabelled "i.label"; tags are kept.
Graph disjoint_union(const std::vector<Graph> & graphs);

/// Subgraph induced on S, vertices in ascending index order, labels and tags kept.
Graph induced_subgraph(const Graph & g, const VertexSet & s);

/// Replaces every edge uv (u < v) with a path through t new vertices tagged "subdivision",
/// labelled "label(u)~label(v)~i". Loops are rejected when t > 0.
Graph subdivide_edges(const Graph & g, std::size_t t);

} // namespace homreconf
