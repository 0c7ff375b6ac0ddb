#pragma once

#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

#include <cstddef>
#include <vector>

namespace homreconf {

/// Products larger than this (vertices, or ordered adjacent pairs) are refused.
inline constexpr std::size_t product_vertex_limit = 1u << 21;
inline constexpr std::size_t product_arc_limit = 20'000'000;

/// Categorical product with the coordinate metadata needed for projections.
///
/// Vertex indices are mixed-radix numbers over the factor orders, last coordinate
/// varying fastest. Labels read "(l0,l1,...)".
struct ProductGraph {
    Graph graph;
    std::vector<Graph> factors;

    std::size_t factor_count() const { return factors.size(); }
    Vertex coordinate(Vertex v, std::size_t i) const;
    std::vector<Vertex> coordinates(Vertex v) const;
    Vertex index_of(const std::vector<Vertex> & coords) const;
};

/// Tuples adjacent iff adjacent in every coordinate. Throws std::length_error past the size limits.
ProductGraph categorical_product(const std::vector<Graph> & factors);

/// g x g x ... x g (t factors).
ProductGraph power(const Graph & g, std::size_t t);

/// The coordinate-i map, checked to be a homomorphism to factor i.
Hom projection(const ProductGraph & p, std::size_t i);

} // namespace homreconf
