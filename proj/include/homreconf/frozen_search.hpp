#pragma once

#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

#include <chrono>
#include <cstddef>
#include <optional>

namespace homreconf {

struct FrozenSearchOptions {
    std::chrono::milliseconds time_budget{60'000};
    std::size_t node_budget = 0;  // 0: unlimited
};

struct FrozenSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Hom> witness;
    std::size_t nodes = 0;
};

/// Looks for a frozen H-colouring of G.
///
/// Forward checking with conflict-directed backjumping. Besides the edge constraints, every
/// vertex v contributes the constraint "v is fixed" over its closed neighbourhood, pruned as
/// soon as one variable of that neighbourhood is left open. For loop-free G colours are
/// restricted to the freezer of H. A returned witness is re-checked before it is reported.
FrozenSearchResult frozen_hom_search(const Graph & g, const Graph & h, const FrozenSearchOptions & options = {});

} // namespace homreconf
