#pragma once

#include "homreconf/graph.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace homreconf {

inline constexpr std::size_t default_state_budget = 10'000'000;
inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// A total map from source vertices to target vertices ("colours").
struct Hom {
    std::vector<Vertex> image;

    Hom() = default;
    explicit Hom(std::vector<Vertex> img) : image(std::move(img)) {}

    Vertex operator[](Vertex v) const { return image[v]; }
    std::size_t size() const { return image.size(); }

    friend bool operator==(const Hom &, const Hom &) = default;
    friend auto operator<=>(const Hom &, const Hom &) = default;
};

struct HomHash {
    std::size_t operator()(const Hom & h) const noexcept
    {
        std::size_t x = 14695981039346656037ull;
        for (Vertex v : h.image)
            x = (x ^ v) * 1099511628211ull;
        return x;
    }
};

/// Sequence of homomorphisms; consecutive entries adjacent in the reconfiguration graph.
struct ReconfigPath {
    std::vector<Hom> steps;

    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
    const Hom & front() const { return steps.front(); }
    const Hom & back() const { return steps.back(); }

    friend bool operator==(const ReconfigPath &, const ReconfigPath &) = default;
};

/// (vertex, colour) pairs fixing part of a homomorphism.
using Partial = std::vector<std::pair<Vertex, Vertex>>;

/// Source and target of a homomorphism problem. Plain graphs are the one-layer case of
/// edge-coloured graphs; every query below is evaluated layer by layer.
class HomInstance {
public:
    HomInstance(Graph source, Graph target);
    HomInstance(EdgeColouredGraph source, EdgeColouredGraph target);

    std::size_t layer_count() const { return source_.size(); }
    const Graph & source(std::size_t layer = 0) const { return source_.at(layer); }
    const Graph & target(std::size_t layer = 0) const { return target_.at(layer); }
    std::size_t source_order() const { return source_.front().order(); }
    std::size_t target_order() const { return target_.front().order(); }

    /// Union of the source layers' neighbours of v, excluding v itself.
    const std::vector<Vertex> & source_neighbours(Vertex v) const { return union_neighbours_[v]; }

    bool is_hom(const Hom & f) const;

    /// f(u)g(v) is an edge for every edge uv, in every layer (checked in both orientations).
    bool adjacent(const Hom & f, const Hom & g) const;

    /// True iff changing v to colour c (c != f(v)) gives a homomorphism adjacent to f.
    bool can_recolour(const Hom & f, Vertex v, Vertex c) const;

    /// All (vertex, colour) single-vertex moves, ordered by vertex then colour.
    /// When movable is given, only its members are considered.
    std::vector<std::pair<Vertex, Vertex>> moves(const Hom & f, const VertexSet * movable = nullptr) const;

    std::vector<Hom> single_vertex_moves(const Hom & f) const;

    /// Vertices no single-vertex move can change.
    VertexSet fixed_vertices(const Hom & f) const;
    bool is_frozen(const Hom & f) const;

    /// Target colours allowed at v before any assignment (loops force reflexive colours).
    const VertexSet & initial_domain(Vertex v) const { return initial_domain_[v]; }
    /// Colours adjacent to c in the target's layer.
    const VertexSet & target_row(std::size_t layer, Vertex c) const { return target_rows_[layer][c]; }

    void check(const Hom & f) const;

private:
    void prepare();

    std::vector<Graph> source_;
    std::vector<Graph> target_;
    std::vector<std::vector<VertexSet>> target_rows_;
    std::vector<std::vector<Vertex>> union_neighbours_;
    std::vector<VertexSet> initial_domain_;
};

/// Number emitted, and whether at least one further homomorphism was cut off by the cap.
struct EnumerationResult {
    std::size_t emitted = 0;
    bool truncated = false;
};

/// Backtracking with forward checking over a fixed degeneracy order; colours are tried in
/// ascending order so the output order is deterministic. emit may return false to stop.
EnumerationResult enumerate_homs(const HomInstance & inst, const std::function<bool(const Hom &)> & emit,
                                 const Partial & partial = {}, std::size_t cap = default_enumeration_cap);

struct HomList {
    std::vector<Hom> homs;
    bool truncated = false;
};

HomList all_homs(const HomInstance & inst, const Partial & partial = {}, std::size_t cap = default_enumeration_cap);
std::optional<Hom> first_hom(const HomInstance & inst, const Partial & partial = {});
/// Same search with colours tried in a random order at every node.
std::optional<Hom> random_hom(const HomInstance & inst, std::mt19937_64 & rng, const Partial & partial = {});

/// The source vertex order used by the backtracking searches.
std::vector<Vertex> degeneracy_order(const HomInstance & inst);

enum class SearchStatus { found, none, budget_exhausted };

struct SearchOptions {
    std::size_t state_budget = default_state_budget;
    /// Restricts moves to these source vertices; all others keep their colour.
    std::optional<VertexSet> movable;
};

struct ReconfigResult {
    SearchStatus status = SearchStatus::none;
    std::optional<ReconfigPath> path;
    std::size_t states = 0;
};

/// Breadth-first search over single-vertex moves; a found path is shortest.
ReconfigResult reconfigures(const HomInstance & inst, const Hom & from, const Hom & to, const SearchOptions & options = {});

/// Breadth-first search until a state satisfies goal.
ReconfigResult reconfigure_until(const HomInstance & inst, const Hom & from, const std::function<bool(const Hom &)> & goal,
                                 const SearchOptions & options = {});

bool is_valid_path(const HomInstance & inst, const ReconfigPath & path);
/// Describes the first defect of path, if any.
std::optional<std::string> path_defect(const HomInstance & inst, const ReconfigPath & path);

/// Splits every multi-vertex step into single-vertex steps (ascending vertex order) and
/// removes repeated consecutive entries. Valid paths stay valid.
ReconfigPath normalise_path(const ReconfigPath & path);

/// Packs an image in ceil(log2 |V(H)|) bits per vertex, little-endian.
class StateCodec {
public:
    StateCodec(std::size_t source_order, std::size_t target_order);
    std::string encode(const Hom & f) const;
    Hom decode(const std::string & code) const;

private:
    std::size_t n_;
    unsigned bits_;
};

/// Hom(G,H) fully enumerated, with connected components of the move graph.
struct HomGraph {
    std::vector<Hom> homs;
    std::vector<std::size_t> component;  // component id per hom, numbered in order of first appearance
    std::size_t component_count = 0;
    bool truncated = false;

    std::unordered_map<Hom, std::size_t, HomHash> index;

    std::optional<std::size_t> index_of(const Hom & f) const;
};

HomGraph analyse_hom_graph(const HomInstance & inst, std::size_t cap = default_enumeration_cap);

/// nullopt when the enumeration cap was hit.
std::optional<bool> is_mixing(const HomInstance & inst, std::size_t cap = default_enumeration_cap);

struct Component {
    std::vector<Hom> members;  // BFS order from the seed
    bool truncated = false;
};

Component component_of(const HomInstance & inst, const Hom & f, std::size_t state_budget = default_state_budget);

struct Diameter {
    std::size_t value = 0;
    bool exact = false;      // false: double-sweep lower bound
    bool truncated = false;  // component larger than the budget
};

/// Exact eccentricity maximum for components up to exact_limit states, otherwise a double-sweep lower bound.
Diameter component_diameter(const HomInstance & inst, const Hom & f, std::size_t state_budget = default_state_budget,
                            std::size_t exact_limit = 2000);

/// Vertices whose colour is constant over the whole component; nullopt when the budget is hit.
std::optional<VertexSet> frozen_vertices(const HomInstance & inst, const Hom & f,
                                         std::size_t state_budget = default_state_budget);

} // namespace homreconf
