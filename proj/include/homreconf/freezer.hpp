#pragma once

#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homreconf {

/// Largest S_F for which distinguishing sets are enumerated.
inline constexpr std::size_t distinguishing_enumeration_limit = 20;

/// Least-index beta != alpha of F with N(alpha) & S contained in N(beta) & S.
/// Throws if alpha is not in S.
std::optional<Vertex> redundant_in(const Graph & f, const VertexSet & s, Vertex alpha);

struct Elimination {
    Vertex vertex;
    Vertex witness;
};

/// Result of the elimination procedure on one connected component.
struct ComponentFreezer {
    std::vector<Vertex> vertices;  // component members, indices into the analysed graph
    VertexSet s_f;                 // over the analysed graph's vertices
    bool thermal = false;
    std::vector<Elimination> eliminations;
};

/// Repeatedly removes the least-index redundant vertex until none is left.
/// F must be connected.
ComponentFreezer compute_s_f(const Graph & f);

/// Same fixpoint, removing at each round the first redundant vertex listed in priority
/// (a permutation of V(F)).
ComponentFreezer compute_s_f(const Graph & f, const std::vector<Vertex> & priority);

/// Connected F is thermal iff S_F is empty.
bool is_thermal(const Graph & f);

/// Componentwise analysis of an arbitrary graph H.
struct FreezerReport {
    std::vector<ComponentFreezer> components;  // in the order produced by components()
    VertexSet s_h;                             // union of the S_F
    Graph freezer;                             // induced on s_h, tag "component<i>" per vertex
};

FreezerReport analyse_freezer(const Graph & h);

/// Induced subgraph of H on the union of the S_F of its components.
Graph freezer(const Graph & h);

/// The unique vertex of H adjacent to every member of D, if there is exactly one.
/// D must lie inside s (the S_F union in use); otherwise std::invalid_argument.
std::optional<Vertex> distinguishing_target(const Graph & h, const VertexSet & s, const VertexSet & d);
bool is_distinguishing(const Graph & h, const VertexSet & s, const VertexSet & d, Vertex alpha);

struct DistinguishingSet {
    VertexSet set;
    Vertex target;
    std::size_t component;
};

/// Every D inside some component's S_F that distinguishes a vertex, ordered by component,
/// then size, then members. Components need at least three vertices; |S_F| is limited by
/// distinguishing_enumeration_limit (std::length_error beyond it).
std::vector<DistinguishingSet> distinguishing_family(const Graph & h);
std::vector<DistinguishingSet> distinguishing_family(const Graph & h, const FreezerReport & report);

/// f is frozen iff every f(N(v)) lies in the S_F union and distinguishes f(v).
/// The source must be loop-free.
bool is_frozen_via_distinguishing(const Graph & g, const Graph & h, const Hom & f);
bool is_frozen_via_distinguishing(const Graph & g, const Graph & h, const FreezerReport & report, const Hom & f);

enum class DichotomyCase {
    poly_thermal_or_small,
    poly_k2_bipartite_freezer,
    poly_reflexive_singleton,
    np_complete,
};

struct DichotomyVerdict {
    DichotomyCase which = DichotomyCase::np_complete;
    /// Component indices (into components(H)) that support the verdict.
    std::vector<std::size_t> evidence;
    bool all_thermal = false;

    bool polynomial() const { return which != DichotomyCase::np_complete; }
    /// "poly: thermal", "poly: thermal-or-small", "poly: K2 with bipartite freezer",
    /// "poly: reflexive singleton" or "np-complete".
    std::string summary() const;
};

DichotomyVerdict classify(const Graph & h);

/// Decides whether loop-free G has a frozen H-colouring, for H in a polynomial case.
/// Throws std::invalid_argument for NP-complete H or G with loops.
bool decide_frozen_poly(const Graph & h, const Graph & g);

} // namespace homreconf
