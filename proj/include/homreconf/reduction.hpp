#pragma once

#include "homreconf/gadget.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

#include <cstddef>
#include <vector>

namespace homreconf {

/// (W_{2k+1}, Z_{2k+1}) as a two-layer target.
EdgeColouredGraph wheel_z_target(std::size_t k);

/// A recolouring instance over (W_{2k+1}, Z_{2k+1}).
struct EcInstance {
    std::size_t k = 0;
    EdgeColouredGraph graph{std::vector<Graph>{Graph{}}};
    Hom start;
    Hom end;

    HomInstance hom_instance() const { return HomInstance(graph, wheel_z_target(k)); }
};

/// Output of the K_{2k+1} to (W_{2k+1}, Z_{2k+1}) construction.
///
/// Vertex order: the originals (same indices as the source graph), then the subdivision
/// vertices edge by edge, then the locking cycles vertex by vertex, then the wheel copy
/// w0..w(2k) followed by its hub. Tags: "original", "subdivision", "locking", "W".
struct CliqueReduction {
    std::size_t k = 0;
    Graph source;
    Hom phi;
    Hom psi;
    EcInstance ec;

    std::vector<Edge> source_edges;
    /// Interior of the subdivided edge source_edges[e], listed from edge.u towards edge.v.
    std::vector<std::vector<Vertex>> subdivision;
    /// locking[v][i-1] is the i-th locking vertex of original v.
    std::vector<std::vector<Vertex>> locking;
    /// w0..w(2k) then the hub.
    std::vector<Vertex> wheel_copy;

    Vertex hub() const { return wheel_copy.back(); }
};

/// phi and psi must be proper (2k+1)-colourings of loop-free G, with k >= 2.
CliqueReduction reduce_clique_to_ecol(std::size_t k, const Graph & g, const Hom & phi, const Hom & psi);

/// The fixed extension of a proper colouring to the constructed instance. It avoids the hub
/// colour outside the wheel copy.
Hom clique_extension(const CliqueReduction & red, const Hom & colouring);

/// Turns a recolouring path of K_{2k+1}-colourings into one of the constructed instance,
/// running from clique_extension(front) to clique_extension(back).
ReconfigPath translate_clique_to_ecol(const CliqueReduction & red, const ReconfigPath & path);

/// Restricts every step to the originals and drops improper steps and repeats.
ReconfigPath restrict_ecol_to_clique(const CliqueReduction & red, const ReconfigPath & path);

struct GadgetPlacement {
    Vertex a;                    // plays x
    Vertex b;                    // plays y
    std::vector<Vertex> globals; // gadget vertex -> vertex of the wheel instance
};

/// Output of the (W_{2k+1}, Z_{2k+1}) to W_{2k+1} construction. The vertices of the
/// edge-coloured instance come first with unchanged indices; gadget vertices follow,
/// tagged "gadget".
struct WheelReduction {
    std::size_t k = 0;
    EcInstance ec;
    FreezingGadget gadget;
    std::vector<GadgetPlacement> placements;  // one per second-layer edge, ascending
    Graph graph;
    Hom start;
    Hom end;

    HomInstance hom_instance() const;
};

/// Two-layer instances only; the second layer must be loop-free.
WheelReduction reduce_ecol_to_wheel(const EcInstance & inst);

/// Extends an edge-coloured colouring with gadget_colouring on every gadget.
Hom wheel_extension(const WheelReduction & red, const Hom & colouring);

ReconfigPath translate_ecol_to_wheel(const WheelReduction & red, const ReconfigPath & path);
ReconfigPath restrict_wheel_to_ecol(const WheelReduction & red, const ReconfigPath & path);

/// Both constructions chained: K_{2k+1} recolouring to W_{2k+1} recolouring.
struct ComposedReduction {
    CliqueReduction clique;
    WheelReduction wheel;
};

ComposedReduction reduce_clique_to_wheel(std::size_t k, const Graph & g, const Hom & phi, const Hom & psi);
ReconfigPath translate_composed(const ComposedReduction & red, const ReconfigPath & path);
ReconfigPath restrict_composed(const ComposedReduction & red, const ReconfigPath & path);

} // namespace homreconf
