#pragma once

#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace homreconf {

/// The freezing gadget F_k(x,y) as a standalone graph.
///
/// Vertex order: x, y, zx0..zx(4k-3), zy0..zy(4k-3), bx, by, w0..w(2k), alpha'.
/// Each vertex is tagged with its role ("x", "y", "zx", "zy", "bx", "by", "w", "alpha'").
struct FreezingGadget {
    std::size_t k = 0;
    Graph graph;

    Vertex x() const { return 0; }
    Vertex y() const { return 1; }
    Vertex zx(std::size_t i) const { return static_cast<Vertex>(2 + i); }
    Vertex zy(std::size_t i) const { return static_cast<Vertex>(2 + cycle_length() + i); }
    Vertex bx() const { return static_cast<Vertex>(2 + 2 * cycle_length()); }
    Vertex by() const { return bx() + 1; }
    Vertex w(std::size_t i) const { return static_cast<Vertex>(by() + 1 + i); }
    Vertex alpha_prime() const { return w(2 * k) + 1; }

    std::size_t cycle_length() const { return 4 * k - 2; }
    /// Colour of the hub in wheel(2k+1).
    Vertex alpha() const { return static_cast<Vertex>(2 * k + 1); }

    /// Automorphism exchanging the x side with the y side.
    std::vector<Vertex> swap;
};

/// Builds F_k(x,y). Requires k >= 2.
FreezingGadget freezing_gadget(std::size_t k);

/// W_{2k+1}-colouring of the gadget with x -> c1 and y -> c2, found by backtracking with
/// the wheel copy pinned to the identity.
Hom gadget_colouring(const FreezingGadget & gadget, Vertex c1, Vertex c2);

/// Every vertex coloured alpha lies in {alpha', x, y} together with N(x) and N(y), and alpha' is coloured alpha.
bool only_alpha_check(const FreezingGadget & gadget, const Hom & f);

struct Bridge {
    ReconfigPath path;
    /// Last index at which x still has its starting colour; empty when x never changes.
    std::optional<std::size_t> split;
};

/// Single-vertex path from f to g inside the gadget that keeps y constant and changes x at
/// most once. f and g must agree on the wheel copy and on y, and neither may send both x
/// and y to alpha.
Bridge gadget_bridge(const FreezingGadget & gadget, const Hom & f, const Hom & g);

/// Applies a vertex permutation to a colouring: result[perm[v]] = f[v].
Hom permute_colouring(const Hom & f, const std::vector<Vertex> & perm);

} // namespace homreconf
