#pragma once

// Brute-force reference implementations. They only read adjacency from the graphs under
// test and never call the library's search or analysis routines.

#include "homreconf/csp.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using homreconf::Graph;
using homreconf::Hom;
using homreconf::Vertex;

struct Matrix {
    std::size_t n = 0;
    std::vector<char> a;

    explicit Matrix(const Graph & g) : n(g.order()), a(g.order() * g.order(), 0)
    {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                a[u * n + v] = g.adjacent(u, v) ? 1 : 0;
    }
    bool operator()(Vertex u, Vertex v) const { return a[u * n + v] != 0; }
};

inline std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph & g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    Matrix m(g);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u; v < g.order(); ++v)
            if (m(u, v))
                out.emplace_back(u, v);
    return out;
}

/// f(u) g(v) and f(v) g(u) are edges of H for every edge uv of G.
inline bool adjacent(const Graph & g, const Graph & h, const std::vector<Vertex> & f, const std::vector<Vertex> & k)
{
    Matrix mh(h);
    for (auto [u, v] : edge_pairs(g))
        if (!mh(f[u], k[v]) || !mh(f[v], k[u]))
            return false;
    return true;
}

inline bool is_hom(const Graph & g, const Graph & h, const std::vector<Vertex> & f)
{
    return adjacent(g, h, f, f);
}

/// Every map V(G) -> V(H) that is a homomorphism, in lexicographic order.
inline std::vector<Hom> all_homs(const Graph & g, const Graph & h)
{
    std::vector<Hom> out;
    const std::size_t n = g.order(), m = h.order();
    if (m == 0)
        return n == 0 ? std::vector<Hom>{Hom{}} : out;
    Matrix mh(h);
    auto edges = edge_pairs(g);
    std::vector<Vertex> f(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!mh(f[u], f[v])) {
                ok = false;
                break;
            }
        if (ok)
            out.emplace_back(f);
        std::size_t i = n;
        while (i > 0 && ++f[i - 1] == m)
            f[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

/// Homomorphisms that differ from f on exactly one vertex and are adjacent to it; a looped
/// vertex may only move to a neighbour of its colour.
inline std::vector<Hom> one_vertex_neighbours(const Graph & g, const Graph & h, const Hom & f)
{
    std::vector<Hom> out;
    Matrix mg(g), mh(h);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex c = 0; c < h.order(); ++c) {
            if (c == f[v])
                continue;
            std::vector<Vertex> k = f.image;
            k[v] = c;
            if (mg(v, v) && !mh(f[v], c))
                continue;
            if (is_hom(g, h, k) && adjacent(g, h, f.image, k))
                out.emplace_back(k);
        }
    return out;
}

inline bool isolated(const Graph & g, const Graph & h, const Hom & f)
{
    return one_vertex_neighbours(g, h, f).empty();
}

/// Number of connected components of the one-vertex move graph on all homomorphisms.
inline std::size_t component_count(const Graph & g, const Graph & h)
{
    auto homs = all_homs(g, h);
    std::map<Hom, std::size_t> index;
    for (std::size_t i = 0; i < homs.size(); ++i)
        index[homs[i]] = i;
    std::vector<std::size_t> parent(homs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t count = homs.size();
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (const auto & k : one_vertex_neighbours(g, h, homs[i])) {
            auto a = find(i), b = find(index.at(k));
            if (a != b) {
                parent[a] = b;
                --count;
            }
        }
    return count;
}

/// Shortest path length between two homomorphisms in the one-vertex move graph.
inline std::optional<std::size_t> distance(const Graph & g, const Graph & h, const Hom & from, const Hom & to)
{
    std::map<Hom, std::size_t> dist{{from, 0}};
    std::vector<Hom> frontier{from};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (frontier[i] == to)
            return dist[frontier[i]];
        for (const auto & k : one_vertex_neighbours(g, h, frontier[i]))
            if (dist.emplace(k, dist[frontier[i]] + 1).second)
                frontier.push_back(k);
    }
    return std::nullopt;
}

inline std::vector<char> closed_row(const Graph & f, Vertex v, const std::vector<char> & s)
{
    Matrix m(f);
    std::vector<char> row(f.order(), 0);
    for (Vertex u = 0; u < f.order(); ++u)
        row[u] = m(v, u) && s[u];
    return row;
}

/// Whether alpha in s is redundant for s: some beta != alpha has N(alpha)&s inside N(beta)&s.
inline bool redundant(const Graph & f, const std::vector<char> & s, Vertex alpha)
{
    auto ra = closed_row(f, alpha, s);
    for (Vertex b = 0; b < f.order(); ++b) {
        if (b == alpha)
            continue;
        auto rb = closed_row(f, b, s);
        bool inside = true;
        for (Vertex u = 0; u < f.order(); ++u)
            if (ra[u] && !rb[u])
                inside = false;
        if (inside)
            return true;
    }
    return false;
}

/// The largest subset with no redundant member, checked to contain every other such subset.
inline std::vector<Vertex> s_f(const Graph & f)
{
    const std::size_t n = f.order();
    std::vector<std::uint32_t> good;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<char> s(n, 0);
        for (Vertex v = 0; v < n; ++v)
            s[v] = (mask >> v) & 1;
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            if (s[v] && redundant(f, s, v))
                ok = false;
        if (ok)
            good.push_back(mask);
    }
    std::uint32_t best = 0;
    for (auto m : good)
        if (__builtin_popcount(m) > __builtin_popcount(best))
            best = m;
    for (auto m : good)
        if ((m & best) != m)
            throw std::logic_error("irredundant subsets have no maximum");
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if ((best >> v) & 1)
            out.push_back(v);
    return out;
}

/// Vertices of H adjacent to every member of d.
inline std::vector<Vertex> common_neighbours(const Graph & h, const std::vector<Vertex> & d)
{
    Matrix m(h);
    std::vector<Vertex> out;
    for (Vertex a = 0; a < h.order(); ++a)
        if (std::all_of(d.begin(), d.end(), [&](Vertex x) { return m(a, x); }))
            out.push_back(a);
    return out;
}

/// Lexicographically first assignment of the instance variables that satisfies every tuple.
inline std::optional<Hom> first_csp_solution(const homreconf::KRelation & inst, const homreconf::KRelation & templ)
{
    const std::size_t n = inst.domain_size(), m = templ.domain_size();
    std::set<homreconf::Tuple> allowed(templ.tuples().begin(), templ.tuples().end());
    std::vector<Vertex> f(n, 0);
    if (m == 0)
        return n == 0 ? std::optional<Hom>(Hom{}) : std::nullopt;
    while (true) {
        bool ok = true;
        for (const auto & t : inst.tuples()) {
            homreconf::Tuple img;
            for (Vertex v : t)
                img.push_back(f[v]);
            if (!allowed.count(img)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return Hom(f);
        std::size_t i = n;
        while (i > 0 && ++f[i - 1] == m)
            f[--i] = 0;
        if (i == 0)
            return std::nullopt;
    }
}

} // namespace oracle
