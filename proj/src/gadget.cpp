#include "homreconf/gadget.hpp"
#include "homreconf/families.hpp"
#include "homreconf/structure.hpp"
#include "path_tools.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace homreconf {

using detail::Recorder;
using detail::remix;

namespace {

std::vector<Vertex> x_side(const FreezingGadget & gd)
{
    return {gd.zx(1), gd.zx(2 * gd.k), gd.by()};
}

std::vector<Vertex> y_side(const FreezingGadget & gd)
{
    return {gd.zy(1), gd.zy(2 * gd.k), gd.bx()};
}

// Connected pieces of the subgraph induced by the given vertices.
std::vector<std::vector<Vertex>> pieces(const Graph & g, const VertexSet & s)
{
    std::vector<std::vector<Vertex>> out;
    VertexSet seen(g.order());
    s.for_each([&](Vertex root) {
        if (seen.contains(root))
            return;
        std::vector<Vertex> piece{root};
        seen.insert(root);
        for (std::size_t i = 0; i < piece.size(); ++i)
            for (Vertex u : g.neighbours(piece[i]))
                if (s.contains(u) && !seen.contains(u)) {
                    seen.insert(u);
                    piece.push_back(u);
                }
        std::sort(piece.begin(), piece.end());
        out.push_back(std::move(piece));
    });
    return out;
}

VertexSet residual(const FreezingGadget & gd, const Hom & h, bool keep_x)
{
    VertexSet s(gd.graph.order());
    for (Vertex u = 0; u < gd.graph.order(); ++u) {
        if (u == gd.y() || (!keep_x && u == gd.x()))
            continue;
        if (u >= gd.w(0) && u <= gd.w(2 * gd.k))
            continue;
        if (h[u] != gd.alpha())
            s.insert(u);
    }
    return s;
}

// Moves from the current colouring to g when x and y already carry their colours under g.
void same_colour(const FreezingGadget & gd, const HomInstance & inst, Recorder & rec, const Hom & g)
{
    const Vertex a = gd.alpha();
    if (rec.current()[gd.x()] != a)
        for (Vertex u : x_side(gd))
            rec.set(u, a);
    if (rec.current()[gd.y()] != a)
        for (Vertex u : y_side(gd))
            rec.set(u, a);
    for (const auto & piece : pieces(gd.graph, residual(gd, rec.current(), false)))
        remix(inst, rec, piece, [&](const Hom & h) {
            return std::all_of(piece.begin(), piece.end(), [&](Vertex u) { return h[u] == g[u]; });
        });
    std::vector<Vertex> sides = x_side(gd);
    for (Vertex u : y_side(gd))
        sides.push_back(u);
    std::sort(sides.begin(), sides.end());
    for (Vertex u : sides)
        rec.set(u, g[u]);
    if (rec.current() != g)
        throw std::logic_error("gadget bridge did not reach its target");
}

// x starts at alpha and must end at target != alpha; y is not alpha.
void leave_alpha(const FreezingGadget & gd, const HomInstance & inst, Recorder & rec, Vertex target)
{
    const Graph & w = inst.target();
    for (Vertex u : y_side(gd))
        rec.set(u, gd.alpha());
    auto xs = x_side(gd);
    for (const auto & piece : pieces(gd.graph, residual(gd, rec.current(), true))) {
        std::vector<Vertex> hits;
        for (Vertex u : piece)
            if (std::find(xs.begin(), xs.end(), u) != xs.end())
                hits.push_back(u);
        if (hits.empty())
            continue;
        remix(inst, rec, piece, [&](const Hom & h) {
            return std::all_of(hits.begin(), hits.end(), [&](Vertex u) { return w.adjacent(h[u], target); });
        });
    }
}

} // namespace

FreezingGadget freezing_gadget(std::size_t k)
{
    if (k < 2)
        throw std::invalid_argument("freezing gadgets need k >= 2");
    FreezingGadget gd;
    gd.k = k;
    const std::size_t len = gd.cycle_length();
    GraphBuilder b;
    b.add_vertex("x", "x");
    b.add_vertex("y", "y");
    for (std::size_t i = 0; i < len; ++i)
        b.add_vertex("zx" + std::to_string(i), "zx");
    for (std::size_t i = 0; i < len; ++i)
        b.add_vertex("zy" + std::to_string(i), "zy");
    b.add_vertex("bx", "bx");
    b.add_vertex("by", "by");
    for (std::size_t i = 0; i <= 2 * k; ++i)
        b.add_vertex("w" + std::to_string(i), "w");
    b.add_vertex("alpha'", "alpha'");

    for (std::size_t i = 0; i < len; ++i) {
        b.add_edge(gd.zx(i), gd.zx((i + 1) % len));
        b.add_edge(gd.zy(i), gd.zy((i + 1) % len));
    }
    b.add_edge(gd.x(), gd.zx(1));
    b.add_edge(gd.x(), gd.zx(2 * k));
    b.add_edge(gd.y(), gd.zy(1));
    b.add_edge(gd.y(), gd.zy(2 * k));
    b.add_edge(gd.bx(), gd.zx(0));
    b.add_edge(gd.bx(), gd.zx(2 * k - 1));
    b.add_edge(gd.by(), gd.zy(0));
    b.add_edge(gd.by(), gd.zy(2 * k - 1));
    b.add_edge(gd.y(), gd.bx());
    b.add_edge(gd.x(), gd.by());
    for (std::size_t i = 0; i <= 2 * k; ++i)
        b.add_edge(gd.w(i), gd.w((i + 1) % (2 * k + 1)));

    VertexSet excluded(b.order());
    excluded.insert(gd.alpha_prime());
    excluded.insert(gd.x());
    excluded.insert(gd.y());
    for (Vertex u : x_side(gd))
        excluded.insert(u);
    for (Vertex u : y_side(gd))
        excluded.insert(u);
    for (Vertex u = 0; u < b.order(); ++u)
        if (!excluded.contains(u))
            b.add_edge(gd.alpha_prime(), u);
    gd.graph = b.build();

    gd.swap.resize(gd.graph.order());
    for (Vertex u = 0; u < gd.graph.order(); ++u)
        gd.swap[u] = u;
    gd.swap[gd.x()] = gd.y();
    gd.swap[gd.y()] = gd.x();
    for (std::size_t i = 0; i < len; ++i) {
        gd.swap[gd.zx(i)] = gd.zy(i);
        gd.swap[gd.zy(i)] = gd.zx(i);
    }
    gd.swap[gd.bx()] = gd.by();
    gd.swap[gd.by()] = gd.bx();
    return gd;
}

Hom gadget_colouring(const FreezingGadget & gd, Vertex c1, Vertex c2)
{
    HomInstance inst(gd.graph, wheel(2 * gd.k + 1));
    if (c1 >= inst.target_order() || c2 >= inst.target_order())
        throw std::invalid_argument("gadget colours must be wheel vertices");
    Partial pins{{gd.x(), c1}, {gd.y(), c2}, {gd.alpha_prime(), gd.alpha()}};
    for (std::size_t i = 0; i <= 2 * gd.k; ++i)
        pins.emplace_back(gd.w(i), static_cast<Vertex>(i));
    auto f = first_hom(inst, pins);
    if (!f)
        throw std::logic_error("no gadget colouring with the requested ends");
    return *f;
}

bool only_alpha_check(const FreezingGadget & gd, const Hom & f)
{
    if (f[gd.alpha_prime()] != gd.alpha())
        return false;
    VertexSet allowed(gd.graph.order());
    allowed.insert(gd.alpha_prime());
    allowed.insert(gd.x());
    allowed.insert(gd.y());
    for (Vertex u : x_side(gd))
        allowed.insert(u);
    for (Vertex u : y_side(gd))
        allowed.insert(u);
    for (Vertex u = 0; u < f.size(); ++u)
        if (f[u] == gd.alpha() && !allowed.contains(u))
            return false;
    return true;
}

Hom permute_colouring(const Hom & f, const std::vector<Vertex> & perm)
{
    Hom out(std::vector<Vertex>(f.size()));
    for (Vertex v = 0; v < f.size(); ++v)
        out.image[perm[v]] = f[v];
    return out;
}

Bridge gadget_bridge(const FreezingGadget & gd, const Hom & f, const Hom & g)
{
    HomInstance inst(gd.graph, wheel(2 * gd.k + 1));
    if (!inst.is_hom(f) || !inst.is_hom(g))
        throw std::invalid_argument("bridge ends must be gadget colourings");
    for (std::size_t i = 0; i <= 2 * gd.k; ++i)
        if (f[gd.w(i)] != g[gd.w(i)])
            throw std::invalid_argument("bridge ends disagree on the wheel copy");
    if (f[gd.alpha_prime()] != g[gd.alpha_prime()])
        throw std::invalid_argument("bridge ends disagree on the wheel copy");
    if (f[gd.y()] != g[gd.y()])
        throw std::invalid_argument("bridge ends disagree on y");
    const Vertex a = gd.alpha();
    const Vertex c1 = f[gd.x()], c1p = g[gd.x()], c2 = f[gd.y()];
    if (c2 == a && (c1 == a || c1p == a))
        throw std::invalid_argument("bridge ends may not send both x and y to alpha");

    Bridge out;
    if (c1 != a && c1p == a) {
        Bridge back = gadget_bridge(gd, g, f);
        out.path.steps.assign(back.path.steps.rbegin(), back.path.steps.rend());
        out.split = back.path.length() - 1 - *back.split;
        return out;
    }

    Recorder rec(f);
    if (c1 != c1p) {
        if (c1 != a) {
            for (Vertex u : x_side(gd))
                rec.set(u, a);
        }
        else
            leave_alpha(gd, inst, rec, c1p);
        out.split = rec.path.steps.size() - 1;
        rec.set(gd.x(), c1p);
    }
    same_colour(gd, inst, rec, g);
    out.path = std::move(rec.path);

    if (auto defect = path_defect(inst, out.path))
        throw std::logic_error("gadget bridge produced an invalid path: " + *defect);
    return out;
}

} // namespace homreconf
