#include "homreconf/reduction.hpp"
#include "homreconf/families.hpp"
#include "path_tools.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace homreconf {

using detail::Recorder;
using detail::remix_to;

EdgeColouredGraph wheel_z_target(std::size_t k)
{
    return EdgeColouredGraph({wheel(2 * k + 1), z_graph(2 * k + 1)});
}

namespace {

void require_proper(const Graph & g, const Hom & c, std::size_t colours, const char * what)
{
    if (c.size() != g.order())
        throw std::invalid_argument(std::string(what) + " has the wrong size");
    for (Vertex v = 0; v < c.size(); ++v)
        if (c[v] >= colours)
            throw std::invalid_argument(std::string(what) + " uses a colour outside the clique");
    for (const auto & e : g.edges())
        if (c[e.u] == c[e.v])
            throw std::invalid_argument(std::string(what) + " is not a proper colouring");
}

// Walk of odd length 2k-1 on C_{2k+1} from a to b != a; interior positions only. It heads
// the way whose distance is odd, then oscillates on b.
std::vector<Vertex> subdivision_walk(std::size_t k, Vertex a, Vertex b)
{
    const auto m = static_cast<long>(2 * k + 1);
    const long steps = m - 2;
    long d = ((static_cast<long>(b) - static_cast<long>(a)) % m + m) % m;
    long dir = 1, dist = d;
    if (d % 2 == 0) {
        dir = -1;
        dist = m - d;
    }
    std::vector<Vertex> out;
    long pos = a;
    for (long j = 1; j < steps; ++j) {
        long step = j <= dist ? dir : ((j - dist) % 2 == 1 ? dir : -dir);
        pos = ((pos + step) % m + m) % m;
        out.push_back(static_cast<Vertex>(pos));
    }
    return out;
}

Hom restrict_to(const Hom & f, std::size_t n)
{
    return Hom(std::vector<Vertex>(f.image.begin(), f.image.begin() + static_cast<std::ptrdiff_t>(n)));
}

void require_valid(const HomInstance & inst, const ReconfigPath & path, const char * what)
{
    if (auto defect = path_defect(inst, path))
        throw std::invalid_argument(std::string(what) + ": " + *defect);
}

void ensure_valid(const HomInstance & inst, const ReconfigPath & path, const char * what)
{
    if (auto defect = path_defect(inst, path))
        throw std::logic_error(std::string(what) + ": " + *defect);
}

// Restricts to the first n vertices, dropping steps that fail keep and repeated steps.
ReconfigPath restrict_steps(const ReconfigPath & path, std::size_t n, const std::function<bool(const Hom &)> & keep)
{
    ReconfigPath out;
    for (const auto & step : normalise_path(path).steps) {
        Hom r = restrict_to(step, n);
        if (!keep(r))
            continue;
        if (out.steps.empty() || out.steps.back() != r)
            out.steps.push_back(std::move(r));
    }
    return out;
}

} // namespace

CliqueReduction reduce_clique_to_ecol(std::size_t k, const Graph & g, const Hom & phi, const Hom & psi)
{
    if (k < 2)
        throw std::invalid_argument("the clique reduction needs k >= 2");
    if (g.has_loops())
        throw std::invalid_argument("the clique reduction needs a loop-free graph");
    require_proper(g, phi, 2 * k + 1, "phi");
    require_proper(g, psi, 2 * k + 1, "psi");

    CliqueReduction red;
    red.k = k;
    red.source = g;
    red.phi = phi;
    red.psi = psi;
    red.source_edges = g.edges();
    const std::size_t n = g.order();

    GraphBuilder b;
    for (Vertex v = 0; v < n; ++v)
        b.add_vertex("o." + g.label(v), "original");
    for (std::size_t e = 0; e < red.source_edges.size(); ++e) {
        std::vector<Vertex> interior;
        for (std::size_t i = 1; i <= 2 * k - 2; ++i)
            interior.push_back(b.add_vertex("s" + std::to_string(e) + "." + std::to_string(i), "subdivision"));
        Vertex prev = red.source_edges[e].u;
        for (Vertex s : interior) {
            b.add_edge(prev, s);
            prev = s;
        }
        b.add_edge(prev, red.source_edges[e].v);
        red.subdivision.push_back(std::move(interior));
    }
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> lock;
        for (std::size_t i = 1; i <= 2 * k; ++i)
            lock.push_back(b.add_vertex("l" + std::to_string(v) + "." + std::to_string(i), "locking"));
        Vertex prev = v;
        for (Vertex l : lock) {
            b.add_edge(prev, l);
            prev = l;
        }
        b.add_edge(prev, v);
        red.locking.push_back(std::move(lock));
    }

    // Vertices of the graph built so far that have no original neighbour get joined to the hub.
    const Graph tilde = b.build();
    std::vector<Vertex> far;
    for (Vertex t = 0; t < tilde.order(); ++t) {
        const auto & nb = tilde.neighbours(t);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return u < n; }))
            far.push_back(t);
    }
    for (std::size_t i = 0; i <= 2 * k; ++i)
        red.wheel_copy.push_back(b.add_vertex("W" + std::to_string(i), "W"));
    red.wheel_copy.push_back(b.add_vertex("Walpha", "W"));
    for (std::size_t i = 0; i <= 2 * k; ++i) {
        b.add_edge(red.wheel_copy[i], red.wheel_copy[(i + 1) % (2 * k + 1)]);
        b.add_edge(red.wheel_copy[i], red.hub());
    }
    for (Vertex t : far)
        b.add_edge(t, red.hub());
    Graph layer1 = b.build();

    // Second layer: a subdivision vertex next to original u is joined to the two end locking
    // vertices of every other original.
    GraphBuilder b2;
    for (Vertex v = 0; v < layer1.order(); ++v)
        b2.add_vertex(layer1.label(v), layer1.tag(v));
    for (std::size_t e = 0; e < red.source_edges.size(); ++e) {
        const auto & path = red.subdivision[e];
        std::pair<Vertex, Vertex> ends[2] = {{path.front(), red.source_edges[e].u}, {path.back(), red.source_edges[e].v}};
        for (auto [x, u] : ends)
            for (Vertex v = 0; v < n; ++v)
                if (v != u) {
                    b2.add_edge(x, red.locking[v].front());
                    b2.add_edge(x, red.locking[v].back());
                }
    }

    red.ec.k = k;
    red.ec.graph = EdgeColouredGraph({layer1, b2.build()});
    red.ec.start = clique_extension(red, phi);
    red.ec.end = clique_extension(red, psi);
    return red;
}

Hom clique_extension(const CliqueReduction & red, const Hom & colouring)
{
    const std::size_t k = red.k;
    require_proper(red.source, colouring, 2 * k + 1, "colouring");
    Hom f(std::vector<Vertex>(red.ec.graph.order(), 0));
    for (Vertex v = 0; v < red.source.order(); ++v) {
        f.image[v] = colouring[v];
        for (std::size_t i = 1; i <= 2 * k; ++i)
            f.image[red.locking[v][i - 1]] = static_cast<Vertex>((colouring[v] + i) % (2 * k + 1));
    }
    for (std::size_t e = 0; e < red.source_edges.size(); ++e) {
        auto walk = subdivision_walk(k, colouring[red.source_edges[e].u], colouring[red.source_edges[e].v]);
        for (std::size_t i = 0; i < walk.size(); ++i)
            f.image[red.subdivision[e][i]] = walk[i];
    }
    for (std::size_t i = 0; i < red.wheel_copy.size(); ++i)
        f.image[red.wheel_copy[i]] = static_cast<Vertex>(i);
    return f;
}

ReconfigPath translate_clique_to_ecol(const CliqueReduction & red, const ReconfigPath & path)
{
    const std::size_t k = red.k;
    const Vertex alpha = static_cast<Vertex>(2 * k + 1);
    HomInstance source(red.source, clique(2 * k + 1));
    require_valid(source, path, "source path");
    const ReconfigPath steps = normalise_path(path);
    HomInstance inst = red.ec.hom_instance();
    const Graph & layer1 = red.ec.graph.layer(0);

    Recorder rec(clique_extension(red, steps.front()));
    for (std::size_t i = 1; i < steps.steps.size(); ++i) {
        const Hom & next = steps.steps[i];
        Vertex v = 0;
        while (steps.steps[i - 1][v] == next[v])
            ++v;
        const Hom target = clique_extension(red, next);

        // Park every neighbour of v on the hub colour, then recolour v.
        for (Vertex u : layer1.neighbours(v))
            if (u != red.hub())
                rec.set(u, alpha);
        rec.set(v, next[v]);

        // Locking cycle of v: remix the interior, then release the two ends.
        const auto & lock = red.locking[v];
        remix_to(inst, rec, std::vector<Vertex>(lock.begin() + 1, lock.end() - 1), target);
        rec.set(lock.front(), target[lock.front()]);
        rec.set(lock.back(), target[lock.back()]);

        // Subdivided edges at v: remix all but the vertex next to v, then release it.
        for (std::size_t e = 0; e < red.source_edges.size(); ++e) {
            const auto & edge = red.source_edges[e];
            if (edge.u != v && edge.v != v)
                continue;
            std::vector<Vertex> interior = red.subdivision[e];
            Vertex near = edge.u == v ? interior.front() : interior.back();
            interior.erase(std::find(interior.begin(), interior.end(), near));
            remix_to(inst, rec, interior, target);
            rec.set(near, target[near]);
        }
        if (rec.current() != target)
            throw std::logic_error("clique translation missed its target colouring");
    }
    ensure_valid(inst, rec.path, "translated edge-coloured path");
    return std::move(rec.path);
}

ReconfigPath restrict_ecol_to_clique(const CliqueReduction & red, const ReconfigPath & path)
{
    HomInstance inst = red.ec.hom_instance();
    require_valid(inst, path, "edge-coloured path");
    const std::size_t n = red.source.order();
    const std::size_t colours = 2 * red.k + 1;
    auto proper = [&](const Hom & r) {
        for (Vertex v = 0; v < n; ++v)
            if (r[v] >= colours)
                return false;
        for (const auto & e : red.source_edges)
            if (r[e.u] == r[e.v])
                return false;
        return true;
    };
    ReconfigPath out = restrict_steps(path, n, proper);
    if (out.steps.empty() || out.front() != restrict_to(path.front(), n) || out.back() != restrict_to(path.back(), n))
        throw std::logic_error("restriction lost an endpoint");
    ensure_valid(HomInstance(red.source, clique(colours)), out, "restricted clique path");
    return out;
}

HomInstance WheelReduction::hom_instance() const
{
    return HomInstance(graph, wheel(2 * k + 1));
}

WheelReduction reduce_ecol_to_wheel(const EcInstance & inst)
{
    if (inst.graph.layer_count() != 2)
        throw std::invalid_argument("the wheel reduction needs a two-layer instance");
    const Graph & layer2 = inst.graph.layer(1);
    if (layer2.has_loops())
        throw std::invalid_argument("the second layer must be loop-free");
    HomInstance source = inst.hom_instance();
    if (!source.is_hom(inst.start) || !source.is_hom(inst.end))
        throw std::invalid_argument("instance endpoints are not edge-coloured homomorphisms");

    WheelReduction red;
    red.k = inst.k;
    red.ec = inst;
    red.gadget = freezing_gadget(inst.k);
    const Graph & gg = red.gadget.graph;

    GraphBuilder b(inst.graph.layer(0));
    auto edges = layer2.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        GadgetPlacement p;
        p.a = edges[e].u;
        p.b = edges[e].v;
        p.globals.resize(gg.order());
        for (Vertex u = 0; u < gg.order(); ++u) {
            if (u == red.gadget.x())
                p.globals[u] = p.a;
            else if (u == red.gadget.y())
                p.globals[u] = p.b;
            else
                p.globals[u] = b.add_vertex("g" + std::to_string(e) + "." + gg.label(u), "gadget");
        }
        for (const auto & ge : gg.edges())
            b.add_new_edge(p.globals[ge.u], p.globals[ge.v]);
        red.placements.push_back(std::move(p));
    }
    red.graph = b.build();
    if (red.graph.order() != inst.graph.order() + 10 * inst.k * edges.size())
        throw std::logic_error("wheel instance has an unexpected size");
    red.start = wheel_extension(red, inst.start);
    red.end = wheel_extension(red, inst.end);
    return red;
}

Hom wheel_extension(const WheelReduction & red, const Hom & colouring)
{
    if (!red.ec.hom_instance().is_hom(colouring))
        throw std::invalid_argument("not an edge-coloured homomorphism");
    Hom f(std::vector<Vertex>(red.graph.order(), 0));
    std::copy(colouring.image.begin(), colouring.image.end(), f.image.begin());
    std::map<std::pair<Vertex, Vertex>, Hom> cache;
    for (const auto & p : red.placements) {
        auto key = std::make_pair(colouring[p.a], colouring[p.b]);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, gadget_colouring(red.gadget, key.first, key.second)).first;
        for (Vertex u = 0; u < p.globals.size(); ++u)
            f.image[p.globals[u]] = it->second[u];
    }
    return f;
}

ReconfigPath translate_ecol_to_wheel(const WheelReduction & red, const ReconfigPath & path)
{
    HomInstance source = red.ec.hom_instance();
    require_valid(source, path, "edge-coloured path");
    const ReconfigPath steps = normalise_path(path);
    const FreezingGadget & gd = red.gadget;
    std::map<std::pair<Vertex, Vertex>, Hom> cache;
    auto canonical = [&](Vertex c1, Vertex c2) -> const Hom & {
        auto key = std::make_pair(c1, c2);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, gadget_colouring(gd, c1, c2)).first;
        return it->second;
    };

    Recorder rec(wheel_extension(red, steps.front()));
    auto replay = [&](const GadgetPlacement & p, const ReconfigPath & local, std::size_t from, std::size_t to) {
        for (std::size_t s = from; s < to; ++s)
            for (Vertex u = 0; u < p.globals.size(); ++u)
                rec.set(p.globals[u], local.steps[s][u]);
    };

    for (std::size_t i = 1; i < steps.steps.size(); ++i) {
        const Hom & next = steps.steps[i];
        Vertex v = 0;
        while (steps.steps[i - 1][v] == next[v])
            ++v;

        std::vector<std::pair<const GadgetPlacement *, Bridge>> bridges;
        for (const auto & p : red.placements) {
            if (p.a != v && p.b != v)
                continue;
            Hom local(std::vector<Vertex>(p.globals.size()));
            for (Vertex u = 0; u < p.globals.size(); ++u)
                local.image[u] = rec.current()[p.globals[u]];
            Hom target = canonical(next[p.a], next[p.b]);
            // The bridge moves the gadget's x; when v plays y, work in the swapped gadget.
            bool swapped = p.b == v;
            if (swapped) {
                local = permute_colouring(local, gd.swap);
                target = permute_colouring(target, gd.swap);
            }
            Bridge br = gadget_bridge(gd, local, target);
            if (swapped)
                for (auto & s : br.path.steps)
                    s = permute_colouring(s, gd.swap);
            bridges.emplace_back(&p, std::move(br));
        }
        // First halves, the move of v, then second halves.
        for (auto & [p, br] : bridges)
            replay(*p, br.path, 1, *br.split + 1);
        rec.set(v, next[v]);
        for (auto & [p, br] : bridges)
            replay(*p, br.path, *br.split + 2, br.path.steps.size());
    }
    if (rec.current() != wheel_extension(red, steps.back()))
        throw std::logic_error("wheel translation missed its target colouring");
    ensure_valid(red.hom_instance(), rec.path, "translated wheel path");
    return std::move(rec.path);
}

ReconfigPath restrict_wheel_to_ecol(const WheelReduction & red, const ReconfigPath & path)
{
    require_valid(red.hom_instance(), path, "wheel path");
    ReconfigPath out = restrict_steps(path, red.ec.graph.order(), [](const Hom &) { return true; });
    ensure_valid(red.ec.hom_instance(), out, "restricted edge-coloured path");
    return out;
}

ComposedReduction reduce_clique_to_wheel(std::size_t k, const Graph & g, const Hom & phi, const Hom & psi)
{
    ComposedReduction red;
    red.clique = reduce_clique_to_ecol(k, g, phi, psi);
    red.wheel = reduce_ecol_to_wheel(red.clique.ec);
    return red;
}

ReconfigPath translate_composed(const ComposedReduction & red, const ReconfigPath & path)
{
    return translate_ecol_to_wheel(red.wheel, translate_clique_to_ecol(red.clique, path));
}

ReconfigPath restrict_composed(const ComposedReduction & red, const ReconfigPath & path)
{
    return restrict_ecol_to_clique(red.clique, restrict_wheel_to_ecol(red.wheel, path));
}

} // namespace homreconf
