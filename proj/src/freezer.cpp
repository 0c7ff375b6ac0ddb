#include "homreconf/freezer.hpp"
#include "homreconf/families.hpp"
#include "homreconf/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homreconf {

std::optional<Vertex> redundant_in(const Graph & f, const VertexSet & s, Vertex alpha)
{
    if (!s.contains(alpha))
        throw std::invalid_argument("redundancy is only defined for members of S");
    VertexSet mine = f.neighbourhood(alpha) & s;
    for (Vertex beta = 0; beta < f.order(); ++beta)
        if (beta != alpha && mine.is_subset_of(f.neighbourhood(beta)))
            return beta;
    return std::nullopt;
}

ComponentFreezer compute_s_f(const Graph & f, const std::vector<Vertex> & priority)
{
    if (!is_connected(f))
        throw std::invalid_argument("S_F is defined for connected graphs only");
    if (priority.size() != f.order())
        throw std::invalid_argument("priority must list every vertex once");
    ComponentFreezer out;
    out.vertices.resize(f.order());
    std::iota(out.vertices.begin(), out.vertices.end(), 0);
    out.s_f = VertexSet::full(f.order());
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex alpha : priority) {
            if (!out.s_f.contains(alpha))
                continue;
            if (auto beta = redundant_in(f, out.s_f, alpha)) {
                out.eliminations.push_back({alpha, *beta});
                out.s_f.erase(alpha);
                changed = true;
                break;
            }
        }
    }
    out.thermal = out.s_f.empty();
    return out;
}

ComponentFreezer compute_s_f(const Graph & f)
{
    std::vector<Vertex> order(f.order());
    std::iota(order.begin(), order.end(), 0);
    return compute_s_f(f, order);
}

bool is_thermal(const Graph & f)
{
    return compute_s_f(f).thermal;
}

FreezerReport analyse_freezer(const Graph & h)
{
    FreezerReport report;
    report.s_h = VertexSet(h.order());
    std::vector<std::string> provenance(h.order());
    auto comps = components(h);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        VertexSet members(h.order());
        for (Vertex v : comps[i])
            members.insert(v);
        // induced_subgraph keeps ascending order, so local index j is comps[i][j].
        ComponentFreezer local = compute_s_f(induced_subgraph(h, members));
        ComponentFreezer mapped;
        mapped.vertices = comps[i];
        mapped.thermal = local.thermal;
        mapped.s_f = VertexSet(h.order());
        local.s_f.for_each([&](Vertex j) { mapped.s_f.insert(comps[i][j]); });
        for (auto e : local.eliminations)
            mapped.eliminations.push_back({comps[i][e.vertex], comps[i][e.witness]});
        report.s_h |= mapped.s_f;
        mapped.s_f.for_each([&](Vertex v) { provenance[v] = "component" + std::to_string(i); });
        report.components.push_back(std::move(mapped));
    }
    GraphBuilder b(induced_subgraph(h, report.s_h));
    std::size_t j = 0;
    report.s_h.for_each([&](Vertex v) { b.set_tag(static_cast<Vertex>(j++), provenance[v]); });
    report.freezer = b.build();
    return report;
}

Graph freezer(const Graph & h)
{
    return analyse_freezer(h).freezer;
}

std::optional<Vertex> distinguishing_target(const Graph & h, const VertexSet & s, const VertexSet & d)
{
    if (!d.is_subset_of(s))
        throw std::invalid_argument("a distinguishing set must lie inside S_F");
    VertexSet common = VertexSet::full(h.order());
    d.for_each([&](Vertex x) { common &= h.neighbourhood(x); });
    if (common.count() != 1)
        return std::nullopt;
    return common.first();
}

bool is_distinguishing(const Graph & h, const VertexSet & s, const VertexSet & d, Vertex alpha)
{
    auto t = distinguishing_target(h, s, d);
    return t && *t == alpha;
}

std::vector<DistinguishingSet> distinguishing_family(const Graph & h, const FreezerReport & report)
{
    std::vector<DistinguishingSet> out;
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        const auto & comp = report.components[i];
        if (comp.vertices.size() < 3)
            throw std::invalid_argument("distinguishing families need components with at least three vertices");
        auto pool = comp.s_f.members();
        if (pool.size() > distinguishing_enumeration_limit)
            throw std::length_error("S_F too large to enumerate its subsets");
        std::vector<DistinguishingSet> local;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            VertexSet d(h.order());
            for (std::size_t b = 0; b < pool.size(); ++b)
                if ((mask >> b) & 1u)
                    d.insert(pool[b]);
            if (auto t = distinguishing_target(h, report.s_h, d)) {
                if (d.count() < 2)
                    throw std::logic_error("distinguishing set with fewer than two members");
                local.push_back({std::move(d), *t, i});
            }
        }
        std::sort(local.begin(), local.end(), [](const DistinguishingSet & a, const DistinguishingSet & b) {
            if (a.set.count() != b.set.count())
                return a.set.count() < b.set.count();
            return a.set < b.set;
        });
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

std::vector<DistinguishingSet> distinguishing_family(const Graph & h)
{
    return distinguishing_family(h, analyse_freezer(h));
}

bool is_frozen_via_distinguishing(const Graph & g, const Graph & h, const FreezerReport & report, const Hom & f)
{
    if (g.has_loops())
        throw std::invalid_argument("the distinguishing criterion needs a loop-free source");
    HomInstance inst(g, h);
    if (!inst.is_hom(f))
        throw std::invalid_argument("not a homomorphism");
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet d(h.order());
        for (Vertex u : g.neighbours(v))
            d.insert(f[u]);
        if (!d.is_subset_of(report.s_h))
            return false;
        if (!is_distinguishing(h, report.s_h, d, f[v]))
            return false;
    }
    return true;
}

bool is_frozen_via_distinguishing(const Graph & g, const Graph & h, const Hom & f)
{
    return is_frozen_via_distinguishing(g, h, analyse_freezer(h), f);
}

std::string DichotomyVerdict::summary() const
{
    switch (which) {
    case DichotomyCase::poly_thermal_or_small:
        return all_thermal ? "poly: thermal" : "poly: thermal-or-small";
    case DichotomyCase::poly_k2_bipartite_freezer:
        return "poly: K2 with bipartite freezer";
    case DichotomyCase::poly_reflexive_singleton:
        return "poly: reflexive singleton";
    case DichotomyCase::np_complete:
        break;
    }
    return "np-complete";
}

namespace {

struct ComponentShape {
    bool is_k2 = false;
    bool reflexive_singleton = false;
    bool thermal = false;
    std::size_t order = 0;
};

std::vector<ComponentShape> shapes(const Graph & h, const FreezerReport & report)
{
    std::vector<ComponentShape> out;
    for (const auto & c : report.components) {
        ComponentShape s;
        s.order = c.vertices.size();
        s.thermal = c.thermal;
        if (s.order == 1)
            s.reflexive_singleton = h.has_loop(c.vertices[0]);
        if (s.order == 2)
            s.is_k2 = !h.has_loop(c.vertices[0]) && !h.has_loop(c.vertices[1]);
        out.push_back(s);
    }
    return out;
}

} // namespace

DichotomyVerdict classify(const Graph & h)
{
    FreezerReport report = analyse_freezer(h);
    auto shape = shapes(h, report);
    DichotomyVerdict v;

    bool small_or_thermal = true, all_thermal = true;
    for (const auto & s : shape) {
        small_or_thermal = small_or_thermal && (s.thermal || s.order <= 2);
        all_thermal = all_thermal && s.thermal;
    }
    std::vector<std::size_t> k2, reflexive;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i].is_k2)
            k2.push_back(i);
        if (shape[i].reflexive_singleton)
            reflexive.push_back(i);
    }

    if (small_or_thermal) {
        v.which = DichotomyCase::poly_thermal_or_small;
        v.all_thermal = all_thermal;
        v.evidence.resize(shape.size());
        std::iota(v.evidence.begin(), v.evidence.end(), 0);
    }
    else if (!k2.empty() && is_bipartite(report.freezer)) {
        v.which = DichotomyCase::poly_k2_bipartite_freezer;
        v.evidence = k2;
    }
    else if (!reflexive.empty()) {
        v.which = DichotomyCase::poly_reflexive_singleton;
        v.evidence = reflexive;
    }
    else {
        v.which = DichotomyCase::np_complete;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (shape[i].thermal)
                continue;
            if (!k2.empty()) {
                if (!is_bipartite(induced_subgraph(h, report.components[i].s_f)))
                    v.evidence.push_back(i);
            }
            else if (shape[i].order >= 3)
                v.evidence.push_back(i);
        }
    }
    return v;
}

bool decide_frozen_poly(const Graph & h, const Graph & g)
{
    if (g.has_loops())
        throw std::invalid_argument("the polynomial deciders need a loop-free source");
    DichotomyVerdict verdict = classify(h);
    if (!verdict.polynomial())
        throw std::invalid_argument("H is in the NP-complete case");
    FreezerReport report = analyse_freezer(h);
    auto shape = shapes(h, report);
    bool has_k2 = false, has_reflexive = false;
    for (const auto & s : shape) {
        has_k2 = has_k2 || s.is_k2;
        has_reflexive = has_reflexive || s.reflexive_singleton;
    }
    // Components of G are coloured independently. An isolated vertex may take any colour,
    // so it is only frozen when H has a single vertex. A component with an edge can sit
    // frozen on a reflexive singleton, or on K2 when it is bipartite. In the polynomial
    // cases no other component of H can host it.
    for (const auto & comp : components(g)) {
        if (comp.size() == 1) {
            if (h.order() != 1)
                return false;
            continue;
        }
        if (has_reflexive)
            continue;
        VertexSet members(g.order());
        for (Vertex v : comp)
            members.insert(v);
        if (!(has_k2 && is_bipartite(induced_subgraph(g, members))))
            return false;
    }
    return true;
}

} // namespace homreconf
