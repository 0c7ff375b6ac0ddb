#include "homreconf/csp.hpp"
#include "homreconf/disjoint_set.hpp"
#include "homreconf/families.hpp"
#include "homreconf/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace homreconf {

KRelation::KRelation(std::vector<std::string> domain, std::size_t arity, std::vector<Tuple> tuples)
    : domain_(std::move(domain)), arity_(arity), tuples_(std::move(tuples))
{
    if (arity_ == 0)
        throw std::invalid_argument("relations need arity at least 1");
    for (const auto & t : tuples_) {
        if (t.size() != arity_)
            throw std::invalid_argument("tuple length differs from the arity");
        for (Vertex v : t)
            if (v >= domain_.size())
                throw std::invalid_argument("tuple entry outside the domain");
    }
    std::sort(tuples_.begin(), tuples_.end());
    tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool KRelation::contains(const Tuple & t) const
{
    return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

std::vector<std::string> numbered_labels(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::to_string(i));
    return out;
}

std::vector<Vertex> support(const Tuple & t)
{
    std::vector<Vertex> s(t);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

namespace {

// Calls f on every k-tuple over the members of s whose support is all of s.
template <class F>
void for_each_surjection(const std::vector<Vertex> & s, std::size_t k, F && f)
{
    if (s.empty() || s.size() > k)
        return;
    std::vector<std::size_t> digit(k, 0);
    Tuple t(k);
    while (true) {
        std::vector<char> hit(s.size(), 0);
        std::size_t distinct = 0;
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = s[digit[i]];
            if (!hit[digit[i]]) {
                hit[digit[i]] = 1;
                ++distinct;
            }
        }
        if (distinct == s.size())
            f(t);
        std::size_t i = k;
        while (i > 0 && ++digit[i - 1] == s.size())
            digit[--i] = 0;
        if (i == 0)
            return;
    }
}

} // namespace

bool is_totally_symmetric(const KRelation & r)
{
    std::set<std::vector<Vertex>> supports;
    for (const auto & t : r.tuples())
        supports.insert(support(t));
    bool ok = true;
    for (const auto & s : supports)
        for_each_surjection(s, r.arity(), [&](const Tuple & t) { ok = ok && r.contains(t); });
    return ok;
}

bool has_constant_tuple(const KRelation & r)
{
    return std::any_of(r.tuples().begin(), r.tuples().end(), [](const Tuple & t) {
        return std::all_of(t.begin(), t.end(), [&](Vertex v) { return v == t.front(); });
    });
}

KRelation symmetric_relation_from_sets(const std::vector<std::string> & domain, std::size_t k,
                                       const std::vector<VertexSet> & sets)
{
    std::vector<Tuple> tuples;
    for (const auto & d : sets) {
        if (d.capacity() != domain.size())
            throw std::invalid_argument("set is not over the relation's domain");
        if (d.count() > k)
            throw std::invalid_argument("set is larger than the arity");
        for_each_surjection(d.members(), k, [&](const Tuple & t) { tuples.push_back(t); });
    }
    return KRelation(domain, k, std::move(tuples));
}

namespace {

class CspSolver {
public:
    CspSolver(const KRelation & inst, const KRelation & templ, std::size_t budget)
        : inst_(inst), templ_(templ), budget_(budget), n_(inst.domain_size()), m_(templ.domain_size())
    {
        touching_.resize(n_);
        for (std::size_t c = 0; c < inst.tuples().size(); ++c)
            for (Vertex v : support(inst.tuples()[c]))
                touching_[v].push_back(c);
        value_.assign(n_, 0);
    }

    CspResult run()
    {
        CspResult res;
        std::vector<VertexSet> dom(n_, VertexSet::full(m_));
        // A tuple cannot be satisfied by an empty template.
        if (m_ == 0 && n_ > 0) {
            res.nodes = nodes_;
            return res;
        }
        auto found = search(0, dom);
        res.nodes = nodes_;
        if (exhausted_)
            res.status = SearchStatus::budget_exhausted;
        else if (found) {
            res.status = SearchStatus::found;
            res.assignment = Hom(value_);
        }
        return res;
    }

private:
    bool search(std::size_t depth, std::vector<VertexSet> & dom)
    {
        if (depth == n_)
            return true;
        const Vertex v = static_cast<Vertex>(depth);
        for (Vertex c : dom[v].members()) {
            if (budget_ != 0 && nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            value_[v] = c;
            std::vector<VertexSet> next = dom;
            next[v] = VertexSet(m_, {c});
            if (filter(v, depth, next) && search(depth + 1, next))
                return true;
            if (exhausted_)
                return false;
        }
        return false;
    }

    // Keeps only supported values for the open variables of every tuple containing v.
    bool filter(Vertex v, std::size_t depth, std::vector<VertexSet> & dom) const
    {
        for (std::size_t c : touching_[v]) {
            const Tuple & scope = inst_.tuples()[c];
            std::map<Vertex, VertexSet> sup;
            for (Vertex u : scope)
                if (u > depth)
                    sup.emplace(u, VertexSet(m_));
            bool any = false;
            for (const auto & t : templ_.tuples()) {
                bool ok = true;
                std::map<Vertex, Vertex> seen;
                for (std::size_t p = 0; p < scope.size() && ok; ++p) {
                    Vertex u = scope[p];
                    if (u <= depth)
                        ok = value_[u] == t[p];
                    else if (!dom[u].contains(t[p]))
                        ok = false;
                    else {
                        auto [it, fresh] = seen.emplace(u, t[p]);
                        ok = fresh || it->second == t[p];
                    }
                }
                if (!ok)
                    continue;
                any = true;
                for (auto & [u, s] : sup)
                    s.insert(seen.at(u));
            }
            if (!any)
                return false;
            for (auto & [u, s] : sup)
                dom[u] &= s;
        }
        return true;
    }

    const KRelation & inst_;
    const KRelation & templ_;
    std::size_t budget_;
    std::size_t n_, m_;
    std::vector<std::vector<std::size_t>> touching_;
    std::vector<Vertex> value_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

CspResult csp_hom(const KRelation & instance, const KRelation & templ, std::size_t node_budget)
{
    if (instance.arity() != templ.arity())
        throw std::invalid_argument("instance and template arities differ");
    CspResult res = CspSolver(instance, templ, node_budget).run();
    if (res.assignment && !is_csp_hom(instance, templ, *res.assignment))
        throw std::logic_error("csp solver returned a non-solution");
    return res;
}

bool is_csp_hom(const KRelation & instance, const KRelation & templ, const Hom & f)
{
    if (instance.arity() != templ.arity())
        throw std::invalid_argument("instance and template arities differ");
    if (f.size() != instance.domain_size())
        return false;
    for (Vertex v : f.image)
        if (v >= templ.domain_size())
            return false;
    for (const auto & t : instance.tuples()) {
        Tuple img(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            img[i] = f[t[i]];
        if (!templ.contains(img))
            return false;
    }
    return true;
}

namespace {

std::size_t checked_power4(std::size_t x)
{
    std::size_t out = 1;
    for (int i = 0; i < 4; ++i) {
        if (x != 0 && out > siggers_constraint_limit / x)
            throw std::length_error("too many tuple quadruples for the polymorphism search");
        out *= x;
    }
    return out;
}

// Calls f with the four tuples of every ordered quadruple from R.
template <class F>
void for_each_quadruple(const KRelation & r, F && f)
{
    const auto & ts = r.tuples();
    for (const auto & a : ts)
        for (const auto & b : ts)
            for (const auto & c : ts)
                for (const auto & d : ts)
                    f(a, b, c, d);
}

} // namespace

bool is_polymorphism(const KRelation & r, const Polymorphism4 & p)
{
    if (p.n != r.domain_size() || p.table.size() != p.n * p.n * p.n * p.n)
        return false;
    checked_power4(r.tuples().size());
    bool ok = true;
    Tuple img(r.arity());
    for_each_quadruple(r, [&](const Tuple & a, const Tuple & b, const Tuple & c, const Tuple & d) {
        if (!ok)
            return;
        for (std::size_t j = 0; j < r.arity(); ++j)
            img[j] = p(a[j], b[j], c[j], d[j]);
        ok = r.contains(img);
    });
    return ok;
}

bool satisfies_siggers(const Polymorphism4 & p)
{
    for (Vertex a = 0; a < p.n; ++a)
        for (Vertex r = 0; r < p.n; ++r)
            for (Vertex e = 0; e < p.n; ++e)
                if (p(a, r, e, a) != p(r, a, r, e))
                    return false;
    return true;
}

namespace {

class SiggersSolver {
public:
    SiggersSolver(const KRelation & r, std::size_t budget) : r_(r), budget_(budget), n_(r.domain_size())
    {
        const std::size_t cells = n_ * n_ * n_ * n_;
        DisjointSet dsu(cells);
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = 0; b < n_; ++b)
                for (Vertex e = 0; e < n_; ++e)
                    dsu.unite(cell(a, b, e, a), cell(b, a, b, e));
        class_of_.assign(cells, 0);
        std::map<std::size_t, std::uint32_t> id;
        for (std::size_t c = 0; c < cells; ++c) {
            auto [it, fresh] = id.emplace(dsu.find(c), static_cast<std::uint32_t>(id.size()));
            class_of_[c] = it->second;
        }
        classes_ = id.size();

        std::set<std::vector<std::uint32_t>> scopes;
        std::vector<std::uint32_t> scope(r.arity());
        for_each_quadruple(r, [&](const Tuple & a, const Tuple & b, const Tuple & c, const Tuple & d) {
            for (std::size_t j = 0; j < r.arity(); ++j)
                scope[j] = class_of_[cell(a[j], b[j], c[j], d[j])];
            scopes.insert(scope);
        });
        constraints_.assign(scopes.begin(), scopes.end());
        watching_.resize(classes_);
        for (std::size_t c = 0; c < constraints_.size(); ++c) {
            auto s = constraints_[c];
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (auto x : s)
                watching_[x].push_back(c);
        }
    }

    std::size_t classes() const { return classes_; }
    std::size_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

    std::optional<Polymorphism4> run()
    {
        value_.assign(classes_, unset);
        std::vector<VertexSet> dom(classes_, VertexSet::full(n_));
        if (!search(dom))
            return std::nullopt;
        Polymorphism4 p;
        p.n = n_;
        p.table.resize(class_of_.size());
        for (std::size_t c = 0; c < class_of_.size(); ++c)
            p.table[c] = value_[class_of_[c]];
        return p;
    }

private:
    static constexpr Vertex unset = static_cast<Vertex>(-1);

    std::size_t cell(Vertex a, Vertex b, Vertex c, Vertex d) const { return ((a * n_ + b) * n_ + c) * n_ + d; }

    bool search(std::vector<VertexSet> & dom)
    {
        // Fewest remaining values first, then the class in the most constraints.
        std::size_t best = classes_;
        for (std::size_t x = 0; x < classes_; ++x) {
            if (value_[x] != unset)
                continue;
            if (best == classes_ || dom[x].count() < dom[best].count() ||
                (dom[x].count() == dom[best].count() && watching_[x].size() > watching_[best].size()))
                best = x;
        }
        if (best == classes_)
            return true;
        for (Vertex c : dom[best].members()) {
            if (budget_ != 0 && nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            value_[best] = c;
            std::vector<VertexSet> next = dom;
            next[best] = VertexSet(n_, {c});
            if (filter(best, next) && search(next))
                return true;
            value_[best] = unset;
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool filter(std::size_t x, std::vector<VertexSet> & dom) const
    {
        for (std::size_t c : watching_[x]) {
            const auto & scope = constraints_[c];
            std::map<std::uint32_t, VertexSet> sup;
            for (auto y : scope)
                if (value_[y] == unset)
                    sup.emplace(y, VertexSet(n_));
            bool any = false;
            for (const auto & t : r_.tuples()) {
                bool ok = true;
                std::map<std::uint32_t, Vertex> seen;
                for (std::size_t p = 0; p < scope.size() && ok; ++p) {
                    auto y = scope[p];
                    if (value_[y] != unset)
                        ok = value_[y] == t[p];
                    else if (!dom[y].contains(t[p]))
                        ok = false;
                    else {
                        auto [it, fresh] = seen.emplace(y, t[p]);
                        ok = fresh || it->second == t[p];
                    }
                }
                if (!ok)
                    continue;
                any = true;
                if (sup.empty())
                    break;
                for (auto & [y, s] : sup)
                    s.insert(seen.at(y));
            }
            if (!any)
                return false;
            for (auto & [y, s] : sup) {
                dom[y] &= s;
                if (dom[y].empty())
                    return false;
            }
        }
        return true;
    }

    const KRelation & r_;
    std::size_t budget_;
    std::size_t n_;
    std::vector<std::uint32_t> class_of_;
    std::size_t classes_ = 0;
    std::vector<std::vector<std::uint32_t>> constraints_;
    std::vector<std::vector<std::size_t>> watching_;
    std::vector<Vertex> value_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

SiggersResult siggers_search(const KRelation & r, std::size_t node_budget)
{
    SiggersResult res;
    const std::size_t n = r.domain_size();
    if (n == 0)
        return res;
    checked_power4(r.tuples().size());

    for (Vertex c = 0; c < n; ++c)
        if (r.contains(Tuple(r.arity(), c))) {
            Polymorphism4 p;
            p.n = n;
            p.table.assign(n * n * n * n, c);
            res.status = SearchStatus::found;
            res.witness = std::move(p);
            return res;
        }

    SiggersSolver solver(r, node_budget);
    res.classes = solver.classes();
    auto p = solver.run();
    res.nodes = solver.nodes();
    if (p) {
        if (!is_polymorphism(r, *p) || !satisfies_siggers(*p))
            throw std::logic_error("polymorphism search returned an invalid table");
        res.status = SearchStatus::found;
        res.witness = std::move(p);
    }
    else if (solver.exhausted())
        res.status = SearchStatus::budget_exhausted;
    return res;
}

RelationFromGraph relation_from_graph(const Graph & h)
{
    if (classify(h).polynomial())
        throw std::invalid_argument("the graph falls in a polynomial case");
    const FreezerReport report = analyse_freezer(h);

    bool has_k2 = false;
    for (const auto & c : report.components)
        if (c.vertices.size() == 2 && !h.has_loop(c.vertices[0]) && !h.has_loop(c.vertices[1]))
            has_k2 = true;

    VertexSet keep(h.order());
    for (const auto & c : report.components) {
        if (c.thermal)
            continue;
        if (has_k2 && is_bipartite(induced_subgraph(h, c.s_f)))
            continue;
        if (!has_k2 && c.vertices.size() == 1 && !h.has_loop(c.vertices[0]))
            continue;
        for (Vertex v : c.vertices)
            keep.insert(v);
    }

    RelationFromGraph out;
    out.h_prime = induced_subgraph(h, keep);
    out.to_h = keep.members();
    for (const auto & comp : components(out.h_prime))
        if (comp.size() < 3)
            throw std::logic_error("a kept component has fewer than three vertices");
    out.family = distinguishing_family(out.h_prime);

    std::size_t k = 3;
    std::vector<VertexSet> sets;
    for (const auto & d : out.family) {
        k = std::max(k, d.set.count());
        sets.push_back(d.set);
    }
    out.relation = symmetric_relation_from_sets(out.h_prime.labels(), k, sets);
    if (out.relation.tuples().empty() || !is_totally_symmetric(out.relation) || has_constant_tuple(out.relation))
        throw std::logic_error("the relation built from the graph breaks its own invariants");
    return out;
}

FrozenReduction reduce_csp_to_frozen(const KRelation & instance, const Graph & h)
{
    FrozenReduction red;
    red.rel = relation_from_graph(h);
    if (instance.arity() != red.rel.relation.arity())
        throw std::invalid_argument("instance arity differs from the template arity " +
                                    std::to_string(red.rel.relation.arity()));
    red.instance = instance;
    red.h = h;
    const FreezerReport report = analyse_freezer(red.rel.h_prime);
    red.j = report.freezer;
    red.j_to_h_prime = report.s_h.members();
    const std::size_t t = red.j.order();
    if (t < 2)
        throw std::logic_error("the freezer of H' is too small for a vertex with distinct coordinates");
    red.j_tilde = power(red.j, t);
    std::vector<Vertex> coords(t);
    for (std::size_t i = 0; i < t; ++i)
        coords[i] = static_cast<Vertex>(i);
    red.z_tilde = red.j_tilde.index_of(coords);

    const std::size_t n = instance.domain_size();
    GraphBuilder b;
    for (Vertex v = 0; v < n; ++v)
        b.add_vertex(instance.label(v), "variable");
    for (std::size_t c = 0; c < instance.tuples().size(); ++c) {
        Vertex w = b.add_vertex("w" + std::to_string(c), "tuple");
        red.tuple_vertex.push_back(w);
        for (Vertex v : support(instance.tuples()[c]))
            b.add_new_edge(v, w);
    }
    const Graph & jt = red.j_tilde.graph;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> block(jt.order());
        for (Vertex u = 0; u < jt.order(); ++u)
            block[u] = u == red.z_tilde ? v : b.add_vertex("J" + instance.label(v) + "." + jt.label(u), "block");
        for (const auto & e : jt.edges())
            b.add_new_edge(block[e.u], block[e.v]);
        red.blocks.push_back(std::move(block));
    }
    red.graph = b.build();
    return red;
}

Hom csp_to_frozen(const FrozenReduction & red, const Hom & f)
{
    const KRelation & templ = red.rel.relation;
    if (!is_csp_hom(red.instance, templ, f))
        throw std::invalid_argument("not a solution of the instance");
    std::vector<std::size_t> j_index(red.rel.h_prime.order(), red.j.order());
    for (std::size_t i = 0; i < red.j_to_h_prime.size(); ++i)
        j_index[red.j_to_h_prime[i]] = i;

    Hom g(std::vector<Vertex>(red.graph.order(), 0));
    for (Vertex v = 0; v < red.instance.domain_size(); ++v) {
        std::size_t i = j_index[f[v]];
        if (i == red.j.order())
            i = 0;  // a value outside J only happens for variables in no tuple
        for (Vertex u = 0; u < red.j_tilde.graph.order(); ++u)
            g.image[red.blocks[v][u]] = red.rel.to_h[red.j_to_h_prime[red.j_tilde.coordinate(u, i)]];
    }
    for (std::size_t c = 0; c < red.instance.tuples().size(); ++c) {
        VertexSet d(red.rel.h_prime.order());
        for (Vertex v : red.instance.tuples()[c])
            d.insert(f[v]);
        auto it = std::find_if(red.rel.family.begin(), red.rel.family.end(),
                               [&](const DistinguishingSet & s) { return s.set == d; });
        if (it == red.rel.family.end())
            throw std::logic_error("tuple image is not a distinguishing set");
        g.image[red.tuple_vertex[c]] = red.rel.to_h[it->target];
    }
    return g;
}

Hom frozen_to_csp(const FrozenReduction & red, const Hom & g)
{
    std::vector<Vertex> from_h(red.h.order(), 0);
    for (Vertex i = 0; i < red.rel.to_h.size(); ++i)
        from_h[red.rel.to_h[i]] = i;
    std::vector<Vertex> out(red.instance.domain_size());
    for (Vertex v = 0; v < out.size(); ++v)
        out[v] = from_h.at(g[v]);
    return Hom(std::move(out));
}

KRelation cycle_triple_relation(const Graph & h, std::size_t d)
{
    if (d == 0)
        throw std::invalid_argument("cycle distance must be positive");
    HomInstance inst(cycle(3 * d), h);
    const auto x = static_cast<Vertex>(0), y = static_cast<Vertex>(d), z = static_cast<Vertex>(2 * d);
    std::vector<Tuple> tuples;
    for (Vertex a = 0; a < h.order(); ++a)
        for (Vertex b = 0; b < h.order(); ++b)
            for (Vertex c = 0; c < h.order(); ++c)
                if (first_hom(inst, {{x, a}, {y, b}, {z, c}}))
                    tuples.push_back({a, b, c});
    return KRelation(h.labels(), 3, std::move(tuples));
}

std::size_t odd_girth_parameter(const Graph & h)
{
    if (h.has_loops())
        throw std::invalid_argument("the odd-girth relation needs a loop-free graph");
    auto g = odd_girth(h);
    if (!g)
        throw std::invalid_argument("the odd-girth relation needs a non-bipartite graph");
    std::size_t d = (*g + 2) / 3;
    if (d % 2 == 0)
        ++d;
    return d;
}

KRelation odd_girth_relation(const Graph & h)
{
    return cycle_triple_relation(h, odd_girth_parameter(h));
}

Graph csp_to_hcol(const KRelation & instance, std::size_t d)
{
    if (instance.arity() != 3)
        throw std::invalid_argument("cycle instances need ternary relations");
    if (d == 0)
        throw std::invalid_argument("cycle distance must be positive");
    GraphBuilder b;
    for (Vertex v = 0; v < instance.domain_size(); ++v)
        b.add_vertex(instance.label(v), "variable");
    const std::size_t len = 3 * d;
    for (std::size_t e = 0; e < instance.tuples().size(); ++e) {
        const Tuple & t = instance.tuples()[e];
        std::vector<Vertex> ring(len);
        for (std::size_t p = 0; p < len; ++p) {
            if (p % d == 0)
                ring[p] = t[p / d];
            else
                ring[p] = b.add_vertex("c" + std::to_string(e) + "." + std::to_string(p), "cycle");
        }
        for (std::size_t p = 0; p < len; ++p)
            b.add_edge(ring[p], ring[(p + 1) % len]);
    }
    return b.build();
}

} // namespace homreconf
