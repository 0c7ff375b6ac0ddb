#include "homreconf/hom.hpp"
#include "homreconf/disjoint_set.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace homreconf {

HomInstance::HomInstance(Graph source, Graph target)
{
    source_.push_back(std::move(source));
    target_.push_back(std::move(target));
    prepare();
}

HomInstance::HomInstance(EdgeColouredGraph source, EdgeColouredGraph target)
{
    if (source.layer_count() != target.layer_count())
        throw std::invalid_argument("source and target have different layer counts");
    source_ = source.layers();
    target_ = target.layers();
    prepare();
}

void HomInstance::prepare()
{
    const std::size_t n = source_order();
    const std::size_t m = target_order();
    target_rows_.assign(layer_count(), {});
    for (std::size_t j = 0; j < layer_count(); ++j)
        for (Vertex c = 0; c < m; ++c)
            target_rows_[j].push_back(target_[j].neighbourhood(c));

    union_neighbours_.assign(n, {});
    initial_domain_.assign(n, VertexSet::full(m));
    for (Vertex v = 0; v < n; ++v) {
        auto & nb = union_neighbours_[v];
        for (std::size_t j = 0; j < layer_count(); ++j) {
            for (Vertex u : source_[j].neighbours(v))
                if (u != v)
                    nb.push_back(u);
            if (source_[j].has_loop(v)) {
                VertexSet reflexive(m);
                for (Vertex c = 0; c < m; ++c)
                    if (target_[j].has_loop(c))
                        reflexive.insert(c);
                initial_domain_[v] &= reflexive;
            }
        }
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

void HomInstance::check(const Hom & f) const
{
    if (f.size() != source_order())
        throw std::invalid_argument("map size does not match the source vertex count");
    for (Vertex c : f.image)
        if (c >= target_order())
            throw std::invalid_argument("map sends a vertex outside the target");
}

bool HomInstance::is_hom(const Hom & f) const
{
    check(f);
    for (std::size_t j = 0; j < layer_count(); ++j)
        for (const auto & e : source_[j].edges())
            if (!target_rows_[j][f[e.u]].contains(f[e.v]))
                return false;
    return true;
}

bool HomInstance::adjacent(const Hom & f, const Hom & g) const
{
    check(f);
    check(g);
    for (std::size_t j = 0; j < layer_count(); ++j)
        for (const auto & e : source_[j].edges())
            if (!target_rows_[j][f[e.u]].contains(g[e.v]) || !target_rows_[j][f[e.v]].contains(g[e.u]))
                return false;
    return true;
}

bool HomInstance::can_recolour(const Hom & f, Vertex v, Vertex c) const
{
    if (c >= target_order() || c == f[v])
        return false;
    for (std::size_t j = 0; j < layer_count(); ++j) {
        const auto & rows = target_rows_[j];
        for (Vertex u : source_[j].neighbours(v)) {
            if (u == v) {
                if (!rows[c].contains(c) || !rows[f[v]].contains(c))
                    return false;
            }
            else if (!rows[c].contains(f[u]))
                return false;
        }
    }
    return true;
}

namespace {

// Colours c != f(v) such that recolouring v to c is a move.
VertexSet move_colours(const HomInstance & inst, const Hom & f, Vertex v)
{
    VertexSet allowed = inst.initial_domain(v);
    for (std::size_t j = 0; j < inst.layer_count(); ++j)
        for (Vertex u : inst.source(j).neighbours(v)) {
            if (u == v)
                allowed &= inst.target_row(j, f[v]);
            else
                allowed &= inst.target_row(j, f[u]);
        }
    allowed.erase(f[v]);
    return allowed;
}

} // namespace

std::vector<std::pair<Vertex, Vertex>> HomInstance::moves(const Hom & f, const VertexSet * movable) const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < source_order(); ++v) {
        if (movable && !movable->contains(v))
            continue;
        move_colours(*this, f, v).for_each([&](Vertex c) { out.emplace_back(v, c); });
    }
    return out;
}

std::vector<Hom> HomInstance::single_vertex_moves(const Hom & f) const
{
    std::vector<Hom> out;
    for (auto [v, c] : moves(f)) {
        Hom g = f;
        g.image[v] = c;
        out.push_back(std::move(g));
    }
    return out;
}

VertexSet HomInstance::fixed_vertices(const Hom & f) const
{
    check(f);
    VertexSet fixed(source_order());
    for (Vertex v = 0; v < source_order(); ++v)
        if (move_colours(*this, f, v).empty())
            fixed.insert(v);
    return fixed;
}

bool HomInstance::is_frozen(const Hom & f) const
{
    return fixed_vertices(f).count() == source_order();
}

std::vector<Vertex> degeneracy_order(const HomInstance & inst)
{
    const std::size_t n = inst.source_order();
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v)
        degree[v] = inst.source_neighbours(v).size();
    std::vector<char> removed(n, 0);
    std::vector<Vertex> peel;
    peel.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool have = false;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (!have || degree[v] < degree[best])) {
                best = v;
                have = true;
            }
        removed[best] = 1;
        peel.push_back(best);
        for (Vertex u : inst.source_neighbours(best))
            if (!removed[u])
                --degree[u];
    }
    std::reverse(peel.begin(), peel.end());
    return peel;
}

namespace {

class Backtracker {
public:
    using ValueOrder = std::function<void(std::vector<Vertex> &)>;

    Backtracker(const HomInstance & inst, const Partial & partial, ValueOrder order)
        : inst_(inst), order_(degeneracy_order(inst)), value_order_(std::move(order))
    {
        const std::size_t n = inst.source_order();
        domain_.reserve(n);
        for (Vertex v = 0; v < n; ++v)
            domain_.push_back(inst.initial_domain(v));
        assigned_.assign(n, 0);
        image_.assign(n, 0);
        for (auto [v, c] : partial) {
            if (v >= n || c >= inst.target_order())
                throw std::invalid_argument("partial assignment out of range");
            VertexSet only(inst.target_order());
            if (domain_[v].contains(c))
                only.insert(c);
            domain_[v] = only;
        }
        for (auto [v, c] : partial)
            if (!filter_neighbours(v, c))
                consistent_ = false;
        trail_.clear();
    }

    /// visit returns false to stop the search.
    void run(const std::function<bool(const Hom &)> & visit)
    {
        if (!consistent_)
            return;
        for (const auto & d : domain_)
            if (d.empty())
                return;
        visit_ = &visit;
        dfs(0);
    }

private:
    bool filter_neighbours(Vertex v, Vertex c)
    {
        for (std::size_t j = 0; j < inst_.layer_count(); ++j)
            for (Vertex u : inst_.source(j).neighbours(v)) {
                if (u == v || assigned_[u])
                    continue;
                const auto & row = inst_.target_row(j, c);
                if (domain_[u].is_subset_of(row))
                    continue;
                trail_.emplace_back(u, domain_[u]);
                domain_[u] &= row;
                if (domain_[u].empty())
                    return false;
            }
        return true;
    }

    bool dfs(std::size_t depth)
    {
        if (depth == order_.size())
            return (*visit_)(Hom(image_));
        Vertex v = order_[depth];
        std::vector<Vertex> values = domain_[v].members();
        if (value_order_)
            value_order_(values);
        assigned_[v] = 1;
        for (Vertex c : values) {
            std::size_t mark = trail_.size();
            image_[v] = c;
            bool ok = filter_neighbours(v, c);
            bool keep_going = !ok || dfs(depth + 1);
            while (trail_.size() > mark) {
                domain_[trail_.back().first] = std::move(trail_.back().second);
                trail_.pop_back();
            }
            if (!keep_going) {
                assigned_[v] = 0;
                return false;
            }
        }
        assigned_[v] = 0;
        return true;
    }

    const HomInstance & inst_;
    std::vector<Vertex> order_;
    ValueOrder value_order_;
    std::vector<VertexSet> domain_;
    std::vector<char> assigned_;
    std::vector<Vertex> image_;
    std::vector<std::pair<Vertex, VertexSet>> trail_;
    const std::function<bool(const Hom &)> * visit_ = nullptr;
    bool consistent_ = true;
};

} // namespace

EnumerationResult enumerate_homs(const HomInstance & inst, const std::function<bool(const Hom &)> & emit,
                                 const Partial & partial, std::size_t cap)
{
    EnumerationResult result;
    Backtracker search(inst, partial, nullptr);
    std::function<bool(const Hom &)> visit = [&](const Hom & h) {
        if (result.emitted == cap) {
            result.truncated = true;
            return false;
        }
        ++result.emitted;
        return emit(h);
    };
    search.run(visit);
    return result;
}

HomList all_homs(const HomInstance & inst, const Partial & partial, std::size_t cap)
{
    HomList out;
    auto r = enumerate_homs(
        inst,
        [&](const Hom & h) {
            out.homs.push_back(h);
            return true;
        },
        partial, cap);
    out.truncated = r.truncated;
    return out;
}

std::optional<Hom> first_hom(const HomInstance & inst, const Partial & partial)
{
    std::optional<Hom> found;
    enumerate_homs(
        inst,
        [&](const Hom & h) {
            found = h;
            return false;
        },
        partial, 1);
    return found;
}

std::optional<Hom> random_hom(const HomInstance & inst, std::mt19937_64 & rng, const Partial & partial)
{
    std::optional<Hom> found;
    Backtracker search(inst, partial, [&](std::vector<Vertex> & values) { std::shuffle(values.begin(), values.end(), rng); });
    std::function<bool(const Hom &)> visit = [&](const Hom & h) {
        found = h;
        return false;
    };
    search.run(visit);
    return found;
}

StateCodec::StateCodec(std::size_t source_order, std::size_t target_order) : n_(source_order), bits_(1)
{
    while ((std::size_t{1} << bits_) < target_order)
        ++bits_;
}

std::string StateCodec::encode(const Hom & f) const
{
    std::string out((n_ * bits_ + 7) / 8, '\0');
    std::size_t pos = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        Vertex c = f.image[v];
        for (unsigned b = 0; b < bits_; ++b, ++pos)
            if ((c >> b) & 1u)
                out[pos >> 3] = static_cast<char>(static_cast<unsigned char>(out[pos >> 3]) | (1u << (pos & 7)));
    }
    return out;
}

Hom StateCodec::decode(const std::string & code) const
{
    Hom f(std::vector<Vertex>(n_, 0));
    std::size_t pos = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        Vertex c = 0;
        for (unsigned b = 0; b < bits_; ++b, ++pos)
            if ((static_cast<unsigned char>(code[pos >> 3]) >> (pos & 7)) & 1u)
                c |= Vertex{1} << b;
        f.image[v] = c;
    }
    return f;
}

ReconfigResult reconfigure_until(const HomInstance & inst, const Hom & from, const std::function<bool(const Hom &)> & goal,
                                 const SearchOptions & options)
{
    inst.check(from);
    ReconfigResult result;
    if (!inst.is_hom(from))
        throw std::invalid_argument("search start is not a homomorphism");
    StateCodec codec(inst.source_order(), inst.target_order());
    std::vector<std::string> states;
    std::vector<std::size_t> parent;
    std::unordered_map<std::string, std::size_t> seen;

    auto finish = [&](std::size_t idx) {
        ReconfigPath p;
        for (std::size_t i = idx;; i = parent[i]) {
            p.steps.push_back(codec.decode(states[i]));
            if (i == 0)
                break;
        }
        std::reverse(p.steps.begin(), p.steps.end());
        result.status = SearchStatus::found;
        result.path = std::move(p);
        result.states = states.size();
    };

    states.push_back(codec.encode(from));
    parent.push_back(0);
    seen.emplace(states.back(), 0);
    if (goal(from)) {
        finish(0);
        return result;
    }
    const VertexSet * movable = options.movable ? &*options.movable : nullptr;
    for (std::size_t head = 0; head < states.size(); ++head) {
        Hom f = codec.decode(states[head]);
        for (auto [v, c] : inst.moves(f, movable)) {
            Vertex old = f.image[v];
            f.image[v] = c;
            std::string code = codec.encode(f);
            if (!seen.contains(code)) {
                if (states.size() >= options.state_budget) {
                    result.status = SearchStatus::budget_exhausted;
                    result.states = states.size();
                    return result;
                }
                seen.emplace(code, states.size());
                states.push_back(std::move(code));
                parent.push_back(head);
                if (goal(f)) {
                    finish(states.size() - 1);
                    return result;
                }
            }
            f.image[v] = old;
        }
    }
    result.status = SearchStatus::none;
    result.states = states.size();
    return result;
}

ReconfigResult reconfigures(const HomInstance & inst, const Hom & from, const Hom & to, const SearchOptions & options)
{
    inst.check(to);
    if (!inst.is_hom(to))
        throw std::invalid_argument("search goal is not a homomorphism");
    if (options.movable)
        for (Vertex v = 0; v < inst.source_order(); ++v)
            if (!options.movable->contains(v) && from[v] != to[v])
                return {};
    return reconfigure_until(inst, from, [&](const Hom & h) { return h == to; }, options);
}

std::optional<std::string> path_defect(const HomInstance & inst, const ReconfigPath & path)
{
    if (path.steps.empty())
        return "empty path";
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const Hom & f = path.steps[i];
        if (f.size() != inst.source_order())
            return "step " + std::to_string(i) + " has the wrong size";
        for (Vertex c : f.image)
            if (c >= inst.target_order())
                return "step " + std::to_string(i) + " leaves the target";
        if (!inst.is_hom(f))
            return "step " + std::to_string(i) + " is not a homomorphism";
        if (i > 0 && !inst.adjacent(path.steps[i - 1], f))
            return "steps " + std::to_string(i - 1) + " and " + std::to_string(i) + " are not adjacent";
    }
    return std::nullopt;
}

bool is_valid_path(const HomInstance & inst, const ReconfigPath & path)
{
    return !path_defect(inst, path).has_value();
}

ReconfigPath normalise_path(const ReconfigPath & path)
{
    ReconfigPath out;
    if (path.steps.empty())
        return out;
    out.steps.push_back(path.steps.front());
    for (std::size_t i = 1; i < path.steps.size(); ++i) {
        const Hom & next = path.steps[i];
        Hom cur = out.steps.back();
        for (Vertex v = 0; v < next.size(); ++v)
            if (cur[v] != next[v]) {
                cur.image[v] = next[v];
                out.steps.push_back(cur);
            }
    }
    return out;
}

std::optional<std::size_t> HomGraph::index_of(const Hom & f) const
{
    auto it = index.find(f);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

HomGraph analyse_hom_graph(const HomInstance & inst, std::size_t cap)
{
    HomGraph out;
    auto list = all_homs(inst, {}, cap);
    out.homs = std::move(list.homs);
    out.truncated = list.truncated;
    for (std::size_t i = 0; i < out.homs.size(); ++i)
        out.index.emplace(out.homs[i], i);
    if (out.truncated)
        return out;
    DisjointSet sets(out.homs.size());
    for (std::size_t i = 0; i < out.homs.size(); ++i)
        for (const auto & g : inst.single_vertex_moves(out.homs[i]))
            sets.unite(i, out.index.at(g));
    std::unordered_map<std::size_t, std::size_t> id;
    out.component.resize(out.homs.size());
    for (std::size_t i = 0; i < out.homs.size(); ++i) {
        auto [it, fresh] = id.emplace(sets.find(i), id.size());
        out.component[i] = it->second;
    }
    out.component_count = id.size();
    return out;
}

std::optional<bool> is_mixing(const HomInstance & inst, std::size_t cap)
{
    auto hg = analyse_hom_graph(inst, cap);
    if (hg.truncated)
        return std::nullopt;
    return hg.component_count <= 1;
}

Component component_of(const HomInstance & inst, const Hom & f, std::size_t state_budget)
{
    if (!inst.is_hom(f))
        throw std::invalid_argument("not a homomorphism");
    Component out;
    std::unordered_map<Hom, char, HomHash> seen;
    out.members.push_back(f);
    seen.emplace(f, 0);
    for (std::size_t head = 0; head < out.members.size(); ++head)
        for (auto & g : inst.single_vertex_moves(out.members[head])) {
            if (seen.contains(g))
                continue;
            if (out.members.size() >= state_budget) {
                out.truncated = true;
                return out;
            }
            seen.emplace(g, 0);
            out.members.push_back(std::move(g));
        }
    return out;
}

namespace {

// Distances from members[source] within a fully known component.
std::vector<std::size_t> bfs_distances(const HomInstance & inst, const std::vector<Hom> & members,
                                       const std::unordered_map<Hom, std::size_t, HomHash> & index, std::size_t source)
{
    std::vector<std::size_t> dist(members.size(), static_cast<std::size_t>(-1));
    dist[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (const auto & g : inst.single_vertex_moves(members[i])) {
            std::size_t j = index.at(g);
            if (dist[j] == static_cast<std::size_t>(-1)) {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    return dist;
}

} // namespace

Diameter component_diameter(const HomInstance & inst, const Hom & f, std::size_t state_budget, std::size_t exact_limit)
{
    Diameter out;
    auto comp = component_of(inst, f, state_budget);
    if (comp.truncated) {
        out.truncated = true;
        return out;
    }
    std::unordered_map<Hom, std::size_t, HomHash> index;
    for (std::size_t i = 0; i < comp.members.size(); ++i)
        index.emplace(comp.members[i], i);
    if (comp.members.size() <= exact_limit) {
        for (std::size_t s = 0; s < comp.members.size(); ++s) {
            auto d = bfs_distances(inst, comp.members, index, s);
            out.value = std::max(out.value, *std::max_element(d.begin(), d.end()));
        }
        out.exact = true;
        return out;
    }
    auto d0 = bfs_distances(inst, comp.members, index, 0);
    std::size_t far = static_cast<std::size_t>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(inst, comp.members, index, far);
    out.value = *std::max_element(d1.begin(), d1.end());
    return out;
}

std::optional<VertexSet> frozen_vertices(const HomInstance & inst, const Hom & f, std::size_t state_budget)
{
    auto comp = component_of(inst, f, state_budget);
    if (comp.truncated)
        return std::nullopt;
    VertexSet frozen = VertexSet::full(inst.source_order());
    for (const auto & g : comp.members)
        for (Vertex v = 0; v < g.size(); ++v)
            if (g[v] != f[v] && frozen.contains(v))
                frozen.erase(v);
    return frozen;
}

} // namespace homreconf
