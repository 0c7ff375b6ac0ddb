#include "homreconf/frozen_search.hpp"
#include "homreconf/freezer.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace homreconf {

namespace {

constexpr std::size_t unassigned = static_cast<std::size_t>(-1);

class FrozenSearch {
public:
    FrozenSearch(const Graph & g, const Graph & h, const FrozenSearchOptions & options)
        : g_(g), inst_(g, h), options_(options), n_(g.order()), m_(h.order())
    {
        closed_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            closed_[v] = g.neighbours(v);
            if (!g.has_loop(v))
                closed_[v].insert(std::lower_bound(closed_[v].begin(), closed_[v].end(), v), v);
        }
        VertexSet allowed = VertexSet::full(m_);
        if (!g.has_loops())
            allowed = analyse_freezer(h).s_h;
        dom_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v)
            dom_.push_back(inst_.initial_domain(v) & allowed);
        reasons_.assign(n_, std::vector<std::vector<std::size_t>>(m_));
        colour_.assign(n_, 0);
        depth_of_.assign(n_, unassigned);
        open_in_scope_.resize(n_);
        for (Vertex w = 0; w < n_; ++w)
            open_in_scope_[w] = closed_[w].size();
    }

    FrozenSearchResult run()
    {
        FrozenSearchResult result;
        start_ = std::chrono::steady_clock::now();

        // Constraints whose scope is a single vertex act on the root domains.
        for (Vertex w = 0; w < n_; ++w)
            if (closed_[w].size() == 1) {
                VertexSet keep(m_);
                dom_[w].for_each([&](Vertex c) {
                    colour_[w] = c;
                    if (fixed(w))
                        keep.insert(c);
                });
                dom_[w] = keep;
            }
        for (Vertex v = 0; v < n_; ++v)
            if (dom_[v].empty())
                return result;

        var_at_.assign(n_, 0);
        values_.assign(n_, {});
        next_value_.assign(n_, 0);
        conflict_.assign(n_, VertexSet(n_ + 1));
        trail_start_.assign(n_ + 1, 0);

        std::size_t depth = 0;
        bool fresh = true;
        while (true) {
            if (depth == n_) {
                Hom f(colour_);
                if (!inst_.is_hom(f) || !inst_.is_frozen(f))
                    throw std::logic_error("frozen search produced an invalid witness");
                result.status = SearchStatus::found;
                result.witness = std::move(f);
                result.nodes = nodes_;
                return result;
            }
            if (fresh) {
                Vertex v = select();
                var_at_[depth] = v;
                values_[depth] = dom_[v].members();
                next_value_[depth] = 0;
                conflict_[depth] = VertexSet(n_ + 1);
            }
            fresh = false;
            Vertex v = var_at_[depth];
            bool advanced = false;
            while (next_value_[depth] < values_[depth].size()) {
                Vertex c = values_[depth][next_value_[depth]++];
                if (!dom_[v].contains(c))
                    continue;
                if (budget_hit()) {
                    result.status = SearchStatus::budget_exhausted;
                    result.nodes = nodes_;
                    return result;
                }
                ++nodes_;
                trail_start_[depth] = trail_.size();
                assign(v, c, depth);
                auto wiped = propagate(v, depth);
                if (!wiped) {
                    advanced = true;
                    break;
                }
                conflict_[depth] |= explanation(*wiped);
                conflict_[depth].erase(depth);
                undo_level(depth);
                unassign(v);
            }
            if (advanced) {
                ++depth;
                fresh = true;
                continue;
            }
            // Every value failed: jump to the latest depth involved in the failure.
            VertexSet jump = conflict_[depth] | explanation(v);
            jump.erase(depth);
            if (jump.empty()) {
                result.nodes = nodes_;
                return result;
            }
            std::size_t target = last_member(jump);
            for (std::size_t d = depth; d-- > target + 1;) {
                undo_level(d);
                unassign(var_at_[d]);
            }
            jump.erase(target);
            conflict_[target] |= jump;
            undo_level(target);
            unassign(var_at_[target]);
            depth = target;
        }
    }

private:
    struct Pruning {
        Vertex var;
        Vertex colour;
    };

    bool budget_hit() const
    {
        if (options_.node_budget != 0 && nodes_ >= options_.node_budget)
            return true;
        if ((nodes_ & 1023) == 0)
            return std::chrono::steady_clock::now() - start_ > options_.time_budget;
        return false;
    }

    static std::size_t last_member(const VertexSet & s)
    {
        std::size_t last = 0;
        s.for_each([&](Vertex d) { last = d; });
        return last;
    }

    // Smallest domain first, then largest degree, then smallest index.
    Vertex select() const
    {
        Vertex best = 0;
        bool have = false;
        for (Vertex v = 0; v < n_; ++v) {
            if (depth_of_[v] != unassigned)
                continue;
            if (!have) {
                best = v;
                have = true;
                continue;
            }
            std::size_t a = dom_[v].count(), b = dom_[best].count();
            if (a < b || (a == b && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    void assign(Vertex v, Vertex c, std::size_t depth)
    {
        colour_[v] = c;
        depth_of_[v] = depth;
        for (Vertex w : closed_[v])
            --open_in_scope_[w];
    }

    void unassign(Vertex v)
    {
        depth_of_[v] = unassigned;
        for (Vertex w : closed_[v])
            ++open_in_scope_[w];
    }

    void prune(Vertex u, Vertex c, std::vector<std::size_t> reason)
    {
        dom_[u].erase(c);
        reasons_[u][c] = std::move(reason);
        trail_.push_back({u, c});
    }

    void undo_level(std::size_t depth)
    {
        while (trail_.size() > trail_start_[depth]) {
            auto p = trail_.back();
            trail_.pop_back();
            dom_[p.var].insert(p.colour);
            reasons_[p.var][p.colour].clear();
        }
    }

    VertexSet explanation(Vertex u) const
    {
        VertexSet out(n_ + 1);
        for (Vertex c = 0; c < m_; ++c)
            for (std::size_t d : reasons_[u][c])
                out.insert(static_cast<Vertex>(d));
        return out;
    }

    // True iff w has no alternative colour given the current colours on its closed neighbourhood.
    bool fixed(Vertex w) const
    {
        VertexSet alt = inst_.initial_domain(w);
        for (Vertex u : g_.neighbours(w))
            alt &= inst_.target_row(0, u == w ? colour_[w] : colour_[u]);
        alt.erase(colour_[w]);
        return alt.empty();
    }

    std::optional<Vertex> propagate(Vertex v, std::size_t depth)
    {
        Vertex c = colour_[v];
        for (Vertex u : g_.neighbours(v)) {
            if (u == v || depth_of_[u] != unassigned)
                continue;
            VertexSet bad = dom_[u] - inst_.target_row(0, c);
            bad.for_each([&](Vertex x) { prune(u, x, {depth}); });
            if (dom_[u].empty())
                return u;
        }
        for (Vertex w : closed_[v]) {
            if (open_in_scope_[w] != 1)
                continue;
            Vertex open = 0;
            std::vector<std::size_t> reason;
            for (Vertex x : closed_[w]) {
                if (depth_of_[x] == unassigned)
                    open = x;
                else
                    reason.push_back(depth_of_[x]);
            }
            for (Vertex x : dom_[open].members()) {
                colour_[open] = x;
                if (!fixed(w))
                    prune(open, x, reason);
            }
            if (dom_[open].empty())
                return open;
        }
        return std::nullopt;
    }

    const Graph & g_;
    HomInstance inst_;
    FrozenSearchOptions options_;
    std::size_t n_;
    std::size_t m_;
    std::chrono::steady_clock::time_point start_;
    std::size_t nodes_ = 0;

    std::vector<std::vector<Vertex>> closed_;
    std::vector<VertexSet> dom_;
    std::vector<std::vector<std::vector<std::size_t>>> reasons_;
    std::vector<Vertex> colour_;
    std::vector<std::size_t> depth_of_;
    std::vector<std::size_t> open_in_scope_;

    std::vector<Vertex> var_at_;
    std::vector<std::vector<Vertex>> values_;
    std::vector<std::size_t> next_value_;
    std::vector<VertexSet> conflict_;
    std::vector<std::size_t> trail_start_;
    std::vector<Pruning> trail_;
};

} // namespace

FrozenSearchResult frozen_hom_search(const Graph & g, const Graph & h, const FrozenSearchOptions & options)
{
    if (g.order() == 0) {
        FrozenSearchResult r;
        r.status = SearchStatus::found;
        r.witness = Hom{};
        return r;
    }
    return FrozenSearch(g, h, options).run();
}

} // namespace homreconf
