#pragma once

#include "homreconf/hom.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace homreconf::detail {

// Accumulates single-vertex steps starting from a given colouring.
struct Recorder {
    ReconfigPath path;

    explicit Recorder(const Hom & start) { path.steps.push_back(start); }

    const Hom & current() const { return path.steps.back(); }

    void set(Vertex v, Vertex c)
    {
        if (current()[v] == c)
            return;
        Hom next = current();
        next.image[v] = c;
        path.steps.push_back(std::move(next));
    }

    void follow(const ReconfigPath & p)
    {
        for (std::size_t i = 1; i < p.steps.size(); ++i)
            path.steps.push_back(p.steps[i]);
    }
};

// Recolours only the listed vertices, by breadth-first search, until goal holds.
inline void remix(const HomInstance & inst, Recorder & rec, const std::vector<Vertex> & movers,
                  const std::function<bool(const Hom &)> & goal)
{
    SearchOptions options;
    options.movable = VertexSet(inst.source_order());
    for (Vertex u : movers)
        options.movable->insert(u);
    auto res = reconfigure_until(inst, rec.current(), goal, options);
    if (res.status != SearchStatus::found)
        throw std::logic_error("a residual piece failed to reconfigure");
    rec.follow(*res.path);
}

// Same, with the goal of matching target on the listed vertices.
inline void remix_to(const HomInstance & inst, Recorder & rec, const std::vector<Vertex> & movers, const Hom & target)
{
    remix(inst, rec, movers, [&](const Hom & h) {
        for (Vertex u : movers)
            if (h[u] != target[u])
                return false;
        return true;
    });
}

} // namespace homreconf::detail
