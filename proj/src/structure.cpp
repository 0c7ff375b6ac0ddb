#include "homreconf/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace homreconf {

bool is_bipartite(const Graph & g)
{
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                }
                else if (side[w] == side[u])
                    return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> components(const Graph & g)
{
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbours(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph & g)
{
    return g.order() > 0 && components(g).size() == 1;
}

std::optional<std::size_t> odd_girth(const Graph & g)
{
    // Shortest odd closed walk through each vertex, via BFS in the bipartite double cover.
    const std::size_t n = g.order();
    constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
    std::size_t best = unreached;
    std::vector<std::size_t> dist(2 * n);
    for (Vertex s = 0; s < n; ++s) {
        if (g.has_loop(s))
            return 1;
        std::fill(dist.begin(), dist.end(), unreached);
        dist[2 * s] = 0;
        std::deque<std::size_t> queue{2 * s};
        while (!queue.empty()) {
            std::size_t state = queue.front();
            queue.pop_front();
            if (dist[state] + 1 >= best)
                break;
            Vertex u = static_cast<Vertex>(state / 2);
            std::size_t parity = state % 2;
            for (Vertex w : g.neighbours(u)) {
                std::size_t next = 2 * w + (1 - parity);
                if (dist[next] == unreached) {
                    dist[next] = dist[state] + 1;
                    queue.push_back(next);
                }
            }
        }
        if (dist[2 * s + 1] < best)
            best = dist[2 * s + 1];
    }
    if (best == unreached)
        return std::nullopt;
    return best;
}

std::vector<Vertex> isolated_vertices(const Graph & g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            out.push_back(v);
    return out;
}

} // namespace homreconf
