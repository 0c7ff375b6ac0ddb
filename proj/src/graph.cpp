#include "homreconf/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace homreconf {

namespace {

constexpr std::size_t dense_row_limit = 4096;

} // namespace

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (!rows_.empty())
        return rows_[u].contains(v);
    const auto & nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

bool Graph::has_loops() const
{
    return std::any_of(loops_.begin(), loops_.end(), [](char c) { return c != 0; });
}

VertexSet Graph::neighbourhood(Vertex v) const
{
    if (!rows_.empty())
        return rows_[v];
    VertexSet s(order());
    for (Vertex w : adj_[v])
        s.insert(w);
    return s;
}

std::optional<Vertex> Graph::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Vertex Graph::at(std::string_view label) const
{
    if (auto v = find(label))
        return *v;
    throw std::invalid_argument("unknown vertex label '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u <= v)
                out.push_back({u, v});
    return out;
}

std::vector<Vertex> Graph::tagged(std::string_view tag) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
        if (tags_[v] == tag)
            out.push_back(v);
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        add_vertex(std::to_string(i));
}

GraphBuilder::GraphBuilder(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        add_vertex(g.label(v), g.tag(v));
    for (Vertex v = 0; v < g.order(); ++v)
        adj_[v] = g.neighbours(v);
}

Vertex GraphBuilder::add_vertex(std::string label, std::string tag)
{
    if (label.empty() || label.find_first_of(" \t\r\n") != std::string::npos)
        throw std::invalid_argument("vertex labels must be non-empty and whitespace-free");
    auto v = static_cast<Vertex>(labels_.size());
    if (!index_.emplace(label, v).second)
        throw std::invalid_argument("duplicate vertex label '" + label + "'");
    labels_.push_back(std::move(label));
    tags_.push_back(std::move(tag));
    adj_.emplace_back();
    return v;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const
{
    const auto & nu = adj_.at(u);
    return std::find(nu.begin(), nu.end(), v) != nu.end();
}

bool GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (u >= labels_.size() || v >= labels_.size())
        throw std::out_of_range("edge endpoint is not a vertex");
    if (has_edge(u, v))
        return false;
    adj_[u].push_back(v);
    if (u != v)
        adj_[v].push_back(u);
    return true;
}

void GraphBuilder::add_new_edge(Vertex u, Vertex v)
{
    if (u >= labels_.size() || v >= labels_.size())
        throw std::out_of_range("edge endpoint is not a vertex");
    adj_[u].push_back(v);
    if (u != v)
        adj_[v].push_back(u);
}

bool GraphBuilder::add_edge(std::string_view u, std::string_view v)
{
    auto a = find(u), b = find(v);
    if (!a || !b)
        throw std::invalid_argument("edge refers to unknown vertex '" + std::string(a ? v : u) + "'");
    return add_edge(*a, *b);
}

void GraphBuilder::set_tag(Vertex v, std::string tag)
{
    tags_.at(v) = std::move(tag);
}

std::optional<Vertex> GraphBuilder::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.labels_ = labels_;
    g.tags_ = tags_;
    g.adj_ = adj_;
    g.index_ = index_;
    const std::size_t n = labels_.size();
    g.loops_.assign(n, 0);
    std::size_t twice = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto & nv = g.adj_[v];
        std::sort(nv.begin(), nv.end());
        for (Vertex w : nv) {
            if (w == v) {
                g.loops_[v] = 1;
                twice += 2;
            }
            else
                twice += 1;
        }
    }
    g.edge_count_ = twice / 2;
    if (n <= dense_row_limit) {
        g.rows_.assign(n, VertexSet(n));
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.adj_[v])
                g.rows_[v].insert(w);
    }
    return g;
}

EdgeColouredGraph::EdgeColouredGraph(std::vector<Graph> layers) : layers_(std::move(layers))
{
    if (layers_.empty())
        throw std::invalid_argument("an edge-coloured graph needs at least one layer");
    for (const auto & l : layers_)
        if (l.labels() != layers_.front().labels())
            throw std::invalid_argument("edge-coloured layers must share one vertex set");
}

} // namespace homreconf
