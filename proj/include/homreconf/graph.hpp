#pragma once

#include "homreconf/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace homreconf {

struct Edge {
    Vertex u;
    Vertex v;  // u <= v; u == v is a loop

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

class GraphBuilder;

/// Finite undirected graph, loops allowed, no multi-edges. Immutable once built.
///
/// Every vertex has a label (unique within the graph) and an optional role tag.
/// Construction goes through GraphBuilder.
class Graph {
public:
    Graph() = default;

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const;
    bool has_loop(Vertex v) const { return loops_[v] != 0; }
    bool has_loops() const;

    /// Sorted neighbour list; contains v itself iff v has a loop.
    const std::vector<Vertex> & neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    /// Neighbourhood as a set (includes v iff v has a loop).
    VertexSet neighbourhood(Vertex v) const;

    const std::string & label(Vertex v) const { return labels_[v]; }
    const std::string & tag(Vertex v) const { return tags_[v]; }
    const std::vector<std::string> & labels() const { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    Vertex at(std::string_view label) const;

    /// All edges with u <= v, sorted.
    std::vector<Edge> edges() const;

    /// Vertices carrying the given tag, ascending.
    std::vector<Vertex> tagged(std::string_view tag) const;

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.labels_ == b.labels_ && a.tags_ == b.tags_ && a.adj_ == b.adj_;
    }

private:
    friend class GraphBuilder;

    std::vector<std::string> labels_;
    std::vector<std::string> tags_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> loops_;
    std::vector<VertexSet> rows_;  // dense rows for O(1) adjacency on desk-scale graphs
    std::unordered_map<std::string, Vertex> index_;
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    GraphBuilder() = default;
    /// Vertices labelled 0..n-1.
    explicit GraphBuilder(std::size_t n);
    /// Starts from an existing graph (labels, tags and edges copied).
    explicit GraphBuilder(const Graph & g);

    Vertex add_vertex(std::string label, std::string tag = {});
    /// Adds uv; repeated edges are ignored. Returns false if the edge already existed.
    bool add_edge(Vertex u, Vertex v);
    bool add_edge(std::string_view u, std::string_view v);
    /// Adds uv without the duplicate scan; the caller guarantees uv is new.
    void add_new_edge(Vertex u, Vertex v);
    void set_tag(Vertex v, std::string tag);

    std::size_t order() const { return labels_.size(); }
    bool has_edge(Vertex u, Vertex v) const;
    std::optional<Vertex> find(std::string_view label) const;

    Graph build() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::string> tags_;
    std::vector<std::vector<Vertex>> adj_;
    std::unordered_map<std::string, Vertex> index_;
};

/// Tuple of graphs sharing one labelled vertex set ("layers").
class EdgeColouredGraph {
public:
    explicit EdgeColouredGraph(std::vector<Graph> layers);

    std::size_t layer_count() const { return layers_.size(); }
    const Graph & layer(std::size_t i) const { return layers_.at(i); }
    const std::vector<Graph> & layers() const { return layers_; }
    std::size_t order() const { return layers_.front().order(); }
    const std::string & label(Vertex v) const { return layers_.front().label(v); }

    friend bool operator==(const EdgeColouredGraph &, const EdgeColouredGraph &) = default;

private:
    std::vector<Graph> layers_;
};

} // namespace homreconf
