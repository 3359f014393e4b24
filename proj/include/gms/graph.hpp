#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gms {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;

    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// Sorts and removes duplicates in place.
void normalize_edges(std::vector<Edge>& edges);

/// A simple undirected graph over vertices 0..n-1 with a sorted, duplicate-free edge list.
/// No adjacency structure is kept: reduction instances have thousands of sparse layers.
class StaticGraph {
public:
    StaticGraph() = default;
    StaticGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    bool has_edge(Edge e) const;
    bool has_edge(Vertex a, Vertex b) const { return a != b && has_edge(Edge(a, b)); }

    std::vector<std::vector<Vertex>> adjacency() const;
    std::vector<std::size_t> degrees() const;

    bool operator==(const StaticGraph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Fixed vertex set with an ordered sequence of edge-set layers. Immutable once built.
class TemporalGraph {
public:
    TemporalGraph() = default;
    /// Throws PreconditionError on self-loops, out-of-range endpoints, or an empty layer list.
    TemporalGraph(std::size_t n, std::vector<std::vector<Edge>> layers);

    std::size_t vertex_count() const { return n_; }
    std::size_t lifetime() const { return layers_.size(); }

    /// 0-based layer access.
    const StaticGraph& layer(std::size_t i) const { return layers_.at(i); }
    const std::vector<StaticGraph>& layers() const { return layers_; }
    const StaticGraph& underlying() const { return underlying_; }

    /// Recomputes the union of all layers and compares with the cached underlying graph.
    bool underlying_consistent() const;

    bool operator==(const TemporalGraph& o) const { return n_ == o.n_ && layers_ == o.layers_; }

private:
    std::size_t n_ = 0;
    std::vector<StaticGraph> layers_;
    StaticGraph underlying_;
};

/// Inserts `count` edgeless layers so that the first of them becomes layer `position`
/// (1-based, 1 <= position <= tau+1).
TemporalGraph add_empty_layers(const TemporalGraph& g, std::size_t position, std::size_t count);

/// Compresses a sparse set of vertex ids to 0..size-1.
class LocalIndex {
public:
    explicit LocalIndex(std::vector<Vertex> ids);

    std::size_t size() const { return ids_.size(); }
    /// Local index of `v`, or size() when absent.
    std::size_t find(Vertex v) const;
    std::size_t at(Vertex v) const;
    Vertex global(std::size_t local) const { return ids_[local]; }

private:
    std::vector<Vertex> ids_;
};

} // namespace gms
