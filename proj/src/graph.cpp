#include "gms/graph.hpp"

#include <algorithm>
#include <string>

#include "gms/error.hpp"

namespace gms {

void normalize_edges(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

StaticGraph::StaticGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
        if (e.u == e.v)
            throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= n_)
            throw PreconditionError("vertex id out of range: " + std::to_string(e.v));
    }
    normalize_edges(edges_);
}

bool StaticGraph::has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<Vertex>> StaticGraph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::vector<std::size_t> StaticGraph::degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

TemporalGraph::TemporalGraph(std::size_t n, std::vector<std::vector<Edge>> layers) : n_(n) {
    if (layers.empty())
        throw PreconditionError("temporal graph needs at least one layer");
    layers_.reserve(layers.size());
    std::vector<Edge> all;
    for (auto& edges : layers) {
        layers_.emplace_back(n, std::move(edges));
        auto span = layers_.back().edges();
        all.insert(all.end(), span.begin(), span.end());
    }
    normalize_edges(all);
    underlying_ = StaticGraph(n, std::move(all));
}

bool TemporalGraph::underlying_consistent() const {
    std::vector<Edge> all;
    for (const auto& layer : layers_)
        all.insert(all.end(), layer.edges().begin(), layer.edges().end());
    normalize_edges(all);
    return std::equal(all.begin(), all.end(), underlying_.edges().begin(), underlying_.edges().end());
}

TemporalGraph add_empty_layers(const TemporalGraph& g, std::size_t position, std::size_t count) {
    if (position < 1 || position > g.lifetime() + 1)
        throw PreconditionError("layer position out of range: " + std::to_string(position));
    std::vector<std::vector<Edge>> layers;
    layers.reserve(g.lifetime() + count);
    for (std::size_t i = 0; i < g.lifetime(); ++i) {
        if (i + 1 == position)
            layers.insert(layers.end(), count, std::vector<Edge>{});
        auto span = g.layer(i).edges();
        layers.emplace_back(span.begin(), span.end());
    }
    if (position == g.lifetime() + 1)
        layers.insert(layers.end(), count, std::vector<Edge>{});
    return TemporalGraph(g.vertex_count(), std::move(layers));
}

LocalIndex::LocalIndex(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

std::size_t LocalIndex::find(Vertex v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        return ids_.size();
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t LocalIndex::at(Vertex v) const {
    std::size_t i = find(v);
    if (i == ids_.size())
        throw PreconditionError("vertex " + std::to_string(v) + " not in local index");
    return i;
}

} // namespace gms
