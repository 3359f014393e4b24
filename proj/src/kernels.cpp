#include "gms/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "gms/error.hpp"
#include "gms/problems.hpp"
#include "gms/union_find.hpp"

namespace gms {

namespace {

std::vector<Vertex> endpoints(std::span<const Edge> edges) {
    std::vector<Vertex> ids;
    ids.reserve(2 * edges.size());
    for (const Edge& e : edges) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

struct BridgeInfo {
    std::size_t edge; // index into the edge list
    std::size_t below; // vertices on the child side
    std::size_t component; // vertices in the whole component
};

/// Bridges of a simple graph on local vertices 0..n-1, iterative low-link DFS.
std::vector<BridgeInfo> find_bridges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n); // (neighbour, edge index)
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].first].emplace_back(edges[i].second, i);
        adj[edges[i].second].emplace_back(edges[i].first, i);
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, none), low(n, 0), sub(n, 1), parent_edge(n, none);
    std::vector<BridgeInfo> bridges;
    std::size_t clock = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (order[root] != none)
            continue;
        const std::size_t first_bridge = bridges.size();
        std::vector<Frame> stack{{root, 0}};
        order[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, ei] = adj[f.v][f.next++];
                if (ei == parent_edge[f.v])
                    continue;
                if (order[w] == none) {
                    order[w] = low[w] = clock++;
                    parent_edge[w] = ei;
                    stack.push_back({w, 0});
                } else {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
            } else {
                const std::size_t v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    const std::size_t u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    sub[u] += sub[v];
                    if (low[v] > order[u])
                        bridges.push_back({parent_edge[v], sub[v], 0});
                }
            }
        }
        for (std::size_t b = first_bridge; b < bridges.size(); ++b)
            bridges[b].component = sub[root];
    }
    return bridges;
}

} // namespace

KernelResult buss_kernel(const StaticGraph& layer, int k) {
    if (k < 0)
        throw PreconditionError("k must be non-negative");
    KernelResult kr;
    const auto edges = layer.edges();
    LocalIndex idx(endpoints(edges));
    std::vector<std::vector<std::size_t>> incident(idx.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[idx.at(edges[i].u)].push_back(i);
        incident[idx.at(edges[i].v)].push_back(i);
    }
    std::vector<char> alive(edges.size(), 1);
    const std::size_t isolated = layer.vertex_count() - idx.size();
    if (isolated > 0)
        kr.trace.push_back({1, "removed " + std::to_string(isolated) + " isolated vertices"});

    const auto limit = static_cast<std::size_t>(k) + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < idx.size(); ++x) {
            std::size_t seen = 0;
            std::size_t trimmed = 0;
            for (std::size_t ei : incident[x]) {
                if (!alive[ei])
                    continue;
                if (++seen > limit) {
                    alive[ei] = 0;
                    ++trimmed;
                }
            }
            if (trimmed > 0) {
                changed = true;
                kr.trace.push_back({2, "vertex " + std::to_string(idx.global(x)) + ": dropped " +
                                           std::to_string(trimmed) + " incident edges"});
            }
        }
        // Rule 1 is implicit: a vertex without alive edges is not kept.
    }

    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (alive[i])
            kept.push_back(edges[i]);
    kr.kept_vertices = endpoints(kept);
    const std::size_t dropped = idx.size() - kr.kept_vertices.size();
    if (dropped > 0)
        kr.trace.push_back({1, "removed " + std::to_string(dropped) + " vertices isolated by trimming"});

    const auto kk = static_cast<std::size_t>(k);
    if (kr.kept_vertices.size() > kk * kk + 2 * kk || kept.size() > kk * kk + kk) {
        kr.verdict = KernelVerdict::NoInstance;
        kr.trace.push_back({3, std::to_string(kr.kept_vertices.size()) + " vertices and " +
                                   std::to_string(kept.size()) + " edges exceed the bound"});
    }
    kr.kept_edges = kept;
    kr.kernel_graph = StaticGraph(layer.vertex_count(), std::move(kept));
    return kr;
}

KernelResult path_contraction_kernel(const StaticGraph& layer, int k) {
    if (k < 0)
        throw PreconditionError("k must be non-negative");
    KernelResult kr;
    const std::vector<Edge> edges(layer.edges().begin(), layer.edges().end());
    LocalIndex idx(endpoints(edges));
    UnionFind uf(idx.size());
    std::vector<char> contracted(edges.size(), 0);
    const auto side = static_cast<std::size_t>(k) + 2;

    // Quotient over current classes: class ids are dense, in order of first local member.
    std::vector<std::size_t> class_of(idx.size());
    std::vector<std::size_t> class_rep_local;
    std::vector<std::pair<std::size_t, std::size_t>> qedges;
    std::vector<std::size_t> qedge_source;
    auto build_quotient = [&] {
        class_rep_local.clear();
        std::vector<std::size_t> dense(idx.size(), static_cast<std::size_t>(-1));
        for (std::size_t x = 0; x < idx.size(); ++x) {
            auto r = uf.find(x);
            if (dense[r] == static_cast<std::size_t>(-1)) {
                dense[r] = class_rep_local.size();
                class_rep_local.push_back(x); // smallest local index = smallest original id
            }
            class_of[x] = dense[r];
        }
        qedges.clear();
        qedge_source.clear();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (contracted[i])
                continue;
            auto a = class_of[idx.at(edges[i].u)], b = class_of[idx.at(edges[i].v)];
            if (a == b)
                throw std::logic_error("path contraction kernel: contraction produced a loop");
            qedges.emplace_back(a, b);
            qedge_source.push_back(i);
        }
    };

    while (true) {
        build_quotient();
        std::size_t best = static_cast<std::size_t>(-1);
        for (const BridgeInfo& b : find_bridges(class_rep_local.size(), qedges))
            if (b.below >= side && b.component - b.below >= side)
                best = std::min(best, qedge_source[b.edge]);
        if (best == static_cast<std::size_t>(-1))
            break;
        contracted[best] = 1;
        uf.unite(idx.at(edges[best].u), idx.at(edges[best].v));
        kr.contracted.push_back(edges[best]);
        kr.trace.push_back({1, "contracted bridge " + edge_text(edges[best])});
    }

    std::vector<Edge> quotient;
    for (std::size_t q = 0; q < qedges.size(); ++q) {
        kr.kept_edges.push_back(edges[qedge_source[q]]);
        quotient.emplace_back(idx.global(class_rep_local[qedges[q].first]),
                              idx.global(class_rep_local[qedges[q].second]));
    }
    const std::size_t before = quotient.size();
    kr.kernel_graph = StaticGraph(layer.vertex_count(), quotient);
    if (kr.kernel_graph.edge_count() != before)
        throw std::logic_error("path contraction kernel: contraction produced parallel edges");
    kr.kept_vertices = endpoints(kr.kernel_graph.edges());
    std::sort(kr.contracted.begin(), kr.contracted.end());

    // Rule 2 on the quotient components.
    UnionFind comp(class_rep_local.size());
    for (auto [a, b] : qedges)
        comp.unite(a, b);
    const auto bound = 5 * static_cast<std::size_t>(k) + 3;
    for (std::size_t c = 0; c < class_rep_local.size(); ++c) {
        if (comp.find(c) == c && comp.component_size(c) > bound) {
            kr.verdict = KernelVerdict::NoInstance;
            kr.trace.push_back({2, "component of vertex " + std::to_string(idx.global(class_rep_local[c])) +
                                       " has " + std::to_string(comp.component_size(c)) + " vertices"});
            break;
        }
    }
    return kr;
}

KernelResult full_kernel(ProblemKind kind, const StaticGraph& layer, int k) {
    switch (kind) {
    case ProblemKind::VertexCover:
        return buss_kernel(layer, k);
    case ProblemKind::PathContraction:
        return path_contraction_kernel(layer, k);
    default:
        throw UnsupportedKind("no full kernel for " + std::string(name_of(kind)));
    }
}

ElementSet kernel_universe(ProblemKind kind, const KernelResult& kr) {
    ElementSet out;
    if (kind == ProblemKind::VertexCover) {
        for (Vertex v : kr.kept_vertices)
            out.push_back(Element::vertex(v));
    } else if (kind == ProblemKind::PathContraction) {
        for (const Edge& e : kr.kept_edges)
            out.push_back(Element::edge(e));
    } else {
        throw UnsupportedKind("no full kernel for " + std::string(name_of(kind)));
    }
    normalize(out);
    return out;
}

bool satisfies_on_kernel(ProblemKind kind, const StaticGraph& layer, const KernelResult& kr, const ElementSet& S) {
    if (kind == ProblemKind::VertexCover)
        return satisfies(kind, kr.kernel_graph, S);
    if (kind == ProblemKind::PathContraction) {
        ElementSet with = S;
        for (const Edge& e : kr.contracted)
            with.push_back(Element::edge(e));
        normalize(with);
        return satisfies(kind, layer, with);
    }
    throw UnsupportedKind("no full kernel for " + std::string(name_of(kind)));
}

TemporalKernel build_temporal_kernel(const ProblemInstance& inst) {
    if (inst.kind != ProblemKind::VertexCover && inst.kind != ProblemKind::PathContraction)
        throw UnsupportedKind("temporal kernel needs vc or pc, got " + std::string(name_of(inst.kind)));
    TemporalKernel out;
    std::vector<KernelResult> per_layer;
    per_layer.reserve(inst.tau());
    std::vector<Vertex> W;
    for (std::size_t i = 0; i < inst.tau(); ++i) {
        per_layer.push_back(full_kernel(inst.kind, inst.graph.layer(i), inst.k));
        if (per_layer.back().no_instance()) {
            out.rejecting_layer = i + 1;
            return out;
        }
        W.insert(W.end(), per_layer.back().kept_vertices.begin(), per_layer.back().kept_vertices.end());
    }
    LocalIndex map(std::move(W));
    out.original_ids.reserve(map.size());
    for (std::size_t j = 0; j < map.size(); ++j)
        out.original_ids.push_back(map.global(j));

    std::vector<std::vector<Edge>> layers(inst.tau());
    for (std::size_t i = 0; i < inst.tau(); ++i)
        for (const Edge& e : per_layer[i].kernel_graph.edges())
            layers[i].emplace_back(static_cast<Vertex>(map.at(e.u)), static_cast<Vertex>(map.at(e.v)));

    ProblemInstance kernel;
    kernel.graph = TemporalGraph(map.size(), std::move(layers));
    kernel.kind = inst.kind;
    kernel.k = inst.k;
    kernel.ell = inst.ell;
    kernel.q = inst.q;
    kernel.legend.push_back("temporal kernel of a " + std::to_string(inst.n()) + "-vertex instance");
    out.instance = std::move(kernel);
    return out;
}

} // namespace gms
