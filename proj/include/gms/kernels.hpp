#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gms/instance.hpp"

namespace gms {

enum class KernelVerdict { Kernelized, NoInstance };

struct RuleApplication {
    int rule = 0;
    std::string detail;
};

/// Per-layer full kernel.
///
/// Vertex cover: `kernel_graph` is a subgraph of the layer on the original ids.
/// Path contraction: `kernel_graph` is the quotient after contracting `contracted`;
/// each class is named by its smallest original id. `kept_edges` are the original
/// layer edges that survive, one per quotient edge.
struct KernelResult {
    KernelVerdict verdict = KernelVerdict::Kernelized;
    StaticGraph kernel_graph;
    std::vector<Vertex> kept_vertices;
    std::vector<Edge> kept_edges;
    std::vector<Edge> contracted;
    std::vector<RuleApplication> trace;

    bool no_instance() const { return verdict == KernelVerdict::NoInstance; }
};

/// Buss rules: drop isolated vertices, trim a vertex with more than k+1 incident edges to its
/// k+1 smallest ones, repeat; then reject if more than k²+2k vertices or k²+k edges remain.
KernelResult buss_kernel(const StaticGraph& layer, int k);

/// Contract bridges whose sides both have at least k+2 vertices (smallest such bridge first,
/// recomputed after every contraction); reject if a component keeps more than 5k+3 vertices.
KernelResult path_contraction_kernel(const StaticGraph& layer, int k);

/// Dispatch on VertexCover / PathContraction; throws UnsupportedKind otherwise.
KernelResult full_kernel(ProblemKind kind, const StaticGraph& layer, int k);

/// Candidate elements offered by the kernel: kept vertices (VC) or kept original edges (PC).
ElementSet kernel_universe(ProblemKind kind, const KernelResult& kr);

/// Property test against the kernel instead of the layer. For PC this contracts
/// S together with the rule-1 edges in `layer`.
bool satisfies_on_kernel(ProblemKind kind, const StaticGraph& layer, const KernelResult& kr, const ElementSet& S);

struct TemporalKernel {
    /// Empty when some layer kernel reports no_instance.
    std::optional<ProblemInstance> instance;
    /// Original id of every kernel vertex, ascending: kernel vertex j is original vertex `original_ids[j]`.
    std::vector<Vertex> original_ids;
    /// 1-based index of the first layer whose kernel rejected the instance, 0 if none.
    std::size_t rejecting_layer = 0;
};

/// Kernelizes every layer, takes W as the union of kept vertices, pads each layer with
/// W as isolated vertices and renumbers W densely in ascending original order.
TemporalKernel build_temporal_kernel(const ProblemInstance& inst);

} // namespace gms
