#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gms/instance.hpp"

namespace gms {

/// A set system over elements 0..universe-1.
struct SetFamily {
    std::size_t universe = 0;
    std::vector<std::vector<std::size_t>> sets;
};

/// Maps a source certificate (0-based vertex, element or set indices) to a target solution.
/// Throws PreconditionError when the certificate is not valid for the source instance.
using WitnessBuilder = std::function<SolutionSequence(const std::vector<std::size_t>&)>;

struct ReductionOutput {
    ProblemInstance instance;
    std::map<std::string, std::int64_t> meta;
    WitnessBuilder witness;

    std::int64_t at(const std::string& key) const;
};

/// Clique (H, k̃) to global multistage vertex cover; certificate: a k̃-clique.
ReductionOutput clique_to_gm_vertex_cover(const StaticGraph& H, int kt);
/// Clique (H, k̃) to global multistage path contraction; certificate: a k̃-clique.
ReductionOutput clique_to_gm_path_contraction(const StaticGraph& H, int kt);
/// Clique (H, k̃) to global multistage cluster edge deletion; certificate: a k̃-clique.
ReductionOutput clique_to_gm_cluster_edge_deletion(const StaticGraph& H, int kt);

/// Dominating set (H, k') to planar dominating set with ℓ = 0; certificate: a dominating set.
ReductionOutput dominating_set_to_gm_planar_ds(const StaticGraph& H, int kp);
/// Set cover to edge dominating set on a star with ℓ = 0; certificate: chosen set indices.
ReductionOutput set_cover_to_gm_planar_eds(const SetFamily& family, int kt);
/// Multicolored clique to s-t-path; colors[v] in 0..k'-1. Certificate: one vertex per color.
ReductionOutput mcc_to_gm_st_path(const StaticGraph& H, const std::vector<int>& colors, int kp);
/// Plain clique to s-t-path through the color-copy graph; certificate: a k'-clique of H.
ReductionOutput clique_to_gm_st_path(const StaticGraph& H, int kp);
/// Hitting set to s-t-cut; certificate: a hitting set of elements.
ReductionOutput hitting_set_to_gm_st_cut(const SetFamily& family, int kp);
/// Independent set to matching; certificate: an independent set.
ReductionOutput independent_set_to_gm_matching(const StaticGraph& H, int kp);

/// k' copies of H, copy c colored c, edges between copies of adjacent vertices in different
/// copies. H has a k'-clique iff the copy graph has a multicolored one.
struct ColoredGraph {
    StaticGraph graph;
    std::vector<int> colors;
};
ColoredGraph clique_color_copies(const StaticGraph& H, int kp);

/// Registry used by the command line: names such as "clique-vc" and "hs-stcut".
struct ReductionInfo {
    std::string name;
    std::string source; ///< "graph", "colored-graph" or "sets"
    std::string summary;
};
const std::vector<ReductionInfo>& reduction_catalog();

} // namespace gms
