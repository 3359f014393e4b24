#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gms/element.hpp"
#include "gms/graph.hpp"

namespace gms {

enum class ProblemKind {
    VertexCover,
    PathContraction,
    ClusterEditing,
    ClusterEdgeDeletion,
    DominatingSet,
    EdgeDominatingSet,
    StPath,
    StCut,
    Matching,
};

enum class Objective { AtMost, AtLeast };

struct ProblemTraits {
    ProblemKind kind;
    std::string_view name; ///< header token, e.g. "vc"
    ElementKind element_kind;
    bool monotone;
    Objective objective;
    /// StPath, StCut and Matching look for one edge set F used in every layer.
    bool single_set;
};

const ProblemTraits& traits(ProblemKind kind);
const std::vector<ProblemKind>& all_problem_kinds();
/// Throws ParseError (line 0) for unknown names.
ProblemKind problem_kind_from_name(std::string_view name);
inline std::string_view name_of(ProblemKind kind) { return traits(kind).name; }

struct Attributes {
    std::optional<Vertex> s;
    std::optional<Vertex> t;
    std::vector<int> colors;

    bool operator==(const Attributes&) const = default;
};

struct ProblemInstance {
    TemporalGraph graph;
    ProblemKind kind = ProblemKind::VertexCover;
    int k = 0;
    int ell = 0;
    std::optional<int> q;
    Attributes attrs;
    /// Human-readable legend lines; serialized as `#@` comments, not part of equality.
    std::vector<std::string> legend;

    std::size_t n() const { return graph.vertex_count(); }
    std::size_t tau() const { return graph.lifetime(); }

    /// Throws PreconditionError when the invariants on k, ell, q, s and t do not hold.
    void validate() const;

    bool operator==(const ProblemInstance& o) const {
        return graph == o.graph && kind == o.kind && k == o.k && ell == o.ell && q == o.q &&
               attrs == o.attrs;
    }
};

/// One element set per layer.
struct SolutionSequence {
    std::vector<ElementSet> sets;

    std::size_t size() const { return sets.size(); }
    /// Sum over i of |S_{i+1} \ S_i|.
    int insertion_total() const;
    /// |S_1| + insertion_total().
    int charge() const;

    bool operator==(const SolutionSequence&) const = default;
};

/// Replaces each layer with `count` extra edgeless layers inserted at `position`; keeps budgets.
ProblemInstance add_empty_layers(const ProblemInstance& inst, std::size_t position, std::size_t count);

} // namespace gms
