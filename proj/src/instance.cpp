#include "gms/instance.hpp"

#include <array>

#include "gms/error.hpp"

namespace gms {

namespace {

constexpr std::array<ProblemTraits, 9> kTraits{{
    {ProblemKind::VertexCover, "vc", ElementKind::Vertex, true, Objective::AtMost, false},
    {ProblemKind::PathContraction, "pc", ElementKind::Edge, true, Objective::AtMost, false},
    {ProblemKind::ClusterEditing, "ce", ElementKind::Modification, false, Objective::AtMost, false},
    {ProblemKind::ClusterEdgeDeletion, "ced", ElementKind::Modification, false, Objective::AtMost, false},
    {ProblemKind::DominatingSet, "ds", ElementKind::Vertex, true, Objective::AtMost, false},
    {ProblemKind::EdgeDominatingSet, "eds", ElementKind::Edge, true, Objective::AtMost, false},
    {ProblemKind::StPath, "stpath", ElementKind::Edge, false, Objective::AtMost, true},
    {ProblemKind::StCut, "stcut", ElementKind::Edge, false, Objective::AtMost, true},
    {ProblemKind::Matching, "matching", ElementKind::Edge, false, Objective::AtLeast, true},
}};

} // namespace

const ProblemTraits& traits(ProblemKind kind) {
    return kTraits[static_cast<std::size_t>(kind)];
}

const std::vector<ProblemKind>& all_problem_kinds() {
    static const std::vector<ProblemKind> kinds = [] {
        std::vector<ProblemKind> out;
        for (const auto& t : kTraits)
            out.push_back(t.kind);
        return out;
    }();
    return kinds;
}

ProblemKind problem_kind_from_name(std::string_view name) {
    for (const auto& t : kTraits)
        if (t.name == name)
            return t.kind;
    throw ParseError(0, "unknown problem '" + std::string(name) + "'");
}

void ProblemInstance::validate() const {
    if (k < 0 || ell < 0)
        throw PreconditionError("k and ell must be non-negative");
    if (q && *q < 1)
        throw PreconditionError("q must be at least 1");
    bool needs_terminals = kind == ProblemKind::StPath || kind == ProblemKind::StCut;
    if (needs_terminals) {
        if (!attrs.s || !attrs.t)
            throw PreconditionError("s and t are required for " + std::string(name_of(kind)));
        if (*attrs.s == *attrs.t)
            throw PreconditionError("s and t must differ");
        if (*attrs.s >= n() || *attrs.t >= n())
            throw PreconditionError("vertex id out of range for s or t");
    } else if (attrs.s || attrs.t) {
        throw PreconditionError("s and t are only allowed for stpath and stcut");
    }
}

int SolutionSequence::insertion_total() const {
    int total = 0;
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
        total += static_cast<int>(difference_size(sets[i + 1], sets[i]));
    return total;
}

int SolutionSequence::charge() const {
    return (sets.empty() ? 0 : static_cast<int>(sets.front().size())) + insertion_total();
}

ProblemInstance add_empty_layers(const ProblemInstance& inst, std::size_t position, std::size_t count) {
    ProblemInstance out = inst;
    out.graph = add_empty_layers(inst.graph, position, count);
    return out;
}

} // namespace gms
