#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gms/instance.hpp"

namespace gms {

/// True iff `S` has the problem's property in `layer`.
///
/// Edge-based problems only use S ∩ E(layer). For cluster editing a deletion of a
/// pair that is not a layer edge, or an addition of a pair that already is one, is
/// a no-op in that layer.
///
/// Throws UniverseError for elements of the wrong kind or with out-of-range vertices.
/// Membership in the underlying graph is checked by verify_solution, which knows it.
bool satisfies(ProblemKind kind, const StaticGraph& layer, const ElementSet& S, const Attributes& attrs = {});

/// Result of contracting `contract ∩ E(layer)` in `layer`, dropping loops and parallel edges.
/// Vertices of the quotient are named by the smallest original id of their class.
StaticGraph contract_edges(const StaticGraph& layer, const std::vector<Edge>& contract);

bool in_universe(const ProblemInstance& inst, const Element& e);
/// All elements a solution set may contain, in canonical order.
ElementSet element_universe(const ProblemInstance& inst);

struct VerifyReport {
    bool accepted = false;
    std::vector<bool> layer_satisfied;
    std::vector<bool> layer_size_ok;
    int insertion_total = 0;
    bool budget_ok = false;
    /// Set only when the instance carries a q-local budget.
    std::optional<bool> local_budget_ok;
    std::vector<std::string> failures;

    std::string summary() const;
};

/// Checks every layer, the size bound (at least k for Matching), the insertion budget,
/// and the q-local budget when present. Single-set problems must repeat one set.
/// Throws PreconditionError when the sequence length differs from tau.
VerifyReport verify_solution(const ProblemInstance& inst, const SolutionSequence& sol);

/// True iff no S' with F ⊆ S' ⊊ S satisfies the property. Exact subset enumeration,
/// limited to |S \ F| <= 12. Throws PreconditionError when F ⊄ S or the limit is exceeded.
bool is_minimal(ProblemKind kind, const StaticGraph& layer, const ElementSet& S, const ElementSet& F,
                const Attributes& attrs = {});

inline constexpr std::size_t kMinimalityLimit = 12;

} // namespace gms
