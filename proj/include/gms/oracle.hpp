#pragma once

#include <cstdint>
#include <optional>

#include "gms/solve.hpp"

namespace gms {

enum class CandidatePolicy {
    /// Every feasible set of size <= k.
    AllFeasible,
    /// Inclusion-minimal feasible sets plus all their supersets of size <= k.
    MinimalUpwardClosure,
};

inline constexpr std::uint64_t kDefaultOracleCap = 2'000'000;

struct OracleOptions {
    /// Candidate count limit per layer; defaults to oracle_cap_from_env().
    std::optional<std::uint64_t> cap;
    CandidatePolicy policy = CandidatePolicy::AllFeasible;
    /// Overrides the instance's local budget when set.
    std::optional<int> q;
};

/// GMS_ORACLE_CAP if set, otherwise kDefaultOracleCap. Throws Error on a malformed value.
std::uint64_t oracle_cap_from_env();

/// Exact solver for all nine problems by exhaustive enumeration.
///
/// Sequence problems: all feasible sets per layer, then a layered shortest path with arc
/// weight |S_{i+1} \ S_i| (arcs above q dropped when a local budget applies).
/// Single-set problems: every edge set F of size <= k (exactly k for matching) checked on
/// every layer. Throws OracleTooLarge when the candidate count exceeds the cap.
SolveResult oracle_solve(const ProblemInstance& inst, const OracleOptions& opt = {});

} // namespace gms
