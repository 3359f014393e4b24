#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gms/instance.hpp"

namespace gms {

enum class Verdict { Yes, No, Timeout };

std::string_view to_string(Verdict v);

/// One guessed move of the backward search, both indices 1-based:
/// (x, 0) deletes the x-th element of the current set, (0, y) replaces the set by the
/// y-th enumerated superset.
struct GuessMove {
    int x = 0;
    int y = 0;

    bool operator==(const GuessMove&) const = default;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t enumerations = 0;
};

struct SolveResult {
    Verdict verdict = Verdict::No;
    std::optional<SolutionSequence> solution;
    std::vector<GuessMove> guesses;
    /// Forward solver: |S_1| + insertions of the sequence found, before budget repair.
    std::optional<int> charge;
    /// Oracle: least insertion total over all feasible sequences.
    std::optional<int> best_insertions;
    SolveStats stats;
    std::string note;

    bool yes() const { return verdict == Verdict::Yes; }
};

using Clock = std::chrono::steady_clock;

struct SolveOptions {
    bool memo = true;
    unsigned threads = 1;
    std::optional<Clock::time_point> deadline;
    /// Polled in the branch loop; setting it stops the search with a timeout verdict.
    const std::atomic<bool>* cancel = nullptr;
};

/// Search τ→1: carry the set while it works, otherwise delete elements and replace the set
/// by an enumerated superset, at most 2ℓ+k moves. vc, pc, ce and ced only.
SolveResult solve_backward(const ProblemInstance& inst, const SolveOptions& opt = {});

/// Search 1→τ on per-layer full kernels under the charge bound |S_1| + insertions <= k+ℓ,
/// then repair the budget form. vc and pc only.
SolveResult solve_forward(const ProblemInstance& inst, const SolveOptions& opt = {});

/// While the insertion total exceeds ℓ, take the first i with S_{i+1} \ S_i nonempty and add its
/// smallest such element to S_1..S_i. Requires |S_1| + insertions <= k+ℓ and |S_i| <= k;
/// throws PreconditionError otherwise. Feasibility is preserved for monotone problems.
SolutionSequence repair_budget(const SolutionSequence& sol, int k, int ell);

} // namespace gms
