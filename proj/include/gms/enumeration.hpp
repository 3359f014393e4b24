#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gms/instance.hpp"

namespace gms {

struct EnumerationRequest {
    ProblemKind kind = ProblemKind::VertexCover;
    const StaticGraph* layer = nullptr;
    int k = 0;
    ElementSet forced;
    /// Maximum number of returned sets; defaults to default_enumeration_guard(kind, k).
    std::optional<std::uint64_t> guard;
};

/// 2^(k²+2k) for vc, 2^(5k+3) for pc, 3^k for ce, 2^k for ced; saturates at UINT64_MAX.
std::uint64_t default_enumeration_guard(ProblemKind kind, int k);

/// Solutions S ⊇ F with |S| <= k, covering every inclusion-minimal one.
///
/// vc/pc try every subset of the full kernel outside F; ce/ced branch on induced P3s.
/// Sets that strictly contain another returned set are dropped. Output is sorted.
/// Throws UnsupportedKind for other problems, PreconditionError when |F| > k, and
/// EnumerationOverflow when the guard is exceeded.
std::vector<ElementSet> enumerate_supersets(const EnumerationRequest& req);

} // namespace gms
