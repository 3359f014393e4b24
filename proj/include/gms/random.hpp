#pragma once

#include <random>

#include "gms/instance.hpp"
#include "gms/reductions.hpp"

namespace gms {

using Rng = std::mt19937_64;

/// G(n, p).
StaticGraph random_graph(Rng& rng, std::size_t n, double p);

struct RandomSpec {
    ProblemKind kind = ProblemKind::VertexCover;
    std::size_t n_min = 2, n_max = 8;
    std::size_t tau_min = 1, tau_max = 5;
    int k_min = 0, k_max = 3;
    int ell_min = 0, ell_max = 3;
    double edge_prob = 0.3;
    /// Probability that a vertex pair flips between consecutive layers.
    double churn = 0.2;
};

/// Layer 1 is G(n, p); every later layer flips each pair of the previous one with
/// probability `churn`. s-t problems get s = 0 and t = n-1.
ProblemInstance random_instance(Rng& rng, const RandomSpec& spec);

/// `count` nonempty random subsets of 0..universe-1, each of size at most max_size.
SetFamily random_set_family(Rng& rng, std::size_t universe, std::size_t count, std::size_t max_size);

} // namespace gms
