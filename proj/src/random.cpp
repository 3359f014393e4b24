#include "gms/random.hpp"

#include <algorithm>

#include "gms/error.hpp"

namespace gms {

StaticGraph random_graph(Rng& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return StaticGraph(n, std::move(edges));
}

ProblemInstance random_instance(Rng& rng, const RandomSpec& spec) {
    if (spec.n_min > spec.n_max || spec.tau_min > spec.tau_max || spec.tau_min < 1 || spec.k_min > spec.k_max ||
        spec.ell_min > spec.ell_max || spec.k_min < 0 || spec.ell_min < 0)
        throw PreconditionError("empty random instance range");
    const bool st = spec.kind == ProblemKind::StPath || spec.kind == ProblemKind::StCut;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(spec.n_min, st ? 2 : 1),
                                                                     std::max<std::size_t>(spec.n_max, st ? 2 : 1))(rng);
    const std::size_t tau = std::uniform_int_distribution<std::size_t>(spec.tau_min, spec.tau_max)(rng);

    std::bernoulli_distribution flip(spec.churn);
    std::vector<std::vector<Edge>> layers;
    StaticGraph current = random_graph(rng, n, spec.edge_prob);
    layers.emplace_back(current.edges().begin(), current.edges().end());
    for (std::size_t i = 1; i < tau; ++i) {
        std::vector<Edge> next;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                bool present = current.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
                if (flip(rng))
                    present = !present;
                if (present)
                    next.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        current = StaticGraph(n, next);
        layers.push_back(std::move(next));
    }

    ProblemInstance inst;
    inst.graph = TemporalGraph(n, std::move(layers));
    inst.kind = spec.kind;
    inst.k = std::uniform_int_distribution<int>(spec.k_min, spec.k_max)(rng);
    inst.ell = std::uniform_int_distribution<int>(spec.ell_min, spec.ell_max)(rng);
    if (st) {
        inst.attrs.s = 0;
        inst.attrs.t = static_cast<Vertex>(n - 1);
    }
    return inst;
}

SetFamily random_set_family(Rng& rng, std::size_t universe, std::size_t count, std::size_t max_size) {
    if (universe == 0 || max_size == 0)
        throw PreconditionError("random set family needs a nonempty universe and max_size >= 1");
    SetFamily fam{universe, {}};
    std::vector<std::size_t> pool(universe);
    for (std::size_t i = 0; i < universe; ++i)
        pool[i] = i;
    for (std::size_t j = 0; j < count; ++j) {
        const auto size = std::uniform_int_distribution<std::size_t>(1, std::min(max_size, universe))(rng);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::size_t> member(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(member.begin(), member.end());
        fam.sets.push_back(std::move(member));
    }
    return fam;
}

} // namespace gms
