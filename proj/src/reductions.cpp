#include "gms/reductions.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "gms/error.hpp"

namespace gms {

namespace {

using i64 = std::int64_t;

i64 choose2(i64 x) { return x * (x - 1) / 2; }

std::string range_text(std::size_t lo, std::size_t hi) {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

int checked_int(i64 value, const char* what) {
    if (value < 0 || value > std::numeric_limits<int>::max())
        throw PreconditionError(std::string(what) + " does not fit the instance format");
    return static_cast<int>(value);
}

void check_clique_source(const StaticGraph& H, int kt) {
    if (kt < 2)
        throw PreconditionError("clique size must be at least 2");
    if (H.vertex_count() == 0 || H.edge_count() == 0)
        throw PreconditionError("source graph is empty");
    if (static_cast<std::size_t>(kt) > H.vertex_count())
        throw PreconditionError("clique size exceeds the number of source vertices");
}

std::vector<char> membership(std::size_t n, const std::vector<std::size_t>& cert) {
    std::vector<char> in(n, 0);
    for (auto v : cert) {
        if (v >= n)
            throw PreconditionError("certificate names vertex " + std::to_string(v + 1) + " outside the source");
        if (in[v])
            throw PreconditionError("certificate repeats vertex " + std::to_string(v + 1));
        in[v] = 1;
    }
    return in;
}

std::vector<char> check_clique_certificate(const StaticGraph& H, int kt, const std::vector<std::size_t>& cert) {
    auto in = membership(H.vertex_count(), cert);
    if (cert.size() != static_cast<std::size_t>(kt))
        throw PreconditionError("certificate has " + std::to_string(cert.size()) + " vertices, expected " +
                                std::to_string(kt));
    for (std::size_t a = 0; a < cert.size(); ++a)
        for (std::size_t b = a + 1; b < cert.size(); ++b)
            if (!H.has_edge(static_cast<Vertex>(cert[a]), static_cast<Vertex>(cert[b])))
                throw PreconditionError("certificate is not a clique: " + std::to_string(cert[a] + 1) + " and " +
                                        std::to_string(cert[b] + 1) + " are not adjacent");
    return in;
}

void add_clique(std::vector<Edge>& out, Vertex first, std::size_t size) {
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
            out.emplace_back(first + static_cast<Vertex>(a), first + static_cast<Vertex>(b));
}

ElementSet vertices_of(const std::vector<Vertex>& vs) {
    ElementSet out;
    for (Vertex v : vs)
        out.push_back(Element::vertex(v));
    normalize(out);
    return out;
}

ProblemInstance make_instance(ProblemKind kind, std::size_t n, std::vector<std::vector<Edge>> layers, i64 k, i64 ell) {
    ProblemInstance inst;
    inst.graph = TemporalGraph(n, std::move(layers));
    inst.kind = kind;
    inst.k = checked_int(k, "k");
    inst.ell = checked_int(ell, "ell");
    return inst;
}

void base_meta(ReductionOutput& out) {
    out.meta["n"] = static_cast<i64>(out.instance.n());
    out.meta["tau"] = static_cast<i64>(out.instance.tau());
    out.meta["k"] = out.instance.k;
    out.meta["ell"] = out.instance.ell;
    out.meta["underlying_edges"] = static_cast<i64>(out.instance.graph.underlying().edge_count());
}

/// Shared numbers of the three Clique constructions.
struct CliqueShape {
    std::size_t n, m, kt;
    std::size_t reps;   // 8 k̃² n gadget layers before the closing one
    std::size_t gadget; // reps + 1

    explicit CliqueShape(const StaticGraph& H, int k)
        : n(H.vertex_count()), m(H.edge_count()), kt(static_cast<std::size_t>(k)), reps(8 * kt * kt * n),
          gadget(reps + 1) {}

    std::size_t tau() const { return 1 + m * gadget; }
    /// 0-based instance layer of gadget e, local layer r (r == reps is the closing layer).
    std::size_t layer(std::size_t e, std::size_t r) const { return 1 + e * gadget + r; }
    /// Source vertex served by local layer r < reps.
    std::size_t source(std::size_t r) const { return r % n; }
    i64 relocations() const {
        return static_cast<i64>(8 * m * kt * kt) * static_cast<i64>(n - kt);
    }
};

void gadget_meta(ReductionOutput& out, const CliqueShape& sh, std::size_t copy_set_size) {
    base_meta(out);
    out.meta["source_n"] = static_cast<i64>(sh.n);
    out.meta["source_m"] = static_cast<i64>(sh.m);
    out.meta["param"] = static_cast<i64>(sh.kt);
    out.meta["gadget_layers"] = static_cast<i64>(sh.gadget);
    out.meta["copy_set_size"] = static_cast<i64>(copy_set_size);
}

void gadget_legend(ProblemInstance& inst, const StaticGraph& H, const CliqueShape& sh) {
    for (std::size_t e = 0; e < sh.m; ++e) {
        const Edge& he = H.edges()[e];
        inst.legend.push_back("edge gadget {" + std::to_string(he.u + 1) + "," + std::to_string(he.v + 1) +
                              "}: layers " + range_text(sh.layer(e, 0) + 1, sh.layer(e, sh.reps) + 1));
    }
}

} // namespace

std::int64_t ReductionOutput::at(const std::string& key) const {
    auto it = meta.find(key);
    if (it == meta.end())
        throw PreconditionError("no metadata entry '" + key + "'");
    return it->second;
}

ReductionOutput clique_to_gm_vertex_cover(const StaticGraph& H, int kt) {
    check_clique_source(H, kt);
    const CliqueShape sh(H, kt);
    const std::size_t K = sh.kt;
    const std::size_t first = 4 * K * K + 2;
    const std::size_t copy = 4 * K;
    const std::size_t copy_base = first;
    const std::size_t center_base = copy_base + copy * sh.n;
    const std::size_t total = center_base + sh.m * sh.gadget;

    auto copy_vertex = [=](std::size_t i, std::size_t a) { return static_cast<Vertex>(copy_base + i * copy + a); };
    auto center = [=](std::size_t e, std::size_t r) { return static_cast<Vertex>(center_base + e * sh.gadget + r); };

    std::vector<std::vector<Edge>> layers(sh.tau());
    add_clique(layers[0], 0, first);
    for (std::size_t e = 0; e < sh.m; ++e) {
        const Edge he = H.edges()[e];
        for (std::size_t r = 0; r < sh.reps; ++r) {
            auto& L = layers[sh.layer(e, r)];
            for (std::size_t a = 0; a < copy; ++a)
                L.emplace_back(center(e, r), copy_vertex(sh.source(r), a));
        }
        auto& last = layers[sh.layer(e, sh.reps)];
        for (std::size_t a = 0; a < copy; ++a) {
            last.emplace_back(center(e, sh.reps), copy_vertex(he.u, a));
            last.emplace_back(center(e, sh.reps), copy_vertex(he.v, a));
        }
    }

    const i64 k = 4 * static_cast<i64>(K * K) + 1;
    const i64 ell = 4 * static_cast<i64>(K * K) + sh.relocations() + (static_cast<i64>(sh.m) - choose2(kt));
    ReductionOutput out;
    out.instance = make_instance(ProblemKind::VertexCover, total, std::move(layers), k, ell);
    out.instance.legend.push_back("clique to vertex cover, k~=" + std::to_string(kt));
    out.instance.legend.push_back("vertices " + range_text(0, first - 1) + ": first-layer clique");
    for (std::size_t i = 0; i < sh.n; ++i)
        out.instance.legend.push_back("copy set of source vertex " + std::to_string(i + 1) + ": " +
                                      range_text(copy_vertex(i, 0), copy_vertex(i, copy - 1)));
    out.instance.legend.push_back("centers: " + range_text(center_base, total - 1) + ", one block of " +
                                  std::to_string(sh.gadget) + " per source edge, closing center last");
    gadget_legend(out.instance, H, sh);
    gadget_meta(out, sh, copy);
    out.meta["first_layer_clique"] = static_cast<i64>(first);

    out.witness = [H, kt, sh, first, copy, copy_vertex, center](const std::vector<std::size_t>& cert) {
        const auto in = check_clique_certificate(H, kt, cert);
        std::vector<Vertex> base;
        for (auto c : cert)
            for (std::size_t a = 0; a < copy; ++a)
                base.push_back(copy_vertex(c, a));
        SolutionSequence sol;
        sol.sets.resize(sh.tau());
        std::vector<Vertex> s1;
        for (std::size_t v = 0; v + 1 < first; ++v)
            s1.push_back(static_cast<Vertex>(v));
        sol.sets[0] = vertices_of(s1);
        std::optional<Vertex> jump;
        auto emit = [&](std::size_t layer) {
            auto vs = base;
            if (jump)
                vs.push_back(*jump);
            sol.sets[layer] = vertices_of(vs);
        };
        for (std::size_t e = 0; e < sh.m; ++e) {
            const Edge he = H.edges()[e];
            for (std::size_t r = 0; r < sh.reps; ++r) {
                if (!in[sh.source(r)])
                    jump = center(e, r);
                emit(sh.layer(e, r));
            }
            if (!(in[he.u] && in[he.v]))
                jump = center(e, sh.reps);
            emit(sh.layer(e, sh.reps));
        }
        return sol;
    };
    return out;
}

ReductionOutput clique_to_gm_path_contraction(const StaticGraph& H, int kt) {
    check_clique_source(H, kt);
    const CliqueShape sh(H, kt);
    const std::size_t K = sh.kt;
    const std::size_t first = 4 * K * K + 4;
    const std::size_t path_edges = 4 * K;
    const std::size_t path_base = first;
    const std::size_t gadget_vertices = 2 * sh.reps + 4;
    const std::size_t gadget_base = path_base + sh.n * (path_edges + 1);
    const std::size_t total = gadget_base + sh.m * gadget_vertices;

    auto s_of = [=](std::size_t i) { return static_cast<Vertex>(path_base + i * (path_edges + 1)); };
    auto t_of = [=](std::size_t i) { return static_cast<Vertex>(path_base + i * (path_edges + 1) + path_edges); };
    auto gv = [=](std::size_t e, std::size_t off) { return static_cast<Vertex>(gadget_base + e * gadget_vertices + off); };
    auto w_of = [=](std::size_t e, std::size_t r) { return gv(e, 2 * r); };
    auto x_of = [=](std::size_t e, std::size_t r) { return gv(e, 2 * r + 1); };

    std::vector<Edge> paths;
    for (std::size_t i = 0; i < sh.n; ++i)
        for (std::size_t a = 0; a < path_edges; ++a)
            paths.emplace_back(s_of(i) + static_cast<Vertex>(a), s_of(i) + static_cast<Vertex>(a + 1));

    std::vector<std::vector<Edge>> layers(sh.tau(), paths);
    add_clique(layers[0], 0, first);
    for (std::size_t e = 0; e < sh.m; ++e) {
        const Edge he = H.edges()[e];
        for (std::size_t r = 0; r < sh.reps; ++r) {
            auto& L = layers[sh.layer(e, r)];
            const Vertex s = s_of(sh.source(r));
            L.emplace_back(w_of(e, r), s);
            L.emplace_back(s, x_of(e, r));
        }
        auto& last = layers[sh.layer(e, sh.reps)];
        const Vertex y1 = gv(e, 2 * sh.reps), y2 = y1 + 1, z1 = y1 + 2, z2 = y1 + 3;
        last.emplace_back(t_of(he.u), t_of(he.v));
        last.emplace_back(s_of(he.u), y1);
        last.emplace_back(y1, y2);
        last.emplace_back(s_of(he.u), z1);
        last.emplace_back(z1, z2);
    }

    const i64 k = 4 * static_cast<i64>(K * K) + 2;
    const i64 ell = 4 * static_cast<i64>(K * K) + sh.relocations() + (2 * static_cast<i64>(sh.m) - choose2(kt));
    ReductionOutput out;
    out.instance = make_instance(ProblemKind::PathContraction, total, std::move(layers), k, ell);
    out.instance.legend.push_back("clique to path contraction, k~=" + std::to_string(kt));
    out.instance.legend.push_back("vertices " + range_text(0, first - 1) + ": first-layer clique");
    for (std::size_t i = 0; i < sh.n; ++i)
        out.instance.legend.push_back("path of source vertex " + std::to_string(i + 1) + ": s=" +
                                      std::to_string(s_of(i)) + " .. t=" + std::to_string(t_of(i)));
    out.instance.legend.push_back("gadget vertices: " + range_text(gadget_base, total - 1) + ", blocks of " +
                                  std::to_string(gadget_vertices) + " (w,x pairs then y1 y2 z1 z2)");
    gadget_legend(out.instance, H, sh);
    gadget_meta(out, sh, path_edges);
    out.meta["first_layer_clique"] = static_cast<i64>(first);

    out.witness = [H, kt, sh, first, path_edges, s_of, t_of, gv, w_of](const std::vector<std::size_t>& cert) {
        const auto in = check_clique_certificate(H, kt, cert);
        ElementSet base;
        for (auto c : cert)
            for (std::size_t a = 0; a < path_edges; ++a)
                base.push_back(Element::edge(s_of(c) + static_cast<Vertex>(a), s_of(c) + static_cast<Vertex>(a + 1)));
        normalize(base);
        SolutionSequence sol;
        sol.sets.resize(sh.tau());
        // Spanning forest of the first clique with two trees.
        ElementSet s1;
        for (std::size_t j = 1; j + 2 < first; ++j)
            s1.push_back(Element::edge(0, static_cast<Vertex>(j)));
        s1.push_back(Element::edge(static_cast<Vertex>(first - 2), static_cast<Vertex>(first - 1)));
        normalize(s1);
        sol.sets[0] = std::move(s1);
        ElementSet jump;
        auto emit = [&](std::size_t layer) { sol.sets[layer] = set_union(base, jump); };
        for (std::size_t e = 0; e < sh.m; ++e) {
            const Edge he = H.edges()[e];
            for (std::size_t r = 0; r < sh.reps; ++r) {
                if (!in[sh.source(r)])
                    jump = {Element::edge(w_of(e, r), s_of(sh.source(r)))};
                emit(sh.layer(e, r));
            }
            if (in[he.u] && in[he.v]) {
                jump = {Element::edge(t_of(he.u), t_of(he.v))};
            } else {
                const Vertex y1 = gv(e, 2 * sh.reps);
                jump = make_set({Element::edge(s_of(he.u), y1), Element::edge(y1, y1 + 1)});
            }
            emit(sh.layer(e, sh.reps));
        }
        return sol;
    };
    return out;
}

ReductionOutput clique_to_gm_cluster_edge_deletion(const StaticGraph& H, int kt) {
    check_clique_source(H, kt);
    const CliqueShape sh(H, kt);
    const std::size_t K = sh.kt;
    const std::size_t p3 = 4 * K * K + 1;
    const std::size_t clique_size = 4 * K + 1;
    const std::size_t clique_base = 3 * p3;
    const std::size_t center_base = clique_base + sh.n * clique_size;
    const std::size_t total = center_base + sh.m * sh.reps;

    auto u_of = [=](std::size_t i) { return static_cast<Vertex>(clique_base + i * clique_size); };
    auto center = [=](std::size_t e, std::size_t r) { return static_cast<Vertex>(center_base + e * sh.reps + r); };

    std::vector<Edge> cliques;
    for (std::size_t i = 0; i < sh.n; ++i)
        add_clique(cliques, u_of(i), clique_size);
    std::vector<std::vector<Edge>> layers(sh.tau(), cliques);
    for (std::size_t j = 0; j < p3; ++j) {
        const auto a = static_cast<Vertex>(3 * j);
        layers[0].emplace_back(a, a + 1);
        layers[0].emplace_back(a + 1, a + 2);
    }
    for (std::size_t e = 0; e < sh.m; ++e) {
        const Edge he = H.edges()[e];
        for (std::size_t r = 0; r < sh.reps; ++r)
            layers[sh.layer(e, r)].emplace_back(center(e, r), u_of(sh.source(r)));
        layers[sh.layer(e, sh.reps)].emplace_back(u_of(he.u), u_of(he.v));
    }

    const i64 k = 4 * static_cast<i64>(K * K) + 1;
    const i64 ell = sh.relocations() + 4 * static_cast<i64>(K * K) + (static_cast<i64>(sh.m) - choose2(kt));
    ReductionOutput out;
    out.instance = make_instance(ProblemKind::ClusterEdgeDeletion, total, std::move(layers), k, ell);
    out.instance.legend.push_back("clique to cluster edge deletion, k~=" + std::to_string(kt));
    out.instance.legend.push_back("vertices " + range_text(0, clique_base - 1) + ": first-layer paths, middle vertex 3j+1");
    for (std::size_t i = 0; i < sh.n; ++i)
        out.instance.legend.push_back("clique of source vertex " + std::to_string(i + 1) + ": " +
                                      range_text(u_of(i), u_of(i) + static_cast<Vertex>(clique_size - 1)) +
                                      ", u=" + std::to_string(u_of(i)));
    out.instance.legend.push_back("centers: " + range_text(center_base, total - 1) + ", blocks of " +
                                  std::to_string(sh.reps) + " per source edge");
    gadget_legend(out.instance, H, sh);
    gadget_meta(out, sh, 4 * K);
    out.meta["first_layer_paths"] = static_cast<i64>(p3);

    out.witness = [H, kt, sh, p3, clique_size, u_of, center](const std::vector<std::size_t>& cert) {
        const auto in = check_clique_certificate(H, kt, cert);
        ElementSet base;
        for (auto c : cert)
            for (std::size_t a = 1; a < clique_size; ++a)
                base.push_back(Element::del(Edge(u_of(c), u_of(c) + static_cast<Vertex>(a))));
        normalize(base);
        SolutionSequence sol;
        sol.sets.resize(sh.tau());
        for (std::size_t j = 0; j < p3; ++j)
            sol.sets[0].push_back(Element::del(Edge(static_cast<Vertex>(3 * j), static_cast<Vertex>(3 * j + 1))));
        normalize(sol.sets[0]);
        ElementSet jump;
        auto emit = [&](std::size_t layer) { sol.sets[layer] = set_union(base, jump); };
        for (std::size_t e = 0; e < sh.m; ++e) {
            const Edge he = H.edges()[e];
            for (std::size_t r = 0; r < sh.reps; ++r) {
                if (!in[sh.source(r)])
                    jump = {Element::del(Edge(center(e, r), u_of(sh.source(r))))};
                emit(sh.layer(e, r));
            }
            if (!(in[he.u] && in[he.v]))
                jump = {Element::del(Edge(u_of(he.u), u_of(he.v)))};
            emit(sh.layer(e, sh.reps));
        }
        return sol;
    };
    return out;
}

ReductionOutput dominating_set_to_gm_planar_ds(const StaticGraph& H, int kp) {
    if (kp < 0)
        throw PreconditionError("parameter must be non-negative");
    const std::size_t n = H.vertex_count();
    if (n == 0)
        throw PreconditionError("source graph has no vertices");
    const auto w = static_cast<Vertex>(n), w2 = static_cast<Vertex>(n + 1);
    const auto adj = H.adjacency();
    std::vector<std::vector<Edge>> layers(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (Vertex u : adj[i])
            layers[i].emplace_back(static_cast<Vertex>(i), u);
        for (std::size_t u = 0; u < n; ++u)
            if (u != i)
                layers[i].emplace_back(w, static_cast<Vertex>(u));
        layers[i].emplace_back(w, w2);
    }
    ReductionOutput out;
    out.instance = make_instance(ProblemKind::DominatingSet, n + 2, std::move(layers), kp + 1, 0);
    out.instance.legend.push_back("dominating set to planar dominating set, k'=" + std::to_string(kp));
    out.instance.legend.push_back("vertices " + range_text(0, n - 1) + ": source vertices; w=" + std::to_string(w) +
                                  ", w'=" + std::to_string(w2));
    base_meta(out);
    out.meta["source_n"] = static_cast<i64>(n);
    out.meta["param"] = kp;

    out.witness = [H, kp, adj, w](const std::vector<std::size_t>& cert) {
        const auto in = membership(H.vertex_count(), cert);
        if (cert.size() > static_cast<std::size_t>(kp))
            throw PreconditionError("dominating set larger than the parameter");
        for (std::size_t v = 0; v < H.vertex_count(); ++v) {
            bool dominated = in[v] != 0;
            for (Vertex u : adj[v])
                dominated = dominated || in[u];
            if (!dominated)
                throw PreconditionError("certificate does not dominate vertex " + std::to_string(v + 1));
        }
        std::vector<Vertex> vs(cert.begin(), cert.end());
        vs.push_back(w);
        return SolutionSequence{std::vector<ElementSet>(H.vertex_count(), vertices_of(vs))};
    };
    return out;
}

ReductionOutput set_cover_to_gm_planar_eds(const SetFamily& family, int kt) {
    if (kt < 0)
        throw PreconditionError("parameter must be non-negative");
    const std::size_t n = family.universe;
    if (n == 0)
        throw PreconditionError("set cover universe is empty");
    std::vector<char> covered(n, 0);
    for (std::size_t j = 0; j < family.sets.size(); ++j) {
        if (family.sets[j].empty())
            throw PreconditionError("set " + std::to_string(j + 1) + " is empty");
        for (auto x : family.sets[j]) {
            if (x >= n)
                throw PreconditionError("set " + std::to_string(j + 1) + " names an element outside the universe");
            covered[x] = 1;
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!covered[x])
            throw PreconditionError("element " + std::to_string(x + 1) + " is in no set");

    const Vertex star = 0;
    auto element_vertex = [](std::size_t x) { return static_cast<Vertex>(x + 1); };
    auto set_vertex = [n](std::size_t j) { return static_cast<Vertex>(n + 1 + j); };
    std::vector<std::vector<Edge>> layers(n);
    for (std::size_t x = 0; x < n; ++x) {
        layers[x].emplace_back(star, element_vertex(x));
        for (std::size_t j = 0; j < family.sets.size(); ++j)
            if (std::find(family.sets[j].begin(), family.sets[j].end(), x) != family.sets[j].end())
                layers[x].emplace_back(star, set_vertex(j));
    }
    ReductionOutput out;
    out.instance = make_instance(ProblemKind::EdgeDominatingSet, n + 1 + family.sets.size(), std::move(layers), kt, 0);
    out.instance.legend.push_back("set cover to edge dominating set on a star, k~=" + std::to_string(kt));
    out.instance.legend.push_back("vertex 0: star center; elements 1.." + std::to_string(n) + "; sets from " +
                                  std::to_string(n + 1));
    base_meta(out);
    out.meta["source_universe"] = static_cast<i64>(n);
    out.meta["source_sets"] = static_cast<i64>(family.sets.size());
    out.meta["param"] = kt;

    out.witness = [family, kt, set_vertex](const std::vector<std::size_t>& cert) {
        const auto in = membership(family.sets.size(), cert);
        if (cert.size() > static_cast<std::size_t>(kt))
            throw PreconditionError("cover larger than the parameter");
        std::vector<char> hit(family.universe, 0);
        for (std::size_t j = 0; j < family.sets.size(); ++j)
            if (in[j])
                for (auto x : family.sets[j])
                    hit[x] = 1;
        for (std::size_t x = 0; x < family.universe; ++x)
            if (!hit[x])
                throw PreconditionError("certificate leaves element " + std::to_string(x + 1) + " uncovered");
        ElementSet F;
        for (auto j : cert)
            F.push_back(Element::edge(0, set_vertex(j)));
        normalize(F);
        return SolutionSequence{std::vector<ElementSet>(family.universe, F)};
    };
    return out;
}

ReductionOutput mcc_to_gm_st_path(const StaticGraph& H, const std::vector<int>& colors, int kp) {
    const std::size_t n = H.vertex_count();
    if (kp < 1)
        throw PreconditionError("number of colors must be at least 1");
    if (colors.size() != n)
        throw PreconditionError("coloring has " + std::to_string(colors.size()) + " entries for " +
                                std::to_string(n) + " vertices");
    for (int c : colors)
        if (c < 0 || c >= kp)
            throw PreconditionError("color " + std::to_string(c + 1) + " outside 1.." + std::to_string(kp));
    const auto s = static_cast<Vertex>(n), t = static_cast<Vertex>(n + 1);
    const auto K = static_cast<std::size_t>(kp);

    std::vector<std::vector<Edge>> layers;
    for (std::size_t c = 0; c < K; ++c) {
        std::vector<Edge> L;
        for (std::size_t v = 0; v < n; ++v)
            if (static_cast<std::size_t>(colors[v]) == c) {
                L.emplace_back(s, static_cast<Vertex>(v));
                L.emplace_back(static_cast<Vertex>(v), t);
            }
        layers.push_back(std::move(L));
    }
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = i + 1; j < K; ++j) {
            std::vector<Edge> L;
            for (std::size_t v = 0; v < n; ++v) {
                if (static_cast<std::size_t>(colors[v]) == i)
                    L.emplace_back(s, static_cast<Vertex>(v));
                if (static_cast<std::size_t>(colors[v]) == j)
                    L.emplace_back(static_cast<Vertex>(v), t);
            }
            for (const Edge& e : H.edges()) {
                auto cu = static_cast<std::size_t>(colors[e.u]), cv = static_cast<std::size_t>(colors[e.v]);
                if ((cu == i || cu == j) && (cv == i || cv == j))
                    L.push_back(e);
            }
            layers.push_back(std::move(L));
        }

    ReductionOutput out;
    out.instance = make_instance(ProblemKind::StPath, n + 2, std::move(layers), 2 * kp + choose2(kp), 0);
    out.instance.attrs.s = s;
    out.instance.attrs.t = t;
    out.instance.attrs.colors = colors;
    out.instance.legend.push_back("multicolored clique to s-t-path, k'=" + std::to_string(kp));
    out.instance.legend.push_back("layers 1.." + std::to_string(K) + ": one per color; then one per color pair");
    base_meta(out);
    out.meta["source_n"] = static_cast<i64>(n);
    out.meta["param"] = kp;

    out.witness = [H, colors, kp, s, t](const std::vector<std::size_t>& cert) {
        const auto in = membership(H.vertex_count(), cert);
        (void)in;
        if (cert.size() != static_cast<std::size_t>(kp))
            throw PreconditionError("certificate needs one vertex per color");
        std::vector<char> seen(static_cast<std::size_t>(kp), 0);
        for (auto v : cert) {
            auto c = static_cast<std::size_t>(colors[v]);
            if (seen[c])
                throw PreconditionError("certificate repeats color " + std::to_string(c + 1));
            seen[c] = 1;
        }
        ElementSet F;
        for (std::size_t a = 0; a < cert.size(); ++a) {
            const auto v = static_cast<Vertex>(cert[a]);
            F.push_back(Element::edge(s, v));
            F.push_back(Element::edge(v, t));
            for (std::size_t b = a + 1; b < cert.size(); ++b) {
                if (!H.has_edge(v, static_cast<Vertex>(cert[b])))
                    throw PreconditionError("certificate is not a clique");
                F.push_back(Element::edge(v, static_cast<Vertex>(cert[b])));
            }
        }
        normalize(F);
        const std::size_t tau = static_cast<std::size_t>(kp) + static_cast<std::size_t>(choose2(kp));
        return SolutionSequence{std::vector<ElementSet>(tau, F)};
    };
    return out;
}

ColoredGraph clique_color_copies(const StaticGraph& H, int kp) {
    if (kp < 1)
        throw PreconditionError("clique size must be at least 1");
    const std::size_t n = H.vertex_count();
    const auto K = static_cast<std::size_t>(kp);
    std::vector<Edge> edges;
    for (const Edge& e : H.edges())
        for (std::size_t c = 0; c < K; ++c)
            for (std::size_t d = 0; d < K; ++d)
                if (c != d)
                    edges.emplace_back(static_cast<Vertex>(c * n + e.u), static_cast<Vertex>(d * n + e.v));
    ColoredGraph out{StaticGraph(n * K, std::move(edges)), {}};
    for (std::size_t c = 0; c < K; ++c)
        for (std::size_t v = 0; v < n; ++v)
            out.colors.push_back(static_cast<int>(c));
    return out;
}

ReductionOutput clique_to_gm_st_path(const StaticGraph& H, int kp) {
    ColoredGraph cg = clique_color_copies(H, kp);
    ReductionOutput out = mcc_to_gm_st_path(cg.graph, cg.colors, kp);
    out.instance.legend.insert(out.instance.legend.begin(),
                               "color copies of a " + std::to_string(H.vertex_count()) +
                                   "-vertex graph: copy c holds ids c*n..c*n+n-1");
    out.meta["source_n"] = static_cast<i64>(H.vertex_count());
    WitnessBuilder inner = std::move(out.witness);
    const std::size_t n = H.vertex_count();
    out.witness = [H, kp, inner, n](const std::vector<std::size_t>& cert) {
        check_clique_certificate(H, kp, cert);
        std::vector<std::size_t> sorted = cert;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> colored;
        for (std::size_t c = 0; c < sorted.size(); ++c)
            colored.push_back(c * n + sorted[c]);
        return inner(colored);
    };
    return out;
}

ReductionOutput hitting_set_to_gm_st_cut(const SetFamily& family, int kp) {
    if (kp < 0)
        throw PreconditionError("parameter must be non-negative");
    if (family.sets.empty())
        throw PreconditionError("hitting set family is empty");
    const std::size_t U = family.universe;
    std::vector<std::vector<std::size_t>> members = family.sets;
    for (std::size_t j = 0; j < members.size(); ++j) {
        auto& m = members[j];
        if (m.empty())
            throw PreconditionError("member " + std::to_string(j + 1) + " is empty");
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        if (m.back() >= U)
            throw PreconditionError("member " + std::to_string(j + 1) + " names an element outside the universe");
    }
    auto v_of = [](std::size_t i) { return static_cast<Vertex>(2 * i); };
    auto w_of = [](std::size_t i) { return static_cast<Vertex>(2 * i + 1); };
    const auto s = static_cast<Vertex>(2 * U), t = static_cast<Vertex>(2 * U + 1);

    std::vector<std::vector<Edge>> layers;
    for (const auto& m : members) {
        std::vector<Edge> L;
        Vertex prev = s;
        for (auto i : m) {
            L.emplace_back(prev, v_of(i));
            L.emplace_back(v_of(i), w_of(i));
            prev = w_of(i);
        }
        L.emplace_back(prev, t);
        layers.push_back(std::move(L));
    }
    ReductionOutput out;
    out.instance = make_instance(ProblemKind::StCut, 2 * U + 2, std::move(layers), kp, 0);
    out.instance.attrs.s = s;
    out.instance.attrs.t = t;
    out.instance.legend.push_back("hitting set to s-t-cut, k'=" + std::to_string(kp));
    out.instance.legend.push_back("element i: v=2(i-1), w=2(i-1)+1; s=" + std::to_string(s) + ", t=" + std::to_string(t));
    base_meta(out);
    out.meta["source_universe"] = static_cast<i64>(U);
    out.meta["source_sets"] = static_cast<i64>(members.size());
    out.meta["param"] = kp;

    out.witness = [members, U, kp, v_of, w_of](const std::vector<std::size_t>& cert) {
        const auto in = membership(U, cert);
        if (cert.size() > static_cast<std::size_t>(kp))
            throw PreconditionError("hitting set larger than the parameter");
        for (std::size_t j = 0; j < members.size(); ++j)
            if (std::none_of(members[j].begin(), members[j].end(), [&](std::size_t x) { return in[x] != 0; }))
                throw PreconditionError("certificate misses member " + std::to_string(j + 1));
        ElementSet F;
        for (auto i : cert)
            F.push_back(Element::edge(v_of(i), w_of(i)));
        normalize(F);
        return SolutionSequence{std::vector<ElementSet>(members.size(), F)};
    };
    return out;
}

ReductionOutput independent_set_to_gm_matching(const StaticGraph& H, int kp) {
    if (kp < 0)
        throw PreconditionError("parameter must be non-negative");
    if (H.edge_count() == 0)
        throw PreconditionError("source graph has no edges, the construction would have no layers");
    const auto deg = H.degrees();
    for (std::size_t v = 0; v < deg.size(); ++v)
        if (deg[v] == 0)
            throw PreconditionError("source vertex " + std::to_string(v + 1) +
                                    " is isolated; its edge to the hub would appear in no layer");
    const auto c = static_cast<Vertex>(H.vertex_count());
    std::vector<std::vector<Edge>> layers;
    for (const Edge& e : H.edges())
        layers.push_back({Edge(e.u, c), Edge(e.v, c)});
    ReductionOutput out;
    out.instance = make_instance(ProblemKind::Matching, H.vertex_count() + 1, std::move(layers), kp, 0);
    out.instance.legend.push_back("independent set to matching, k'=" + std::to_string(kp));
    out.instance.legend.push_back("hub vertex c=" + std::to_string(c) + "; layer i holds source edge i");
    base_meta(out);
    out.meta["source_n"] = static_cast<i64>(H.vertex_count());
    out.meta["param"] = kp;

    out.witness = [H, kp, c](const std::vector<std::size_t>& cert) {
        const auto in = membership(H.vertex_count(), cert);
        if (cert.size() < static_cast<std::size_t>(kp))
            throw PreconditionError("independent set smaller than the parameter");
        for (const Edge& e : H.edges())
            if (in[e.u] && in[e.v])
                throw PreconditionError("certificate is not independent");
        ElementSet F;
        for (auto v : cert)
            F.push_back(Element::edge(static_cast<Vertex>(v), c));
        normalize(F);
        return SolutionSequence{std::vector<ElementSet>(H.edge_count(), F)};
    };
    return out;
}

const std::vector<ReductionInfo>& reduction_catalog() {
    static const std::vector<ReductionInfo> catalog{
        {"clique-vc", "graph", "clique to vertex cover"},
        {"clique-pc", "graph", "clique to path contraction"},
        {"clique-ced", "graph", "clique to cluster edge deletion"},
        {"ds-pds", "graph", "dominating set to planar dominating set"},
        {"sc-eds", "sets", "set cover to edge dominating set"},
        {"mcc-stpath", "colored-graph", "multicolored clique to s-t-path"},
        {"clique-stpath", "graph", "clique to s-t-path via color copies"},
        {"hs-stcut", "sets", "hitting set to s-t-cut"},
        {"is-matching", "graph", "independent set to matching"},
    };
    return catalog;
}

} // namespace gms
