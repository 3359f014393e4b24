#include "gms/problems.hpp"

#include <algorithm>
#include <deque>

#include "gms/error.hpp"
#include "gms/union_find.hpp"

namespace gms {

namespace {

void check_elements(ProblemKind kind, const StaticGraph& layer, const ElementSet& S) {
    const auto& tr = traits(kind);
    const std::size_t n = layer.vertex_count();
    for (const Element& e : S) {
        if (e.kind != tr.element_kind)
            throw UniverseError("element " + to_string(e) + " outside universe of " + std::string(tr.name));
        if (e.u >= n || (e.kind != ElementKind::Vertex && (e.v >= n || e.u >= e.v)))
            throw UniverseError("element " + to_string(e) + " outside universe: vertex id out of range");
        if (kind == ProblemKind::ClusterEdgeDeletion && e.op != ModOp::Del)
            throw UniverseError("element " + to_string(e) + " outside universe: cluster edge deletion only deletes");
    }
}

bool contains_vertex(const ElementSet& S, Vertex v) { return contains(S, Element::vertex(v)); }

/// Layer edges that are also elements of S.
std::vector<Edge> active_edges(const StaticGraph& layer, const ElementSet& S) {
    std::vector<Edge> out;
    for (const Element& e : S)
        if (layer.has_edge(e.pair()))
            out.push_back(e.pair());
    return out;
}

bool reachable(const std::vector<Edge>& edges, Vertex s, Vertex t) {
    std::vector<Vertex> ids{s, t};
    for (const Edge& e : edges) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    LocalIndex idx(std::move(ids));
    std::vector<std::vector<std::size_t>> adj(idx.size());
    for (const Edge& e : edges) {
        adj[idx.at(e.u)].push_back(idx.at(e.v));
        adj[idx.at(e.v)].push_back(idx.at(e.u));
    }
    std::vector<char> seen(idx.size(), 0);
    std::deque<std::size_t> queue{idx.at(s)};
    seen[idx.at(s)] = 1;
    const std::size_t target = idx.at(t);
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        if (x == target)
            return true;
        for (auto y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
    }
    return false;
}

bool is_vertex_cover(const StaticGraph& layer, const ElementSet& S) {
    for (const Edge& e : layer.edges())
        if (!contains_vertex(S, e.u) && !contains_vertex(S, e.v))
            return false;
    return true;
}

bool is_dominating_set(const StaticGraph& layer, const ElementSet& S) {
    std::vector<char> dom(layer.vertex_count(), 0);
    for (const Element& e : S)
        dom[e.u] = 1;
    for (const Edge& e : layer.edges()) {
        if (contains_vertex(S, e.u))
            dom[e.v] = 1;
        if (contains_vertex(S, e.v))
            dom[e.u] = 1;
    }
    return std::all_of(dom.begin(), dom.end(), [](char c) { return c != 0; });
}

bool is_edge_dominating_set(const StaticGraph& layer, const ElementSet& S) {
    std::vector<Vertex> ends;
    for (const Edge& e : active_edges(layer, S)) {
        ends.push_back(e.u);
        ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    auto covered = [&](Vertex x) { return std::binary_search(ends.begin(), ends.end(), x); };
    for (const Edge& e : layer.edges())
        if (!covered(e.u) && !covered(e.v))
            return false;
    return true;
}

bool is_matching(const StaticGraph& layer, const ElementSet& S) {
    std::vector<Vertex> ends;
    for (const Edge& e : active_edges(layer, S)) {
        ends.push_back(e.u);
        ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool is_disjoint_union_of_paths(const StaticGraph& g) {
    std::vector<Vertex> ids;
    for (const Edge& e : g.edges()) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    LocalIndex idx(std::move(ids));
    std::vector<int> deg(idx.size(), 0);
    UnionFind uf(idx.size());
    for (const Edge& e : g.edges()) {
        auto a = idx.at(e.u), b = idx.at(e.v);
        if (++deg[a] > 2 || ++deg[b] > 2)
            return false;
        if (!uf.unite(a, b))
            return false; // cycle
    }
    return true;
}

bool is_path_contraction_set(const StaticGraph& layer, const ElementSet& S) {
    return is_disjoint_union_of_paths(contract_edges(layer, active_edges(layer, S)));
}

/// Edges present after applying modifications S to the layer.
std::vector<Edge> apply_modifications(const StaticGraph& layer, const ElementSet& S) {
    std::vector<Edge> out;
    for (const Edge& e : layer.edges())
        if (!contains(S, Element::del(e)))
            out.push_back(e);
    for (const Element& m : S)
        if (m.op == ModOp::Add && !layer.has_edge(m.pair()))
            out.push_back(m.pair());
    return out;
}

bool is_cluster_graph(const std::vector<Edge>& edges) {
    std::vector<Vertex> ids;
    for (const Edge& e : edges) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    LocalIndex idx(std::move(ids));
    UnionFind uf(idx.size());
    for (const Edge& e : edges)
        uf.unite(idx.at(e.u), idx.at(e.v));
    std::vector<std::size_t> edge_count(idx.size(), 0);
    for (const Edge& e : edges)
        ++edge_count[uf.find(idx.at(e.u))];
    for (std::size_t x = 0; x < idx.size(); ++x) {
        if (uf.find(x) != x)
            continue;
        std::size_t c = uf.component_size(x);
        if (edge_count[x] != c * (c - 1) / 2)
            return false;
    }
    return true;
}

} // namespace

StaticGraph contract_edges(const StaticGraph& layer, const std::vector<Edge>& contract) {
    std::vector<Vertex> ids;
    for (const Edge& e : layer.edges()) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    LocalIndex idx(std::move(ids));
    UnionFind uf(idx.size());
    for (const Edge& e : contract)
        if (layer.has_edge(e))
            uf.unite(idx.at(e.u), idx.at(e.v));
    // Representative: smallest original id in the class; ids are sorted so the smallest local index wins.
    std::vector<Vertex> rep(idx.size());
    std::vector<std::size_t> min_local(idx.size(), idx.size());
    for (std::size_t x = 0; x < idx.size(); ++x) {
        auto r = uf.find(x);
        min_local[r] = std::min(min_local[r], x);
    }
    for (std::size_t x = 0; x < idx.size(); ++x)
        rep[x] = idx.global(min_local[uf.find(x)]);
    std::vector<Edge> out;
    for (const Edge& e : layer.edges()) {
        Vertex a = rep[idx.at(e.u)], b = rep[idx.at(e.v)];
        if (a != b)
            out.emplace_back(a, b);
    }
    return StaticGraph(layer.vertex_count(), std::move(out));
}

bool satisfies(ProblemKind kind, const StaticGraph& layer, const ElementSet& S, const Attributes& attrs) {
    check_elements(kind, layer, S);
    switch (kind) {
    case ProblemKind::VertexCover:
        return is_vertex_cover(layer, S);
    case ProblemKind::DominatingSet:
        return is_dominating_set(layer, S);
    case ProblemKind::EdgeDominatingSet:
        return is_edge_dominating_set(layer, S);
    case ProblemKind::PathContraction:
        return is_path_contraction_set(layer, S);
    case ProblemKind::ClusterEditing:
    case ProblemKind::ClusterEdgeDeletion:
        return is_cluster_graph(apply_modifications(layer, S));
    case ProblemKind::StPath:
    case ProblemKind::StCut: {
        if (!attrs.s || !attrs.t)
            throw PreconditionError("s and t are required");
        if (kind == ProblemKind::StPath)
            return reachable(active_edges(layer, S), *attrs.s, *attrs.t);
        std::vector<Edge> rest;
        for (const Edge& e : layer.edges())
            if (!contains(S, Element::edge(e)))
                rest.push_back(e);
        return !reachable(rest, *attrs.s, *attrs.t);
    }
    case ProblemKind::Matching:
        return is_matching(layer, S);
    }
    return false;
}

bool in_universe(const ProblemInstance& inst, const Element& e) {
    const auto& tr = traits(inst.kind);
    const std::size_t n = inst.n();
    if (e.kind != tr.element_kind || e.u >= n)
        return false;
    if (e.kind == ElementKind::Vertex)
        return true;
    if (e.v >= n || e.u >= e.v)
        return false;
    const auto& under = inst.graph.underlying();
    if (e.kind == ElementKind::Edge)
        return under.has_edge(e.pair());
    if (e.op == ModOp::Del)
        return under.has_edge(e.pair());
    return inst.kind == ProblemKind::ClusterEditing;
}

ElementSet element_universe(const ProblemInstance& inst) {
    ElementSet out;
    const auto& tr = traits(inst.kind);
    const auto n = static_cast<Vertex>(inst.n());
    switch (tr.element_kind) {
    case ElementKind::Vertex:
        for (Vertex v = 0; v < n; ++v)
            out.push_back(Element::vertex(v));
        break;
    case ElementKind::Edge:
        for (const Edge& e : inst.graph.underlying().edges())
            out.push_back(Element::edge(e));
        break;
    case ElementKind::Modification:
        for (const Edge& e : inst.graph.underlying().edges())
            out.push_back(Element::del(e));
        if (inst.kind == ProblemKind::ClusterEditing)
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b)
                    out.push_back(Element::add(Edge(a, b)));
        break;
    }
    normalize(out);
    return out;
}

std::string VerifyReport::summary() const {
    std::string out = accepted ? "ACCEPT" : "REJECT";
    out += " insertions=" + std::to_string(insertion_total);
    for (const auto& f : failures)
        out += "\n  " + f;
    return out;
}

VerifyReport verify_solution(const ProblemInstance& inst, const SolutionSequence& sol) {
    const std::size_t tau = inst.tau();
    if (sol.size() != tau)
        throw PreconditionError("solution has " + std::to_string(sol.size()) + " sets, expected " +
                                std::to_string(tau));
    const auto& tr = traits(inst.kind);
    VerifyReport rep;
    rep.layer_satisfied.assign(tau, false);
    rep.layer_size_ok.assign(tau, false);

    for (std::size_t i = 0; i < tau; ++i) {
        const ElementSet& S = sol.sets[i];
        const std::string where = "layer " + std::to_string(i + 1) + ": ";
        auto bad = std::find_if(S.begin(), S.end(), [&](const Element& e) { return !in_universe(inst, e); });
        if (bad != S.end()) {
            rep.failures.push_back(where + "element " + to_string(*bad) + " outside universe");
        } else if (satisfies(inst.kind, inst.graph.layer(i), S, inst.attrs)) {
            rep.layer_satisfied[i] = true;
        } else {
            rep.failures.push_back(where + "property not satisfied");
        }

        const auto size = static_cast<int>(S.size());
        if (tr.objective == Objective::AtMost) {
            rep.layer_size_ok[i] = size <= inst.k;
            if (!rep.layer_size_ok[i])
                rep.failures.push_back(where + "size " + std::to_string(size) + " > k=" + std::to_string(inst.k));
        } else {
            rep.layer_size_ok[i] = size >= inst.k;
            if (!rep.layer_size_ok[i])
                rep.failures.push_back(where + "size " + std::to_string(size) + " < k=" + std::to_string(inst.k));
        }
        if (tr.single_set && i > 0 && S != sol.sets[0])
            rep.failures.push_back(where + "single-set problem needs the same set in every layer");
    }

    rep.insertion_total = sol.insertion_total();
    rep.budget_ok = rep.insertion_total <= inst.ell;
    if (!rep.budget_ok)
        rep.failures.push_back("budget exceeded: " + std::to_string(rep.insertion_total) + " > " +
                               std::to_string(inst.ell));
    if (inst.q) {
        rep.local_budget_ok = true;
        for (std::size_t i = 0; i + 1 < tau; ++i) {
            auto step = static_cast<int>(difference_size(sol.sets[i + 1], sol.sets[i]));
            if (step > *inst.q) {
                rep.local_budget_ok = false;
                rep.failures.push_back("local budget exceeded between layers " + std::to_string(i + 1) + " and " +
                                       std::to_string(i + 2) + ": " + std::to_string(step) + " > " +
                                       std::to_string(*inst.q));
            }
        }
    }
    rep.accepted = rep.failures.empty();
    return rep;
}

bool is_minimal(ProblemKind kind, const StaticGraph& layer, const ElementSet& S, const ElementSet& F,
                const Attributes& attrs) {
    if (!is_subset(F, S))
        throw PreconditionError("forced set is not contained in the candidate set");
    const ElementSet free = set_difference(S, F);
    if (free.size() > kMinimalityLimit)
        throw PreconditionError("minimality check limited to " + std::to_string(kMinimalityLimit) +
                                " free elements");
    const std::size_t full = (std::size_t{1} << free.size()) - 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
        ElementSet candidate = F;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask >> b & 1)
                candidate.push_back(free[b]);
        normalize(candidate);
        if (satisfies(kind, layer, candidate, attrs))
            return false;
    }
    return true;
}

} // namespace gms
