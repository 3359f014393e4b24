#include "reference.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace ref {

using gms::Edge;
using gms::Element;
using gms::ElementKind;
using gms::ModOp;
using gms::Vertex;

Matrix::Matrix(const StaticGraph& g) : Matrix(g.vertex_count()) {
    for (const Edge& e : g.edges())
        set(e.u, e.v, true);
}

namespace {

bool reachable(const Matrix& m, std::size_t s, std::size_t t) {
    std::vector<char> seen(m.n, 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        if (x == t)
            return true;
        for (std::size_t y = 0; y < m.n; ++y)
            if (m(x, y) && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return false;
}

Matrix active_edges(const StaticGraph& layer, const ElementSet& S) {
    Matrix layer_m(layer), out(layer.vertex_count());
    for (const auto& e : S)
        if (layer_m(e.u, e.v))
            out.set(e.u, e.v, true);
    return out;
}

bool path_forest_after(const StaticGraph& layer, const ElementSet& S) {
    const std::size_t n = layer.vertex_count();
    Matrix layer_m(layer);
    // label propagation over contracted layer edges
    std::vector<std::size_t> label(n);
    for (std::size_t v = 0; v < n; ++v)
        label[v] = v;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : S) {
            if (!layer_m(e.u, e.v))
                continue;
            auto m = std::min(label[e.u], label[e.v]);
            if (label[e.u] != m || label[e.v] != m) {
                label[e.u] = label[e.v] = m;
                changed = true;
            }
        }
    }
    Matrix q(n);
    for (const Edge& e : layer.edges())
        if (label[e.u] != label[e.v])
            q.set(label[e.u], label[e.v], true);
    std::vector<char> seen(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (seen[r] || label[r] != r)
            continue;
        std::size_t verts = 0, degsum = 0;
        std::vector<std::size_t> stack{r};
        seen[r] = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            ++verts;
            std::size_t deg = 0;
            for (std::size_t y = 0; y < n; ++y)
                if (q(x, y)) {
                    ++deg;
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            if (deg > 2)
                return false;
            degsum += deg;
        }
        if (degsum / 2 != verts - 1)
            return false;
    }
    return true;
}

bool cluster_after(const StaticGraph& layer, const ElementSet& S) {
    Matrix layer_m(layer), g(layer);
    for (const auto& e : S) {
        if (e.op == ModOp::Del && layer_m(e.u, e.v))
            g.set(e.u, e.v, false);
        if (e.op == ModOp::Add && !layer_m(e.u, e.v))
            g.set(e.u, e.v, true);
    }
    for (std::size_t v = 0; v < g.n; ++v)
        for (std::size_t u = 0; u < g.n; ++u)
            for (std::size_t w = u + 1; w < g.n; ++w)
                if (u != v && w != v && g(u, v) && g(v, w) && !g(u, w))
                    return false;
    return true;
}

} // namespace

bool satisfies(ProblemKind kind, const StaticGraph& layer, const ElementSet& S, const Attributes& attrs) {
    const std::size_t n = layer.vertex_count();
    switch (kind) {
    case ProblemKind::VertexCover: {
        std::vector<char> in(n, 0);
        for (const auto& e : S)
            in[e.u] = 1;
        for (const Edge& e : layer.edges())
            if (!in[e.u] && !in[e.v])
                return false;
        return true;
    }
    case ProblemKind::DominatingSet: {
        std::vector<char> in(n, 0);
        for (const auto& e : S)
            in[e.u] = 1;
        Matrix m(layer);
        for (std::size_t v = 0; v < n; ++v) {
            bool ok = in[v];
            for (std::size_t u = 0; u < n && !ok; ++u)
                ok = m(u, v) && in[u];
            if (!ok)
                return false;
        }
        return true;
    }
    case ProblemKind::EdgeDominatingSet: {
        Matrix a = active_edges(layer, S);
        for (const Edge& e : layer.edges()) {
            bool ok = false;
            for (std::size_t x = 0; x < n && !ok; ++x)
                ok = a(e.u, x) || a(e.v, x);
            if (!ok)
                return false;
        }
        return true;
    }
    case ProblemKind::PathContraction:
        return path_forest_after(layer, S);
    case ProblemKind::ClusterEditing:
    case ProblemKind::ClusterEdgeDeletion:
        return cluster_after(layer, S);
    case ProblemKind::StPath:
        return reachable(active_edges(layer, S), *attrs.s, *attrs.t);
    case ProblemKind::StCut: {
        Matrix m(layer);
        for (const auto& e : S)
            m.set(e.u, e.v, false);
        return !reachable(m, *attrs.s, *attrs.t);
    }
    case ProblemKind::Matching: {
        Matrix a = active_edges(layer, S);
        for (std::size_t x = 0; x < n; ++x) {
            int deg = 0;
            for (std::size_t y = 0; y < n; ++y)
                deg += a(x, y);
            if (deg > 1)
                return false;
        }
        return true;
    }
    }
    return false;
}

ElementSet universe(ProblemKind kind, std::size_t n, const StaticGraph& underlying) {
    ElementSet out;
    switch (gms::traits(kind).element_kind) {
    case ElementKind::Vertex:
        for (std::size_t v = 0; v < n; ++v)
            out.push_back(Element::vertex(static_cast<Vertex>(v)));
        break;
    case ElementKind::Edge:
        for (const Edge& e : underlying.edges())
            out.push_back(Element::edge(e));
        break;
    case ElementKind::Modification:
        for (const Edge& e : underlying.edges())
            out.push_back(Element::del(e));
        if (kind == ProblemKind::ClusterEditing)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v)
                    out.push_back(Element::add(Edge(static_cast<Vertex>(u), static_cast<Vertex>(v))));
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ElementSet from_mask(const ElementSet& universe, std::uint64_t mask) {
    ElementSet out;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if ((mask >> i) & 1)
            out.push_back(universe[i]);
    return out;
}

std::uint64_t to_mask(const ElementSet& universe, const ElementSet& S) {
    std::uint64_t mask = 0;
    for (const auto& e : S) {
        auto it = std::find(universe.begin(), universe.end(), e);
        if (it == universe.end())
            throw std::invalid_argument("element outside the reference universe");
        mask |= std::uint64_t{1} << (it - universe.begin());
    }
    return mask;
}

namespace {

void for_each_small_mask(std::size_t n, int k, const std::function<void(std::uint64_t)>& f) {
    std::function<void(std::size_t, int, std::uint64_t)> rec = [&](std::size_t from, int left, std::uint64_t mask) {
        f(mask);
        if (left == 0)
            return;
        for (std::size_t i = from; i < n; ++i)
            rec(i + 1, left - 1, mask | (std::uint64_t{1} << i));
    };
    rec(0, k, 0);
}

} // namespace

std::vector<std::uint64_t> feasible_masks(ProblemKind kind, const StaticGraph& layer, const ElementSet& universe,
                                          int k, const Attributes& attrs) {
    if (universe.size() > 64)
        throw std::invalid_argument("reference universe above 64 elements");
    std::vector<std::uint64_t> out;
    for_each_small_mask(universe.size(), k, [&](std::uint64_t m) {
        if (satisfies(kind, layer, from_mask(universe, m), attrs))
            out.push_back(m);
    });
    return out;
}

std::vector<ElementSet> minimal_solutions(ProblemKind kind, const StaticGraph& layer, const ElementSet& universe,
                                          int k, const ElementSet& F) {
    const std::uint64_t fmask = to_mask(universe, F);
    std::unordered_set<std::uint64_t> feasible;
    for (auto m : feasible_masks(kind, layer, universe, k))
        if ((m & fmask) == fmask)
            feasible.insert(m);
    std::vector<ElementSet> out;
    for (auto m : feasible) {
        bool minimal = true;
        // proper subsets T with F ⊆ T ⊊ m
        const std::uint64_t free = m & ~fmask;
        for (std::uint64_t sub = (free - 1) & free;; sub = (sub - 1) & free) {
            if (free == 0)
                break;
            if (feasible.count(sub | fmask)) {
                minimal = false;
                break;
            }
            if (sub == 0)
                break;
        }
        if (minimal)
            out.push_back(from_mask(universe, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> min_insertions(const ProblemInstance& inst, std::optional<int> q) {
    const ElementSet U = universe(inst.kind, inst.n(), inst.graph.underlying());
    constexpr int inf = std::numeric_limits<int>::max() / 2;
    std::vector<std::uint64_t> prev;
    std::vector<int> dist;
    for (std::size_t i = 0; i < inst.tau(); ++i) {
        auto cur = feasible_masks(inst.kind, inst.graph.layer(i), U, inst.k, inst.attrs);
        if (cur.empty())
            return std::nullopt;
        std::vector<int> next(cur.size(), i == 0 ? 0 : inf);
        if (i > 0)
            for (std::size_t t = 0; t < cur.size(); ++t)
                for (std::size_t s = 0; s < prev.size(); ++s) {
                    if (dist[s] >= inf)
                        continue;
                    int step = std::popcount(cur[t] & ~prev[s]);
                    if (q && step > *q)
                        continue;
                    next[t] = std::min(next[t], dist[s] + step);
                }
        prev = std::move(cur);
        dist = std::move(next);
    }
    int best = *std::min_element(dist.begin(), dist.end());
    if (best >= inf)
        return std::nullopt;
    return best;
}

bool decide(const ProblemInstance& inst) {
    const auto& tr = gms::traits(inst.kind);
    if (!tr.single_set) {
        auto best = min_insertions(inst, inst.q);
        return best && *best <= inst.ell;
    }
    const ElementSet U = universe(inst.kind, inst.n(), inst.graph.underlying());
    if (U.size() > 24)
        throw std::invalid_argument("reference single-set universe too large");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << U.size()); ++m) {
        const int size = std::popcount(m);
        if (tr.objective == gms::Objective::AtLeast ? size < inst.k : size > inst.k)
            continue;
        const ElementSet F = from_mask(U, m);
        bool ok = true;
        for (std::size_t i = 0; i < inst.tau() && ok; ++i)
            ok = satisfies(inst.kind, inst.graph.layer(i), F, inst.attrs);
        if (ok)
            return true;
    }
    return false;
}

std::vector<std::vector<std::size_t>> cliques(const StaticGraph& H, std::size_t size) {
    Matrix m(H);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = from; v < m.n; ++v)
            if (std::all_of(cur.begin(), cur.end(), [&](std::size_t u) { return m(u, v); })) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
    };
    rec(0);
    return out;
}

std::size_t domination_number(const StaticGraph& H) {
    const std::size_t n = H.vertex_count();
    Matrix m(H);
    std::size_t best = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            bool dom = (mask >> v) & 1;
            for (std::size_t u = 0; u < n && !dom; ++u)
                dom = m(u, v) && ((mask >> u) & 1);
            ok = dom;
        }
        if (ok)
            best = std::min<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

std::size_t independence_number(const StaticGraph& H) {
    const std::size_t n = H.vertex_count();
    Matrix m(H);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = u + 1; v < n && ok; ++v)
                ok = !(((mask >> u) & 1) && ((mask >> v) & 1) && m(u, v));
        if (ok)
            best = std::max<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

std::size_t min_set_cover(const gms::SetFamily& family) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::size_t f = family.sets.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
        std::vector<char> hit(family.universe, 0);
        for (std::size_t j = 0; j < f; ++j)
            if ((mask >> j) & 1)
                for (auto x : family.sets[j])
                    hit[x] = 1;
        if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
            best = std::min<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

std::size_t min_hitting_set(const gms::SetFamily& family) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << family.universe); ++mask) {
        bool ok = std::all_of(family.sets.begin(), family.sets.end(), [&](const std::vector<std::size_t>& s) {
            return std::any_of(s.begin(), s.end(), [&](std::size_t x) { return (mask >> x) & 1; });
        });
        if (ok)
            best = std::min<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

bool has_multicolored_clique(const StaticGraph& H, const std::vector<int>& colors, int k) {
    for (const auto& c : cliques(H, static_cast<std::size_t>(k))) {
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        bool ok = true;
        for (auto v : c) {
            if (seen[colors[v]])
                ok = false;
            seen[colors[v]] = 1;
        }
        if (ok)
            return true;
    }
    return false;
}

std::vector<std::size_t> component_sizes(const StaticGraph& g) {
    Matrix m(g);
    std::vector<char> seen(m.n, 0);
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < m.n; ++r) {
        if (seen[r])
            continue;
        std::size_t size = 0;
        bool has_edge = false;
        std::vector<std::size_t> stack{r};
        seen[r] = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            ++size;
            for (std::size_t y = 0; y < m.n; ++y)
                if (m(x, y)) {
                    has_edge = true;
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
        }
        if (has_edge)
            out.push_back(size);
    }
    return out;
}

} // namespace ref

namespace ref {

gms::ProblemInstance spread_empty_layers(const gms::ProblemInstance& inst, std::size_t count) {
    gms::ProblemInstance out = inst;
    // from the back so earlier positions stay valid
    for (std::size_t i = inst.tau(); i-- > 1;)
        out = gms::add_empty_layers(out, i + 1, count);
    return out;
}

} // namespace ref
