#include "gms/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "gms/error.hpp"
#include "gms/kernels.hpp"
#include "gms/problems.hpp"

namespace gms {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

class Collector {
public:
    explicit Collector(std::uint64_t guard) : guard_(guard) {}

    void add(ElementSet s) {
        if (out_.size() >= guard_)
            throw EnumerationOverflow("enumeration exceeded its guard of " + std::to_string(guard_) + " sets");
        out_.push_back(std::move(s));
    }

    std::vector<ElementSet> finish() {
        std::sort(out_.begin(), out_.end(),
                  [](const ElementSet& a, const ElementSet& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
        out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
        std::vector<ElementSet> kept;
        for (auto& s : out_) {
            bool dominated = std::any_of(kept.begin(), kept.end(), [&](const ElementSet& t) {
                return t.size() < s.size() && is_subset(t, s);
            });
            if (!dominated)
                kept.push_back(std::move(s));
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

private:
    std::uint64_t guard_;
    std::vector<ElementSet> out_;
};

void enumerate_kernel_subsets(const EnumerationRequest& req, Collector& out) {
    const StaticGraph& layer = *req.layer;
    KernelResult kr = full_kernel(req.kind, layer, req.k);
    if (kr.no_instance())
        return;
    const ElementSet cand = set_difference(kernel_universe(req.kind, kr), req.forced);
    const std::size_t room = static_cast<std::size_t>(req.k) - req.forced.size();

    // Increasing size, so a satisfying set is minimal iff no earlier hit lies inside it.
    std::vector<std::vector<std::size_t>> hits;
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= std::min(room, cand.size()); ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            pick[i] = i;
        while (true) {
            bool covers_hit = std::any_of(hits.begin(), hits.end(), [&](const std::vector<std::size_t>& h) {
                return std::includes(pick.begin(), pick.end(), h.begin(), h.end());
            });
            if (!covers_hit) {
                ElementSet S = req.forced;
                for (std::size_t i : pick)
                    S.push_back(cand[i]);
                normalize(S);
                if (satisfies(req.kind, layer, S)) {
                    hits.push_back(pick);
                    out.add(std::move(S));
                }
            }
            // next combination
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == cand.size() - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
}

struct P3 {
    Vertex u, v, w; // v is the middle vertex, u < w, {u, w} absent
};

class ConflictBrancher {
public:
    ConflictBrancher(const EnumerationRequest& req, Collector& out) : req_(req), out_(out) {}

    void run() { branch(req_.forced); }

private:
    std::optional<P3> find_p3(const ElementSet& M) const {
        const StaticGraph& layer = *req_.layer;
        std::vector<Edge> present;
        for (const Edge& e : layer.edges())
            if (!contains(M, Element::del(e)))
                present.push_back(e);
        for (const Element& m : M)
            if (m.op == ModOp::Add && !layer.has_edge(m.pair()))
                present.push_back(m.pair());
        StaticGraph g(layer.vertex_count(), std::move(present));
        std::vector<Vertex> ids;
        for (const Edge& e : g.edges()) {
            ids.push_back(e.u);
            ids.push_back(e.v);
        }
        LocalIndex idx(std::move(ids));
        std::vector<std::vector<Vertex>> nbr(idx.size());
        for (const Edge& e : g.edges()) {
            nbr[idx.at(e.u)].push_back(e.v);
            nbr[idx.at(e.v)].push_back(e.u);
        }
        for (std::size_t c = 0; c < idx.size(); ++c) {
            auto& ns = nbr[c];
            std::sort(ns.begin(), ns.end());
            for (std::size_t a = 0; a < ns.size(); ++a)
                for (std::size_t b = a + 1; b < ns.size(); ++b)
                    if (!g.has_edge(ns[a], ns[b]))
                        return P3{ns[a], idx.global(c), ns[b]};
        }
        return std::nullopt;
    }

    void branch(const ElementSet& M) {
        auto conflict = find_p3(M);
        if (!conflict) {
            out_.add(M);
            return;
        }
        if (M.size() >= static_cast<std::size_t>(req_.k))
            return;
        const StaticGraph& layer = *req_.layer;
        auto extend = [&](Element e) {
            ElementSet next = M;
            next.push_back(e);
            normalize(next);
            branch(next);
        };
        // An edge present but not in the layer was added by M; removing it would undo M.
        if (layer.has_edge(conflict->u, conflict->v))
            extend(Element::del(Edge(conflict->u, conflict->v)));
        if (layer.has_edge(conflict->v, conflict->w))
            extend(Element::del(Edge(conflict->v, conflict->w)));
        // An absent layer edge was deleted by M.
        if (req_.kind == ProblemKind::ClusterEditing && !layer.has_edge(conflict->u, conflict->w))
            extend(Element::add(Edge(conflict->u, conflict->w)));
    }

    const EnumerationRequest& req_;
    Collector& out_;
};

} // namespace

std::uint64_t default_enumeration_guard(ProblemKind kind, int k) {
    const auto kk = static_cast<std::uint64_t>(std::max(k, 0));
    switch (kind) {
    case ProblemKind::VertexCover:
        return saturating_pow(2, kk * kk + 2 * kk);
    case ProblemKind::PathContraction:
        return saturating_pow(2, 5 * kk + 3);
    case ProblemKind::ClusterEditing:
        return saturating_pow(3, kk);
    case ProblemKind::ClusterEdgeDeletion:
        return saturating_pow(2, kk);
    default:
        throw UnsupportedKind(std::string(name_of(kind)) + " is not superset-enumerable here");
    }
}

std::vector<ElementSet> enumerate_supersets(const EnumerationRequest& req) {
    if (req.layer == nullptr)
        throw PreconditionError("enumeration request without a layer");
    const std::uint64_t guard = req.guard.value_or(default_enumeration_guard(req.kind, req.k));
    if (req.k < 0 || req.forced.size() > static_cast<std::size_t>(req.k))
        throw PreconditionError("forced set larger than k");
    ElementSet forced = req.forced;
    normalize(forced);
    if (forced != req.forced)
        throw PreconditionError("forced set is not in canonical order");
    // Validates the element kinds of F.
    satisfies(req.kind, *req.layer, req.forced);

    Collector out(guard);
    switch (req.kind) {
    case ProblemKind::VertexCover:
    case ProblemKind::PathContraction:
        enumerate_kernel_subsets(req, out);
        break;
    case ProblemKind::ClusterEditing:
    case ProblemKind::ClusterEdgeDeletion:
        ConflictBrancher(req, out).run();
        break;
    default:
        throw UnsupportedKind(std::string(name_of(req.kind)) + " is not superset-enumerable here");
    }
    return out.finish();
}

} // namespace gms
