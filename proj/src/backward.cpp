#include <stdexcept>
#include <unordered_map>

#include "gms/detail/search_support.hpp"
#include "gms/enumeration.hpp"
#include "gms/error.hpp"
#include "gms/problems.hpp"
#include "gms/solve.hpp"

namespace gms {

namespace {

using detail::LayerSetHash;
using detail::LayerSetKey;

bool backward_supported(ProblemKind kind) {
    return kind == ProblemKind::VertexCover || kind == ProblemKind::PathContraction ||
           kind == ProblemKind::ClusterEditing || kind == ProblemKind::ClusterEdgeDeletion;
}

class BackwardSearch {
public:
    BackwardSearch(const ProblemInstance& inst, const SolveOptions& opt, detail::StopToken& stop)
        : inst_(inst), opt_(opt), stop_(stop), monotone_(traits(inst.kind).monotone),
          cap_(2 * inst.ell + inst.k), sets_(inst.tau()) {}

    /// S has been chosen for layer i (0-based) with `moves` guesses used and `total`
    /// insertions accounted for layers i..tau-1.
    bool finalize(std::size_t i, const ElementSet& S, int moves, int total) {
        sets_[i] = S;
        if (i == 0)
            return true;
        LayerSetKey key{i, S};
        if (opt_.memo) {
            auto it = failed_.find(key);
            if (it != failed_.end())
                for (auto [m, t] : it->second)
                    if (m <= moves && t <= total) {
                        ++stats_.memo_hits;
                        return false;
                    }
        }
        bool ok = visit(i - 1, S, moves, total, {});
        if (!ok && opt_.memo && !stop_.stop()) {
            auto& front = failed_[std::move(key)];
            std::erase_if(front, [&](const std::pair<int, int>& p) { return p.first >= moves && p.second >= total; });
            front.emplace_back(moves, total);
        }
        return ok;
    }

    const std::vector<ElementSet>& enumerate(std::size_t i, const ElementSet& F) {
        LayerSetKey key{i, F};
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        ++stats_.enumerations;
        EnumerationRequest req{inst_.kind, &inst_.graph.layer(i), inst_.k, F, std::nullopt};
        return cache_.emplace(std::move(key), enumerate_supersets(req)).first->second;
    }

    const std::vector<ElementSet>& sets() const { return sets_; }
    const std::vector<GuessMove>& moves() const { return moves_; }
    std::vector<GuessMove>& moves() { return moves_; }
    const SolveStats& stats() const { return stats_; }

private:
    /// S is the working set for layer i; `deleted` holds the elements of S_{i+1} removed so far.
    bool visit(std::size_t i, const ElementSet& S, int moves, int total, const ElementSet& deleted) {
        ++stats_.nodes;
        if (stop_.stop())
            return false;
        const int spent = total + static_cast<int>(deleted.size());
        if (spent > inst_.ell)
            return false;
        const StaticGraph& layer = inst_.graph.layer(i);
        if (satisfies(inst_.kind, layer, S))
            return finalize(i, S, moves, spent);

        if (moves < cap_) {
            const auto& options = enumerate(i, S);
            for (std::size_t y = 0; y < options.size(); ++y) {
                const ElementSet& T = options[y];
                if (!set_intersection(T, deleted).empty())
                    continue;
                moves_.push_back({0, static_cast<int>(y) + 1});
                if (finalize(i, T, moves + 1, spent))
                    return true;
                moves_.pop_back();
                if (stop_.stop())
                    return false;
            }
        }

        // A deletion never repairs a monotone layer, so leave room for a replacement.
        const int needed = monotone_ ? 2 : 1;
        if (spent + 1 > inst_.ell || moves + needed > cap_)
            return false;
        for (std::size_t x = 0; x < S.size(); ++x) {
            if (!deleted.empty() && !(deleted.back() < S[x]))
                continue;
            ElementSet next = S;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(x));
            ElementSet gone = deleted;
            gone.push_back(S[x]);
            moves_.push_back({static_cast<int>(x) + 1, 0});
            if (visit(i, next, moves + 1, total, gone))
                return true;
            moves_.pop_back();
            if (stop_.stop())
                return false;
        }
        return false;
    }

    const ProblemInstance& inst_;
    const SolveOptions& opt_;
    detail::StopToken& stop_;
    bool monotone_;
    int cap_;
    std::vector<ElementSet> sets_;
    std::vector<GuessMove> moves_;
    SolveStats stats_;
    std::unordered_map<LayerSetKey, std::vector<std::pair<int, int>>, LayerSetHash> failed_;
    std::unordered_map<LayerSetKey, std::vector<ElementSet>, LayerSetHash> cache_;
};

void add_stats(SolveStats& into, const SolveStats& s) {
    into.nodes += s.nodes;
    into.memo_hits += s.memo_hits;
    into.enumerations += s.enumerations;
}

} // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes:
        return "YES";
    case Verdict::No:
        return "NO";
    case Verdict::Timeout:
        return "TIMEOUT";
    }
    return "?";
}

SolveResult solve_backward(const ProblemInstance& inst, const SolveOptions& opt) {
    if (!backward_supported(inst.kind))
        throw UnsupportedKind("backward solver does not handle " + std::string(name_of(inst.kind)));
    inst.validate();
    if (inst.q)
        throw UnsupportedKind("backward solver does not handle a local budget");

    SolveResult result;
    const std::size_t tau = inst.tau();

    // Carry the empty set down from the last layer until it fails somewhere.
    std::size_t top = tau;
    while (top > 0 && satisfies(inst.kind, inst.graph.layer(top - 1), {}))
        --top;
    if (top == 0) {
        result.verdict = Verdict::Yes;
        result.solution = SolutionSequence{std::vector<ElementSet>(tau)};
        return result;
    }
    const std::size_t root = top - 1;

    if (inst.k < 1 || 2 * inst.ell + inst.k < 1) {
        result.verdict = Verdict::No;
        return result;
    }
    std::vector<ElementSet> roots;
    {
        EnumerationRequest req{inst.kind, &inst.graph.layer(root), inst.k, {}, std::nullopt};
        roots = enumerate_supersets(req);
        ++result.stats.enumerations;
    }

    std::vector<SolveResult> partial(roots.size());
    std::vector<char> timed_out(roots.size(), 0);
    std::vector<std::vector<ElementSet>> found(roots.size());

    auto task = [&](std::size_t y, const std::atomic<std::size_t>& best) {
        detail::StopToken stop(opt, &best, y);
        BackwardSearch search(inst, opt, stop);
        search.moves().push_back({0, static_cast<int>(y) + 1});
        bool ok = search.finalize(root, roots[y], 1, 0);
        partial[y].stats = search.stats();
        timed_out[y] = stop.timed_out();
        if (ok) {
            found[y] = search.sets();
            partial[y].guesses = search.moves();
        }
        return ok;
    };
    const std::size_t best = detail::run_first_success(roots.size(), opt.threads, task);

    for (const auto& p : partial)
        add_stats(result.stats, p.stats);
    if (best < roots.size()) {
        std::vector<ElementSet> sets = std::move(found[best]);
        for (std::size_t i = root + 1; i < tau; ++i)
            sets[i].clear();
        SolutionSequence sol{std::move(sets)};
        if (!verify_solution(inst, sol).accepted)
            throw std::logic_error("backward solver produced a sequence that does not verify");
        result.verdict = Verdict::Yes;
        result.solution = std::move(sol);
        result.guesses = std::move(partial[best].guesses);
        return result;
    }
    bool any_timeout = false;
    for (char t : timed_out)
        any_timeout = any_timeout || t;
    result.verdict = any_timeout ? Verdict::Timeout : Verdict::No;
    return result;
}

} // namespace gms
