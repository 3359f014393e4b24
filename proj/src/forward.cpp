#include <stdexcept>
#include <unordered_map>

#include "gms/detail/search_support.hpp"
#include "gms/error.hpp"
#include "gms/kernels.hpp"
#include "gms/problems.hpp"
#include "gms/solve.hpp"

namespace gms {

namespace {

using detail::LayerSetHash;
using detail::LayerSetKey;

struct LayerKernel {
    KernelResult kernel;
    ElementSet universe;
};

class ForwardSearch {
public:
    ForwardSearch(const ProblemInstance& inst, const std::vector<LayerKernel>& kernels, const SolveOptions& opt,
                  detail::StopToken& stop)
        : inst_(inst), kernels_(kernels), opt_(opt), stop_(stop), budget_(inst.k + inst.ell), sets_(inst.tau()) {}

    bool satisfied(std::size_t i, const ElementSet& S) const {
        return satisfies_on_kernel(inst_.kind, inst_.graph.layer(i), kernels_[i].kernel, S);
    }

    /// S_{i-1} = S is fixed with `charge` spent so far; choose S_i..S_tau.
    bool enter(std::size_t i, const ElementSet& S, int charge) {
        if (i == inst_.tau())
            return true;
        LayerSetKey key{i, S};
        if (opt_.memo) {
            auto it = failed_.find(key);
            if (it != failed_.end() && it->second <= charge) {
                ++stats_.memo_hits;
                return false;
            }
        }
        bool ok = fix(i, S, charge, nullptr);
        if (!ok && opt_.memo && !stop_.stop()) {
            auto [it, fresh] = failed_.try_emplace(std::move(key), charge);
            if (!fresh)
                it->second = std::min(it->second, charge);
        }
        return ok;
    }

    /// Working set S for layer i. Elements added within one layer appear in increasing order.
    bool fix(std::size_t i, const ElementSet& S, int charge, const Element* last) {
        ++stats_.nodes;
        if (stop_.stop())
            return false;
        if (satisfied(i, S)) {
            sets_[i] = S;
            return enter(i + 1, S, charge);
        }
        if (charge >= budget_)
            return false;
        for (const Element& y : kernels_[i].universe) {
            if ((last && !(*last < y)) || contains(S, y))
                continue;
            if (S.size() < static_cast<std::size_t>(inst_.k)) {
                ElementSet next = S;
                next.push_back(y);
                normalize(next);
                if (fix(i, next, charge + 1, &y))
                    return true;
            }
            for (std::size_t x = 0; x < S.size(); ++x) {
                ElementSet next = S;
                next[x] = y;
                normalize(next);
                if (fix(i, next, charge + 1, &y))
                    return true;
                if (stop_.stop())
                    return false;
            }
        }
        return false;
    }

    std::vector<ElementSet>& sets() { return sets_; }
    const SolveStats& stats() const { return stats_; }

private:
    const ProblemInstance& inst_;
    const std::vector<LayerKernel>& kernels_;
    const SolveOptions& opt_;
    detail::StopToken& stop_;
    int budget_;
    std::vector<ElementSet> sets_;
    SolveStats stats_;
    std::unordered_map<LayerSetKey, int, LayerSetHash> failed_;
};

} // namespace

SolutionSequence repair_budget(const SolutionSequence& sol, int k, int ell) {
    for (std::size_t i = 0; i < sol.size(); ++i)
        if (sol.sets[i].size() > static_cast<std::size_t>(k))
            throw PreconditionError("repair_budget: layer " + std::to_string(i + 1) + " holds more than k elements");
    if (sol.size() > 0 && sol.charge() > k + ell)
        throw PreconditionError("repair_budget: charge " + std::to_string(sol.charge()) + " exceeds k+ell = " +
                                std::to_string(k + ell));
    SolutionSequence out = sol;
    while (out.insertion_total() > ell) {
        std::size_t i = 0;
        while (difference_size(out.sets[i + 1], out.sets[i]) == 0)
            ++i;
        const Element x = set_difference(out.sets[i + 1], out.sets[i]).front();
        for (std::size_t j = 0; j <= i; ++j)
            if (!contains(out.sets[j], x)) {
                out.sets[j].push_back(x);
                normalize(out.sets[j]);
            }
    }
    for (const auto& s : out.sets)
        if (s.size() > static_cast<std::size_t>(k))
            throw std::logic_error("repair_budget grew a set beyond k");
    return out;
}

SolveResult solve_forward(const ProblemInstance& inst, const SolveOptions& opt) {
    if (inst.kind != ProblemKind::VertexCover && inst.kind != ProblemKind::PathContraction)
        throw UnsupportedKind("forward solver needs a monotone problem with a full kernel (vc, pc), got " +
                              std::string(name_of(inst.kind)));
    inst.validate();
    if (inst.q)
        throw UnsupportedKind("forward solver does not handle a local budget");

    SolveResult result;
    const std::size_t tau = inst.tau();
    std::vector<LayerKernel> kernels;
    kernels.reserve(tau);
    for (std::size_t i = 0; i < tau; ++i) {
        LayerKernel lk{full_kernel(inst.kind, inst.graph.layer(i), inst.k), {}};
        if (lk.kernel.no_instance()) {
            result.verdict = Verdict::No;
            result.note = "kernel of layer " + std::to_string(i + 1) + " rejects";
            return result;
        }
        lk.universe = kernel_universe(inst.kind, lk.kernel);
        kernels.push_back(std::move(lk));
    }

    auto finish = [&](std::vector<ElementSet> sets) {
        SolutionSequence sol{std::move(sets)};
        result.charge = sol.charge();
        sol = repair_budget(sol, inst.k, inst.ell);
        VerifyReport rep = verify_solution(inst, sol);
        if (!rep.accepted)
            throw std::logic_error("forward solver produced a sequence rejected on the original layers: " +
                                   rep.summary());
        result.verdict = Verdict::Yes;
        result.solution = std::move(sol);
    };

    // Layers that the empty set already handles need no search.
    std::size_t root = 0;
    {
        detail::StopToken stop(opt, nullptr, 0);
        ForwardSearch probe(inst, kernels, opt, stop);
        while (root < tau && probe.satisfied(root, {}))
            ++root;
    }
    if (root == tau) {
        finish(std::vector<ElementSet>(tau));
        return result;
    }
    if (inst.k < 1) {
        result.verdict = Verdict::No;
        return result;
    }

    const ElementSet& firsts = kernels[root].universe;
    std::vector<SolveStats> stats(firsts.size());
    std::vector<char> timed_out(firsts.size(), 0);
    std::vector<std::vector<ElementSet>> found(firsts.size());
    auto task = [&](std::size_t y, const std::atomic<std::size_t>& best) {
        detail::StopToken stop(opt, &best, y);
        ForwardSearch search(inst, kernels, opt, stop);
        bool ok = search.fix(root, {firsts[y]}, 1, &firsts[y]);
        stats[y] = search.stats();
        timed_out[y] = stop.timed_out();
        if (ok)
            found[y] = std::move(search.sets());
        return ok;
    };
    const std::size_t best = detail::run_first_success(firsts.size(), opt.threads, task);
    for (const auto& s : stats) {
        result.stats.nodes += s.nodes;
        result.stats.memo_hits += s.memo_hits;
    }
    if (best < firsts.size()) {
        finish(std::move(found[best]));
        return result;
    }
    bool any_timeout = false;
    for (char t : timed_out)
        any_timeout = any_timeout || t;
    result.verdict = any_timeout ? Verdict::Timeout : Verdict::No;
    return result;
}

} // namespace gms
