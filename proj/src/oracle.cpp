#include "gms/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <map>
#include <unordered_map>

#include "gms/error.hpp"
#include "gms/problems.hpp"

namespace gms {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Σ_{j<=k} C(n, j), saturating at UINT64_MAX.
std::uint64_t count_small_subsets(std::uint64_t n, std::uint64_t k) {
    const auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0, binom = 1; // binom = C(n, j)
    for (std::uint64_t j = 0; j <= std::min(n, k); ++j) {
        if (total > max - binom)
            return max;
        total += binom;
        // C(n, j+1) = C(n, j) * (n-j) / (j+1), computed without overflow where possible
        const std::uint64_t num = n - j;
        if (binom > max / std::max<std::uint64_t>(num, 1))
            return max;
        binom = binom * num / (j + 1);
    }
    return total;
}

/// Calls f(indices) for every combination of size 0..r from 0..n-1, by size then lexicographically.
template <class F>
bool for_each_combination(std::size_t n, std::size_t r, F&& f) {
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= std::min(n, r); ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            pick[i] = i;
        while (true) {
            if (f(pick))
                return true;
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return false;
}

struct BitKeys {
    using Key = std::uint64_t;
    using Hash = std::hash<std::uint64_t>;

    static Key from(const std::vector<std::size_t>& idx) {
        Key k = 0;
        for (auto i : idx)
            k |= Key{1} << i;
        return k;
    }
    static std::size_t size(Key k) { return static_cast<std::size_t>(std::popcount(k)); }
    static bool contains(Key k, std::size_t i) { return (k >> i) & 1; }
    static Key with(Key k, std::size_t i) { return k | (Key{1} << i); }
    static Key without(Key k, std::size_t i) { return k & ~(Key{1} << i); }
    static std::vector<std::size_t> indices(Key k) {
        std::vector<std::size_t> out;
        while (k) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(k)));
            k &= k - 1;
        }
        return out;
    }
    template <class F>
    static void for_each_subset(Key k, F&& f) {
        Key sub = k;
        while (true) {
            f(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & k;
        }
    }
};

struct VecKeys {
    using Key = std::vector<std::uint32_t>;
    struct Hash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = k.size();
            for (auto x : k)
                h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }
    };

    static Key from(const std::vector<std::size_t>& idx) { return Key(idx.begin(), idx.end()); }
    static std::size_t size(const Key& k) { return k.size(); }
    static bool contains(const Key& k, std::size_t i) {
        return std::binary_search(k.begin(), k.end(), static_cast<std::uint32_t>(i));
    }
    static Key with(Key k, std::size_t i) {
        k.insert(std::lower_bound(k.begin(), k.end(), static_cast<std::uint32_t>(i)), static_cast<std::uint32_t>(i));
        return k;
    }
    static Key without(Key k, std::size_t i) {
        k.erase(std::lower_bound(k.begin(), k.end(), static_cast<std::uint32_t>(i)));
        return k;
    }
    static std::vector<std::size_t> indices(const Key& k) { return {k.begin(), k.end()}; }
    template <class F>
    static void for_each_subset(const Key& k, F&& f) {
        const std::size_t n = k.size();
        Key sub;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            sub.clear();
            for (std::size_t b = 0; b < n; ++b)
                if ((mask >> b) & 1)
                    sub.push_back(k[b]);
            f(sub);
        }
    }
};

template <class Ops>
class LayeredOracle {
public:
    using Key = typename Ops::Key;

    LayeredOracle(const ProblemInstance& inst, const ElementSet& universe, const OracleOptions& opt,
                  std::optional<int> q)
        : inst_(inst), universe_(universe), opt_(opt), q_(q) {}

    SolveResult run() {
        SolveResult result;
        const std::size_t tau = inst_.tau();
        std::vector<std::vector<Key>> layers(tau);
        for (std::size_t i = 0; i < tau; ++i) {
            layers[i] = candidates(i);
            if (layers[i].empty()) {
                result.verdict = Verdict::No;
                result.note = "layer " + std::to_string(i + 1) + " has no feasible set of size <= k";
                return result;
            }
        }

        // d[i][j]: least insertions to reach candidate j of layer i; pred[i][j]: index in layer i-1.
        std::vector<std::vector<int>> d(tau);
        std::vector<std::vector<std::size_t>> pred(tau);
        d[0].assign(layers[0].size(), 0);
        pred[0].assign(layers[0].size(), 0);
        for (std::size_t i = 1; i < tau; ++i) {
            // h(Y) = least d(S) over previous candidates S ⊇ Y, with the S attaining it.
            std::unordered_map<Key, std::pair<int, std::size_t>, typename Ops::Hash> h;
            for (std::size_t s = 0; s < layers[i - 1].size(); ++s) {
                const int ds = d[i - 1][s];
                if (ds >= kInf)
                    continue;
                Ops::for_each_subset(layers[i - 1][s], [&](const Key& Y) {
                    auto [it, fresh] = h.try_emplace(Y, ds, s);
                    if (!fresh && ds < it->second.first)
                        it->second = {ds, s};
                });
            }
            d[i].assign(layers[i].size(), kInf);
            pred[i].assign(layers[i].size(), 0);
            for (std::size_t t = 0; t < layers[i].size(); ++t) {
                const Key& T = layers[i][t];
                const int tsize = static_cast<int>(Ops::size(T));
                Ops::for_each_subset(T, [&](const Key& Y) {
                    const int step = tsize - static_cast<int>(Ops::size(Y));
                    if (q_ && step > *q_)
                        return;
                    auto it = h.find(Y);
                    if (it == h.end())
                        return;
                    const int cost = it->second.first + step;
                    // ties: keep the earliest predecessor for determinism
                    if (cost < d[i][t] || (cost == d[i][t] && it->second.second < pred[i][t])) {
                        d[i][t] = cost;
                        pred[i][t] = it->second.second;
                    }
                });
            }
        }

        std::size_t best = 0;
        for (std::size_t t = 1; t < layers[tau - 1].size(); ++t)
            if (d[tau - 1][t] < d[tau - 1][best])
                best = t;
        if (d[tau - 1][best] >= kInf) {
            result.verdict = Verdict::No;
            result.note = "no sequence respects the local budget";
            return result;
        }
        result.best_insertions = d[tau - 1][best];
        if (*result.best_insertions > inst_.ell) {
            result.verdict = Verdict::No;
            return result;
        }
        SolutionSequence sol;
        sol.sets.resize(tau);
        std::size_t cur = best;
        for (std::size_t i = tau; i-- > 0;) {
            sol.sets[i] = to_elements(layers[i][cur]);
            cur = pred[i][cur];
        }
        result.verdict = Verdict::Yes;
        result.solution = std::move(sol);
        return result;
    }

private:
    ElementSet to_elements(const Key& key) const {
        ElementSet out;
        for (auto i : Ops::indices(key))
            out.push_back(universe_[i]);
        return out; // universe is canonical, so is out
    }

    std::vector<Key> candidates(std::size_t i) const {
        const StaticGraph& layer = inst_.graph.layer(i);
        const auto k = static_cast<std::size_t>(inst_.k);
        std::vector<Key> feasible;
        for_each_combination(universe_.size(), k, [&](const std::vector<std::size_t>& pick) {
            ElementSet S;
            for (auto j : pick)
                S.push_back(universe_[j]);
            if (satisfies(inst_.kind, layer, S, inst_.attrs))
                feasible.push_back(Ops::from(pick));
            return false;
        });
        if (opt_.policy == CandidatePolicy::AllFeasible)
            return feasible;

        // Keep inclusion-minimal sets, then close upwards within size k.
        std::unordered_map<Key, char, typename Ops::Hash> is_feasible;
        for (const Key& s : feasible)
            is_feasible.emplace(s, 1);
        std::vector<Key> frontier;
        for (const Key& s : feasible) {
            bool minimal = true;
            for (auto j : Ops::indices(s))
                if (is_feasible.count(Ops::without(s, j))) {
                    minimal = false;
                    break;
                }
            if (minimal)
                frontier.push_back(s);
        }
        std::unordered_map<Key, char, typename Ops::Hash> closure;
        std::vector<Key> out;
        while (!frontier.empty()) {
            Key s = std::move(frontier.back());
            frontier.pop_back();
            if (!closure.emplace(s, 1).second)
                continue;
            out.push_back(s);
            if (Ops::size(s) >= k)
                continue;
            for (std::size_t j = 0; j < universe_.size(); ++j)
                if (!Ops::contains(s, j))
                    frontier.push_back(Ops::with(s, j));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const ProblemInstance& inst_;
    const ElementSet& universe_;
    const OracleOptions& opt_;
    std::optional<int> q_;
};

SolveResult single_set(const ProblemInstance& inst, const ElementSet& universe) {
    SolveResult result;
    const auto k = static_cast<std::size_t>(inst.k);
    const bool exact = traits(inst.kind).objective == Objective::AtLeast;
    ElementSet hit;
    bool found = false;
    // For "at least k" it suffices to look at size exactly k: every property here that uses
    // that objective is closed under taking subsets.
    for_each_combination(universe.size(), k, [&](const std::vector<std::size_t>& pick) {
        if (exact && pick.size() != k)
            return false;
        ElementSet F;
        for (auto j : pick)
            F.push_back(universe[j]);
        for (std::size_t i = 0; i < inst.tau(); ++i)
            if (!satisfies(inst.kind, inst.graph.layer(i), F, inst.attrs))
                return false;
        hit = std::move(F);
        found = true;
        return true;
    });
    if (!found) {
        result.verdict = Verdict::No;
        return result;
    }
    result.verdict = Verdict::Yes;
    result.best_insertions = 0;
    result.solution = SolutionSequence{std::vector<ElementSet>(inst.tau(), hit)};
    return result;
}

} // namespace

std::uint64_t oracle_cap_from_env() {
    const char* raw = std::getenv("GMS_ORACLE_CAP");
    if (!raw || !*raw)
        return kDefaultOracleCap;
    std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos)
        throw Error("GMS_ORACLE_CAP must be a positive integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw Error("GMS_ORACLE_CAP out of range: '" + text + "'");
    }
}

SolveResult oracle_solve(const ProblemInstance& inst, const OracleOptions& opt) {
    inst.validate();
    const std::uint64_t cap = opt.cap.value_or(oracle_cap_from_env());
    const ElementSet universe = element_universe(inst);
    const std::uint64_t count = count_small_subsets(universe.size(), static_cast<std::uint64_t>(inst.k));
    if (count > cap)
        throw OracleTooLarge(std::to_string(count) + " candidate sets per layer, cap " + std::to_string(cap));

    if (traits(inst.kind).single_set)
        return single_set(inst, universe);

    std::optional<int> q = opt.q ? opt.q : inst.q;
    if (universe.size() <= 64)
        return LayeredOracle<BitKeys>(inst, universe, opt, q).run();
    return LayeredOracle<VecKeys>(inst, universe, opt, q).run();
}

} // namespace gms
