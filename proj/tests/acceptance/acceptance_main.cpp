// Acceptance suite. One line per criterion: "PASS ACn ..." or "FAIL ACn ...".
// All comparisons are exact; every criterion tolerates zero mismatches.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "gms/enumeration.hpp"
#include "gms/kernels.hpp"
#include "gms/oracle.hpp"
#include "gms/problems.hpp"
#include "gms/random.hpp"
#include "gms/reductions.hpp"
#include "gms/solve.hpp"
#include "reference.hpp"

using namespace gms;

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0)
            first_failure = what;
    }
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int pick_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string tag(ProblemKind kind, std::size_t i) { return std::string(name_of(kind)) + " #" + std::to_string(i); }

std::int64_t c2(std::int64_t x) { return x * (x - 1) / 2; }

/// Random source graph with at least one edge.
StaticGraph source_graph(Rng& rng, std::size_t n, double p) {
    for (;;) {
        auto g = random_graph(rng, n, p);
        if (g.edge_count() > 0)
            return g;
    }
}

// AC1 -------------------------------------------------------------------------

Outcome differential() {
    Outcome o;
    Rng rng(1001);
    std::size_t yes = 0;
    for (auto kind : std::array{ProblemKind::VertexCover, ProblemKind::PathContraction, ProblemKind::ClusterEditing,
                                ProblemKind::ClusterEdgeDeletion}) {
        const bool forward = traits(kind).monotone;
        for (std::size_t i = 0; i < 200; ++i) {
            RandomSpec spec;
            spec.kind = kind;
            const auto inst = random_instance(rng, spec);
            ++o.cases;
            std::vector<SolveResult> results{oracle_solve(inst), solve_backward(inst)};
            if (forward)
                results.push_back(solve_forward(inst));
            yes += results[0].yes();
            for (const auto& r : results) {
                if (r.verdict != results[0].verdict) {
                    o.fail(tag(kind, i) + ": verdicts differ");
                    break;
                }
                if (r.yes() && (!r.solution || !verify_solution(inst, *r.solution).accepted)) {
                    o.fail(tag(kind, i) + ": witness rejected");
                    break;
                }
            }
        }
    }
    o.detail = "vc/pc backward+forward+oracle, ce/ced backward+oracle, " + std::to_string(yes) + " yes";
    return o;
}

// AC2 -------------------------------------------------------------------------

Outcome full_kernel_completeness() {
    Outcome o;
    Rng rng(1002);
    std::size_t minimal_sets = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const auto n = pick(rng, 2, 8);
        const int k = pick_int(rng, 0, 3);
        const auto layer = random_graph(rng, n, i % 2 ? 0.25 : 0.45);
        ++o.cases;

        const auto vc_u = ref::universe(ProblemKind::VertexCover, n, layer);
        const auto vcs = ref::minimal_solutions(ProblemKind::VertexCover, layer, vc_u, k, {});
        minimal_sets += vcs.size();
        const auto buss = buss_kernel(layer, k);
        if (buss.no_instance()) {
            if (!vcs.empty())
                o.fail("graph #" + std::to_string(i) + ": Buss rejected a solvable layer");
        } else {
            for (const auto& S : vcs)
                for (const auto& x : S)
                    if (!std::binary_search(buss.kept_vertices.begin(), buss.kept_vertices.end(), x.u))
                        o.fail("graph #" + std::to_string(i) + ": minimal cover " + to_string(S) +
                               " leaves the Buss kernel");
        }

        const auto pc_u = ref::universe(ProblemKind::PathContraction, n, layer);
        const auto pcs = ref::minimal_solutions(ProblemKind::PathContraction, layer, pc_u, k, {});
        minimal_sets += pcs.size();
        const auto pk = path_contraction_kernel(layer, k);
        if (pk.no_instance()) {
            if (!pcs.empty())
                o.fail("graph #" + std::to_string(i) + ": path contraction kernel rejected a solvable layer");
            continue;
        }
        for (const auto& S : pcs)
            for (const auto& x : S)
                if (std::find(pk.contracted.begin(), pk.contracted.end(), x.pair()) != pk.contracted.end())
                    o.fail("graph #" + std::to_string(i) + ": minimal set " + to_string(S) +
                           " uses a contracted edge");
    }
    o.detail = std::to_string(minimal_sets) + " minimal sets checked";
    return o;
}

// AC3 and AC4 -----------------------------------------------------------------

std::size_t total_edges(const TemporalGraph& g) {
    std::size_t m = 0;
    for (const auto& layer : g.layers())
        m += layer.edge_count();
    return m;
}

Outcome kernel_bounds() {
    Outcome o;
    Rng rng(1003);
    std::size_t kernels = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        RandomSpec spec;
        spec.kind = i % 2 ? ProblemKind::PathContraction : ProblemKind::VertexCover;
        spec.n_max = 12;
        spec.edge_prob = 0.25;
        const auto inst = random_instance(rng, spec);
        const auto k = static_cast<std::size_t>(inst.k);
        ++o.cases;
        for (std::size_t l = 0; l < inst.tau(); ++l) {
            const auto kr = full_kernel(inst.kind, inst.graph.layer(l), inst.k);
            ++kernels;
            if (kr.no_instance())
                continue;
            if (inst.kind == ProblemKind::VertexCover) {
                if (kr.kept_vertices.size() > k * k + 2 * k || kr.kernel_graph.edge_count() > k * k + k)
                    o.fail(tag(inst.kind, i) + ": Buss layer kernel too large");
            } else {
                for (auto size : ref::component_sizes(kr.kernel_graph))
                    if (size > 5 * k + 3)
                        o.fail(tag(inst.kind, i) + ": component of " + std::to_string(size) + " vertices");
            }
        }
        if (inst.kind != ProblemKind::VertexCover)
            continue;
        const auto tk = build_temporal_kernel(inst);
        ++kernels;
        if (!tk.instance)
            continue;
        if (tk.instance->n() > (k * k + 2 * k) * inst.tau() || total_edges(tk.instance->graph) > (k * k + k) * inst.tau())
            o.fail(tag(inst.kind, i) + ": temporal kernel exceeds its bound");
    }
    o.detail = std::to_string(kernels) + " kernelizations";
    return o;
}

Outcome kernel_answers() {
    Outcome o;
    Rng rng(1004);
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        RandomSpec spec;
        const auto inst = random_instance(rng, spec);
        ++o.cases;
        const bool original = oracle_solve(inst).yes();
        const auto tk = build_temporal_kernel(inst);
        bool kernel = false;
        if (tk.instance)
            kernel = oracle_solve(*tk.instance).yes();
        else
            ++rejected;
        if (original != kernel)
            o.fail(tag(inst.kind, i) + ": kernel changes the answer");
    }
    o.detail = std::to_string(rejected) + " rejected by a layer kernel";
    return o;
}

// AC5 -------------------------------------------------------------------------

Outcome enumeration_completeness() {
    Outcome o;
    Rng rng(1005);
    std::size_t expected = 0;
    for (auto kind : std::array{ProblemKind::VertexCover, ProblemKind::PathContraction, ProblemKind::ClusterEditing,
                                ProblemKind::ClusterEdgeDeletion}) {
        for (std::size_t i = 0; i < 300; ++i) {
            const auto n = pick(rng, 2, 7);
            const int k = pick_int(rng, 0, 3);
            const auto layer = random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(i % 4));
            const auto U = ref::universe(kind, n, layer);
            ElementSet F;
            const int f = pick_int(rng, 0, k);
            for (const auto& x : U)
                if (static_cast<int>(F.size()) < f && rng() % 4 == 0)
                    F.push_back(x);
            ++o.cases;
            EnumerationRequest req;
            req.kind = kind;
            req.layer = &layer;
            req.k = k;
            req.forced = F;
            const auto out = enumerate_supersets(req);
            const auto want = ref::minimal_solutions(kind, layer, U, k, F);
            expected += want.size();
            for (const auto& M : want)
                if (!std::binary_search(out.begin(), out.end(), M))
                    o.fail(tag(kind, i) + ": missed " + to_string(M));
            for (const auto& S : out)
                if (!is_subset(F, S) || static_cast<int>(S.size()) > k || !satisfies(kind, layer, S))
                    o.fail(tag(kind, i) + ": returned an invalid set " + to_string(S));
        }
    }
    o.detail = std::to_string(expected) + " minimal solutions expected";
    return o;
}

// AC6 and AC7 -----------------------------------------------------------------

Outcome formula_fidelity() {
    Outcome o;
    Rng rng(1006);
    for (std::size_t i = 0; i < 20; ++i) {
        const auto H = source_graph(rng, pick(rng, 3, 6), 0.5);
        const auto n = static_cast<std::int64_t>(H.vertex_count());
        const auto m = static_cast<std::int64_t>(H.edge_count());
        for (std::int64_t kt : {2, 3}) {
            ++o.cases;
            const std::string where = "source #" + std::to_string(i) + " k=" + std::to_string(kt);
            const auto vc = clique_to_gm_vertex_cover(H, static_cast<int>(kt));
            if (vc.instance.k != 4 * kt * kt + 1)
                o.fail(where + ": vertex cover k");
            if (vc.instance.ell != 4 * kt * kt + 8 * m * kt * kt * (n - kt) + (m - c2(kt)))
                o.fail(where + ": vertex cover ell");
            if (static_cast<std::int64_t>(vc.instance.tau()) != 1 + m * (8 * kt * kt * n + 1))
                o.fail(where + ": vertex cover tau");
            if (clique_to_gm_path_contraction(H, static_cast<int>(kt)).instance.k != 4 * kt * kt + 2)
                o.fail(where + ": path contraction k");
            if (clique_to_gm_cluster_edge_deletion(H, static_cast<int>(kt)).instance.k != 4 * kt * kt + 1)
                o.fail(where + ": cluster edge deletion k");
            const auto st = clique_to_gm_st_path(H, static_cast<int>(kt));
            if (st.instance.k != 2 * kt + c2(kt) || static_cast<std::int64_t>(st.instance.tau()) != kt + c2(kt))
                o.fail(where + ": s-t-path k or tau");
        }
    }
    o.detail = "vc k/ell/tau, pc k, ced k, s-t-path k/tau";
    return o;
}

Outcome clique_witnesses() {
    Outcome o;
    Rng rng(1007);
    std::size_t cliques = 0;
    const std::array<std::size_t, 8> sizes{5, 5, 6, 6, 7, 7, 7, 7};
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto H = source_graph(rng, sizes[i], 0.45);
        for (int kt : {2, 3}) {
            const auto found = ref::cliques(H, static_cast<std::size_t>(kt));
            if (found.empty())
                continue;
            for (const auto& build : {clique_to_gm_vertex_cover, clique_to_gm_path_contraction,
                                      clique_to_gm_cluster_edge_deletion}) {
                const auto r = build(H, kt);
                for (const auto& C : found) {
                    ++o.cases;
                    const auto rep = verify_solution(r.instance, r.witness(C));
                    if (!rep.accepted || rep.insertion_total != r.instance.ell)
                        o.fail(std::string(name_of(r.instance.kind)) + " source #" + std::to_string(i) +
                               ": witness " + (rep.accepted ? "spends " + std::to_string(rep.insertion_total) +
                                                                  " instead of " + std::to_string(r.instance.ell)
                                                            : "rejected"));
                }
            }
            cliques += found.size();
        }
    }
    o.detail = std::to_string(cliques) + " cliques, three reductions each";
    return o;
}

// AC8 -------------------------------------------------------------------------

Outcome reduction_equivalence() {
    Outcome o;
    Rng rng(1008);
    std::size_t yes = 0;
    auto record = [&](const std::string& name, std::size_t i, bool source, const ReductionOutput& r) {
        ++o.cases;
        const bool target = oracle_solve(r.instance).yes();
        yes += source;
        if (source != target)
            o.fail(name + " #" + std::to_string(i) + ": source " + (source ? "YES" : "NO") + ", target " +
                   (target ? "YES" : "NO"));
    };
    for (std::size_t i = 0; i < 50; ++i) {
        const auto H = random_graph(rng, pick(rng, 1, 6), 0.35);
        const int kp = pick_int(rng, 0, 3);
        record("ds-pds", i, ref::domination_number(H) <= static_cast<std::size_t>(kp),
               dominating_set_to_gm_planar_ds(H, kp));
    }
    for (std::size_t i = 0; i < 50; ++i) {
        const auto U = pick(rng, 1, 5);
        SetFamily fam;
        do
            fam = random_set_family(rng, U, pick(rng, 1, 5), 3);
        while (ref::min_set_cover(fam) == SIZE_MAX);
        const int kt = pick_int(rng, 1, 3);
        record("sc-eds", i, ref::min_set_cover(fam) <= static_cast<std::size_t>(kt), set_cover_to_gm_planar_eds(fam, kt));
    }
    for (std::size_t i = 0; i < 50; ++i) {
        const int kp = pick_int(rng, 1, 3);
        const auto n = pick(rng, static_cast<std::size_t>(kp), 5);
        const auto H = random_graph(rng, n, 0.5);
        std::vector<int> colors(n);
        for (std::size_t v = 0; v < n; ++v)
            colors[v] = v < static_cast<std::size_t>(kp) ? static_cast<int>(v) : pick_int(rng, 0, kp - 1);
        std::shuffle(colors.begin(), colors.end(), rng);
        record("mcc-stpath", i, ref::has_multicolored_clique(H, colors, kp), mcc_to_gm_st_path(H, colors, kp));
    }
    for (std::size_t i = 0; i < 50; ++i) {
        const auto fam = random_set_family(rng, pick(rng, 1, 5), pick(rng, 1, 4), 3);
        const int kp = pick_int(rng, 0, 3);
        record("hs-stcut", i, ref::min_hitting_set(fam) <= static_cast<std::size_t>(kp),
               hitting_set_to_gm_st_cut(fam, kp));
    }
    for (std::size_t i = 0; i < 50; ++i) {
        StaticGraph H;
        for (;;) {
            H = random_graph(rng, pick(rng, 2, 6), 0.5);
            const auto deg = H.degrees();
            if (std::none_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 0; }))
                break;
        }
        const int kp = pick_int(rng, 1, 4);
        record("is-matching", i, ref::independence_number(H) >= static_cast<std::size_t>(kp),
               independent_set_to_gm_matching(H, kp));
    }
    o.detail = "ds-pds, sc-eds, mcc-stpath, hs-stcut, is-matching; " + std::to_string(yes) + " yes";
    return o;
}

// AC9 -------------------------------------------------------------------------

bool layers_satisfied(const ProblemInstance& inst, const SolutionSequence& sol) {
    for (std::size_t l = 0; l < inst.tau(); ++l)
        if (!satisfies(inst.kind, inst.graph.layer(l), sol.sets[l]) ||
            static_cast<int>(sol.sets[l].size()) > inst.k)
            return false;
    return true;
}

Outcome budget_repair() {
    Outcome o;
    Rng rng(1009);
    std::size_t repaired = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        RandomSpec spec;
        spec.kind = i % 2 ? ProblemKind::PathContraction : ProblemKind::VertexCover;
        auto inst = random_instance(rng, spec);
        ++o.cases;

        // A per-layer feasible sequence picked at random from the enumerated minimal solutions.
        SolutionSequence raw;
        bool feasible = true;
        for (std::size_t l = 0; l < inst.tau() && feasible; ++l) {
            EnumerationRequest req;
            req.kind = inst.kind;
            req.layer = &inst.graph.layer(l);
            req.k = inst.k;
            const auto sets = enumerate_supersets(req);
            feasible = !sets.empty();
            if (feasible)
                raw.sets.push_back(sets[pick(rng, 0, sets.size() - 1)]);
        }
        if (feasible) {
            const int ell = std::max(0, raw.charge() - inst.k);
            const auto fixed = repair_budget(raw, inst.k, ell);
            ++repaired;
            if (fixed.insertion_total() > ell || !layers_satisfied(inst, fixed))
                o.fail(tag(inst.kind, i) + ": repaired sequence breaks the budget or a layer");
        }

        const auto f = solve_forward(inst);
        if (f.yes()) {
            const auto rep = verify_solution(inst, *f.solution);
            if (!rep.accepted || repair_budget(*f.solution, inst.k, inst.ell) != *f.solution)
                o.fail(tag(inst.kind, i) + ": forward output not in budget form");
        }
    }
    for (std::size_t i = 0; i < 50; ++i) {
        RandomSpec spec;
        const auto inst = random_instance(rng, spec);
        ++o.cases;
        const auto padded = add_empty_layers(inst, pick(rng, 1, inst.tau() + 1), pick(rng, 1, 3));
        if (oracle_solve(inst).yes() != oracle_solve(padded).yes())
            o.fail(tag(inst.kind, i) + ": empty layers change the answer");
    }
    o.detail = std::to_string(repaired) + " sequences repaired, 50 empty-layer checks";
    return o;
}

// AC10 ------------------------------------------------------------------------

Outcome local_budget() {
    Outcome o;
    Rng rng(1010);
    std::size_t yes = 0;
    const std::array kinds{ProblemKind::VertexCover, ProblemKind::PathContraction, ProblemKind::ClusterEdgeDeletion};
    for (std::size_t i = 0; i < 50; ++i) {
        RandomSpec spec;
        spec.kind = kinds[i % kinds.size()];
        spec.k_min = 1;
        spec.tau_max = 4;
        auto inst = random_instance(rng, spec);
        inst.ell = std::max(inst.ell, inst.k + pick_int(rng, 0, 2));
        ++o.cases;
        const bool plain = oracle_solve(inst).yes();
        OracleOptions q1;
        q1.q = 1;
        const bool spread = oracle_solve(ref::spread_empty_layers(inst, static_cast<std::size_t>(inst.k)), q1).yes();
        yes += plain;
        if (plain != spread)
            o.fail(tag(inst.kind, i) + ": q=1 on the spread instance disagrees");
    }
    o.detail = "vc/pc/ced with ell >= k, k empty layers between layers, " + std::to_string(yes) + " yes";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "differential correctness", differential},
        {"AC2", "full-kernel completeness", full_kernel_completeness},
        {"AC3", "kernel size bounds", kernel_bounds},
        {"AC4", "temporal kernel preserves answers", kernel_answers},
        {"AC5", "enumeration completeness", enumeration_completeness},
        {"AC6", "reduction formula fidelity", formula_fidelity},
        {"AC7", "clique witness soundness", clique_witnesses},
        {"AC8", "reduction equivalence at oracle scale", reduction_equivalence},
        {"AC9", "budget repair and empty layers", budget_repair},
        {"AC10", "q-local budget vs spread instance", local_budget},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.failures == 0 && o.cases > 0;
        failed += !pass;
        std::ostringstream line;
        line << (pass ? "PASS " : "FAIL ") << c.id << ' ' << c.title << ": " << o.cases << " cases, " << o.failures
             << " failures (tolerance 0); " << o.detail;
        char t[32];
        std::snprintf(t, sizeof t, " [%.1fs]", secs);
        line << t;
        if (!pass)
            line << "; first: " << o.first_failure;
        std::cout << line.str() << std::endl;
    }
    std::cout << (failed ? "acceptance FAILED: " + std::to_string(failed) + " criteria" : std::string("acceptance passed"))
              << std::endl;
    return failed ? 1 : 0;
}
