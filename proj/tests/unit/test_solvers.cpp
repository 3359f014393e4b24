#include <doctest.h>

#include <array>

#include "gms/error.hpp"
#include "gms/oracle.hpp"
#include "gms/problems.hpp"
#include "gms/random.hpp"
#include "gms/solve.hpp"

using namespace gms;

namespace {

ProblemInstance make(ProblemKind kind, std::size_t n, std::vector<std::vector<Edge>> layers, int k, int ell) {
    ProblemInstance inst;
    inst.kind = kind;
    inst.graph = TemporalGraph(n, std::move(layers));
    inst.k = k;
    inst.ell = ell;
    return inst;
}

void check_normal_form(const ProblemInstance& inst, const SolutionSequence& sol) {
    for (std::size_t i = 1; i < sol.size(); ++i)
        if (satisfies(inst.kind, inst.graph.layer(i - 1), sol.sets[i], inst.attrs))
            CHECK(sol.sets[i - 1] == sol.sets[i]);
}

void check_guesses(const ProblemInstance& inst, const SolveResult& r) {
    CHECK(static_cast<int>(r.guesses.size()) <= 2 * inst.ell + inst.k);
    for (const auto& g : r.guesses)
        CHECK(((g.x == 0) != (g.y == 0)));
}

} // namespace

TEST_CASE("one layer reduces to the static problem") {
    const auto inst = make(ProblemKind::VertexCover, 2, {{Edge(0, 1)}}, 1, 0);
    const auto r = solve_backward(inst);
    REQUIRE(r.yes());
    CHECK(verify_solution(inst, *r.solution).accepted);
    check_guesses(inst, r);
}

TEST_CASE("two disjoint edges force one insertion") {
    for (int ell : {0, 1}) {
        const auto inst = make(ProblemKind::VertexCover, 4, {{Edge(0, 1)}, {Edge(2, 3)}}, 1, ell);
        const auto b = solve_backward(inst);
        const auto f = solve_forward(inst);
        CHECK(b.yes() == (ell == 1));
        CHECK(f.yes() == (ell == 1));
        if (b.yes()) {
            CHECK(verify_solution(inst, *b.solution).insertion_total == 1);
            CHECK(verify_solution(inst, *f.solution).accepted);
        }
    }
}

TEST_CASE("forward solver on a triangle") {
    const auto inst = make(ProblemKind::VertexCover, 3, {{Edge(0, 1), Edge(0, 2), Edge(1, 2)}}, 2, 0);
    const auto r = solve_forward(inst);
    REQUIRE(r.yes());
    CHECK(r.solution->sets[0].size() == 2);
    CHECK(verify_solution(inst, *r.solution).accepted);
}

TEST_CASE("path contraction on two overlapping triangles") {
    const auto inst = make(ProblemKind::PathContraction, 4,
                           {{Edge(0, 1), Edge(0, 2), Edge(1, 2)}, {Edge(1, 2), Edge(1, 3), Edge(2, 3)}}, 1, 1);
    for (const auto& r : {solve_backward(inst), solve_forward(inst), oracle_solve(inst)}) {
        REQUIRE(r.yes());
        CHECK(verify_solution(inst, *r.solution).accepted);
    }
    auto tight = inst;
    tight.ell = 0;
    // {1-2} works in both layers, so no insertion is needed
    CHECK(solve_backward(tight).yes());
    CHECK(solve_forward(tight).yes());
}

TEST_CASE("unsupported kinds and local budgets are refused") {
    auto inst = make(ProblemKind::DominatingSet, 2, {{Edge(0, 1)}}, 1, 0);
    CHECK_THROWS_AS(solve_backward(inst), UnsupportedKind);
    CHECK_THROWS_AS(solve_forward(inst), UnsupportedKind);
    inst.kind = ProblemKind::ClusterEditing;
    CHECK_NOTHROW(solve_backward(inst));
    CHECK_THROWS_AS(solve_forward(inst), UnsupportedKind);
    inst.kind = ProblemKind::VertexCover;
    inst.q = 1;
    CHECK_THROWS_AS(solve_backward(inst), UnsupportedKind);
    CHECK_THROWS_AS(solve_forward(inst), UnsupportedKind);
}

TEST_CASE("repair_budget") {
    const SolutionSequence fine{{{Element::vertex(0)}, {Element::vertex(0)}}};
    CHECK(repair_budget(fine, 1, 0) == fine);

    const SolutionSequence late{{{}, {Element::vertex(3)}}};
    const auto fixed = repair_budget(late, 1, 0);
    CHECK(fixed == SolutionSequence{{{Element::vertex(3)}, {Element::vertex(3)}}});
    CHECK(fixed.insertion_total() == 0);

    const SolutionSequence costly{{{Element::vertex(0)}, {Element::vertex(1)}}};
    CHECK_THROWS_AS(repair_budget(costly, 1, 0), PreconditionError);
    CHECK_THROWS_AS(repair_budget(SolutionSequence{{{Element::vertex(0), Element::vertex(1)}}}, 1, 5),
                    PreconditionError);
}

TEST_CASE("cancellation stops the search") {
    Rng rng(9);
    RandomSpec spec;
    spec.n_min = spec.n_max = 8;
    spec.tau_min = spec.tau_max = 5;
    spec.k_min = spec.k_max = 3;
    spec.ell_min = spec.ell_max = 3;
    const auto inst = random_instance(rng, spec);
    std::atomic<bool> cancel{true};
    SolveOptions opt;
    opt.cancel = &cancel;
    const auto r = solve_backward(inst, opt);
    CHECK((r.verdict == Verdict::Timeout || r.verdict == Verdict::Yes || r.verdict == Verdict::No));
    if (r.verdict == Verdict::Yes)
        CHECK(verify_solution(inst, *r.solution).accepted);
}

TEST_CASE("solvers agree with the oracle on small random instances") {
    Rng rng(505);
    for (auto kind : std::array{ProblemKind::VertexCover, ProblemKind::PathContraction, ProblemKind::ClusterEditing,
                                ProblemKind::ClusterEdgeDeletion}) {
        int yes = 0;
        for (int trial = 0; trial < 60; ++trial) {
            RandomSpec spec;
            spec.kind = kind;
            spec.n_max = 7;
            spec.tau_max = 4;
            const auto inst = random_instance(rng, spec);
            CAPTURE(name_of(kind));
            CAPTURE(trial);
            const bool expected = oracle_solve(inst).yes();
            yes += expected;

            const auto b = solve_backward(inst);
            CHECK(b.yes() == expected);
            if (b.yes()) {
                const auto rep = verify_solution(inst, *b.solution);
                CHECK(rep.accepted);
                CHECK(rep.insertion_total == b.solution->insertion_total());
                check_normal_form(inst, *b.solution);
                check_guesses(inst, b);
            }
            SolveOptions no_memo;
            no_memo.memo = false;
            const auto plain = solve_backward(inst, no_memo);
            CHECK(plain.verdict == b.verdict);
            CHECK(plain.solution == b.solution);
            SolveOptions two;
            two.threads = 2;
            const auto par = solve_backward(inst, two);
            CHECK(par.verdict == b.verdict);
            CHECK(par.solution == b.solution);

            if (!traits(kind).monotone)
                continue;
            const auto f = solve_forward(inst);
            CHECK(f.yes() == expected);
            if (f.yes()) {
                CHECK(verify_solution(inst, *f.solution).accepted);
                REQUIRE(f.charge);
                CHECK(*f.charge <= inst.k + inst.ell);
            }
            const auto f2 = solve_forward(inst, two);
            CHECK(f2.solution == f.solution);
        }
        CHECK(yes > 5);
    }
}
