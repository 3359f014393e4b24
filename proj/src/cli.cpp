#include "gms/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gms/enumeration.hpp"
#include "gms/error.hpp"
#include "gms/io.hpp"
#include "gms/kernels.hpp"
#include "gms/oracle.hpp"
#include "gms/problems.hpp"
#include "gms/random.hpp"
#include "gms/reductions.hpp"
#include "gms/solve.hpp"
#include "gms/source_io.hpp"

namespace gms::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

enum class Algo { Backward, Forward, Oracle };

Algo parse_algo(const std::string& name) {
    if (name == "backward")
        return Algo::Backward;
    if (name == "forward")
        return Algo::Forward;
    if (name == "oracle")
        return Algo::Oracle;
    throw Error("unknown algorithm '" + name + "' (backward, forward, oracle)");
}

std::string algo_name(Algo a) {
    switch (a) {
    case Algo::Backward:
        return "backward";
    case Algo::Forward:
        return "forward";
    case Algo::Oracle:
        return "oracle";
    }
    return {};
}

/// Verdict of one run, including the ways a run can end without an answer.
struct Outcome {
    std::string status; // YES, NO, TIMEOUT, UNSUPPORTED, TOO_LARGE
    SolveResult result;
    double ms = 0;
    std::string message;

    bool decided() const { return status == "YES" || status == "NO"; }
};

Outcome run_algo(Algo algo, const ProblemInstance& inst, const SolveOptions& opt, std::optional<int> q) {
    Outcome out;
    const auto start = Clock::now();
    try {
        switch (algo) {
        case Algo::Backward:
            out.result = solve_backward(inst, opt);
            break;
        case Algo::Forward:
            out.result = solve_forward(inst, opt);
            break;
        case Algo::Oracle: {
            OracleOptions oo;
            oo.q = q;
            out.result = oracle_solve(inst, oo);
            break;
        }
        }
        out.status = std::string(to_string(out.result.verdict));
    } catch (const UnsupportedKind& e) {
        out.status = "UNSUPPORTED";
        out.message = e.what();
    } catch (const OracleTooLarge& e) {
        out.status = "TOO_LARGE";
        out.message = e.what();
    }
    out.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
}

ProblemInstance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

json solution_json(const SolutionSequence& sol) {
    json sets = json::array();
    for (const auto& s : sol.sets) {
        json layer = json::array();
        for (const auto& e : s)
            layer.push_back(to_string(e));
        sets.push_back(std::move(layer));
    }
    return sets;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms << "ms";
    return os.str();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

SolveOptions solve_options(unsigned threads, double timeout, bool no_memo) {
    SolveOptions opt;
    opt.threads = std::max(1u, threads);
    opt.memo = !no_memo;
    if (timeout > 0)
        opt.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeout));
    return opt;
}

// solve -----------------------------------------------------------------------

struct SolveArgs {
    std::string instance;
    std::string algo = "backward";
    std::optional<int> q;
    bool json = false;
    std::string witness;
    unsigned threads = 1;
    double timeout = 0;
    bool no_memo = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    ProblemInstance inst = load_instance(a.instance);
    const Algo algo = parse_algo(a.algo);
    if (a.q) {
        if (algo != Algo::Oracle)
            throw Error("--q is only supported with --algo oracle");
        if (*a.q < 1)
            throw Error("--q must be at least 1");
        inst.q = a.q;
    }
    Outcome o = run_algo(algo, inst, solve_options(a.threads, a.timeout, a.no_memo), a.q);
    if (!o.decided() && o.status != "TIMEOUT")
        throw Error(o.message);

    std::optional<VerifyReport> report;
    if (o.result.yes()) {
        if (!o.result.solution)
            throw Error(a.algo + " answered YES without a witness");
        report = verify_solution(inst, *o.result.solution);
        if (!report->accepted)
            throw Error("verifier rejected the " + a.algo + " witness: " + report->summary());
        if (!a.witness.empty())
            write_text_file(a.witness, serialize_solution(*o.result.solution));
    }

    if (a.json) {
        json j;
        j["algo"] = a.algo;
        j["verdict"] = o.status;
        j["elapsed_ms"] = o.ms;
        j["insertions"] = report ? json(report->insertion_total) : json(nullptr);
        j["charge"] = o.result.charge ? json(*o.result.charge) : json(nullptr);
        j["best_insertions"] = o.result.best_insertions ? json(*o.result.best_insertions) : json(nullptr);
        j["solution"] = o.result.solution ? solution_json(*o.result.solution) : json(nullptr);
        json guesses = json::array();
        for (const auto& g : o.result.guesses)
            guesses.push_back({g.x, g.y});
        j["guesses"] = guesses;
        j["stats"] = {{"nodes", o.result.stats.nodes},
                      {"memo_hits", o.result.stats.memo_hits},
                      {"enumerations", o.result.stats.enumerations}};
        j["note"] = o.result.note;
        out << j.dump(2) << '\n';
    } else {
        out << o.status;
        if (report)
            out << " insertions=" << report->insertion_total;
        out << " elapsed=" << format_ms(o.ms) << '\n';
        if (!o.result.note.empty())
            out << "note: " << o.result.note << '\n';
    }
    if (o.status == "TIMEOUT")
        return kExitError;
    return o.result.yes() ? kExitYes : kExitNo;
}

// verify ----------------------------------------------------------------------

int cmd_verify(const std::string& inst_path, const std::string& sol_path, bool as_json, std::ostream& out) {
    const ProblemInstance inst = load_instance(inst_path);
    const SolutionSequence sol = parse_solution(read_text_file(sol_path), inst.tau());
    const VerifyReport r = verify_solution(inst, sol);
    if (as_json) {
        json j;
        j["accepted"] = r.accepted;
        j["insertions"] = r.insertion_total;
        j["budget_ok"] = r.budget_ok;
        j["layer_satisfied"] = r.layer_satisfied;
        j["layer_size_ok"] = r.layer_size_ok;
        j["local_budget_ok"] = r.local_budget_ok ? json(*r.local_budget_ok) : json(nullptr);
        j["failures"] = r.failures;
        out << j.dump(2) << '\n';
    } else {
        out << r.summary() << '\n';
    }
    return r.accepted ? kExitYes : kExitNo;
}

// kernelize -------------------------------------------------------------------

int cmd_kernelize(const std::string& inst_path, const std::string& out_path, std::ostream& out) {
    const ProblemInstance inst = load_instance(inst_path);
    const TemporalKernel tk = build_temporal_kernel(inst);
    json map;
    map["original_ids"] = tk.original_ids;
    map["rejecting_layer"] = tk.rejecting_layer;
    map["verdict"] = tk.instance ? "kernelized" : "no_instance";
    write_text_file(out_path + ".map.json", map.dump(2) + "\n");
    if (!tk.instance) {
        out << "NO layer " << tk.rejecting_layer << " has no solution of size <= k\n";
        return kExitNo;
    }
    write_text_file(out_path, serialize_instance(*tk.instance));
    out << "KERNEL n=" << tk.instance->n() << " tau=" << tk.instance->tau()
        << " edges=" << tk.instance->graph.underlying().edge_count() << '\n';
    return kExitYes;
}

// generate --------------------------------------------------------------------

struct GenerateArgs {
    std::string reduction;
    std::string source;
    int param = 0;
    std::string out;
    std::string witness_from;
    std::string witness_out;
    std::string meta_out;
    bool random = false;
    std::string problem = "vc";
    std::uint64_t seed = 1;
    std::size_t count = 1;
    std::string out_dir;
    std::size_t n_max = 8, tau_max = 5;
    int k_max = 3, ell_max = 3;
    double edge_prob = 0.3;
};

ReductionOutput build_reduction(const std::string& name, const std::string& source_text, int param) {
    auto graph = [&] { return parse_source_graph(source_text); };
    if (name == "clique-vc")
        return clique_to_gm_vertex_cover(graph().graph, param);
    if (name == "clique-pc")
        return clique_to_gm_path_contraction(graph().graph, param);
    if (name == "clique-ced")
        return clique_to_gm_cluster_edge_deletion(graph().graph, param);
    if (name == "ds-pds")
        return dominating_set_to_gm_planar_ds(graph().graph, param);
    if (name == "sc-eds")
        return set_cover_to_gm_planar_eds(parse_set_family(source_text), param);
    if (name == "mcc-stpath") {
        auto g = graph();
        if (g.colors.empty())
            throw Error("mcc-stpath needs a colored source graph ('n <v> <color>' lines)");
        return mcc_to_gm_st_path(g.graph, g.colors, param);
    }
    if (name == "clique-stpath")
        return clique_to_gm_st_path(graph().graph, param);
    if (name == "hs-stcut")
        return hitting_set_to_gm_st_cut(parse_set_family(source_text), param);
    if (name == "is-matching")
        return independent_set_to_gm_matching(graph().graph, param);
    std::string names;
    for (const auto& info : reduction_catalog())
        names += (names.empty() ? "" : ", ") + info.name;
    throw Error("unknown reduction '" + name + "' (" + names + ")");
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    if (a.random) {
        RandomSpec spec;
        spec.kind = problem_kind_from_name(a.problem);
        spec.n_max = a.n_max;
        spec.tau_max = a.tau_max;
        spec.k_max = a.k_max;
        spec.ell_max = a.ell_max;
        spec.edge_prob = a.edge_prob;
        Rng rng(a.seed);
        if (!a.out_dir.empty()) {
            fs::create_directories(a.out_dir);
            for (std::size_t i = 0; i < a.count; ++i) {
                std::ostringstream name;
                name << "rand_" << a.problem << '_' << std::setw(4) << std::setfill('0') << i + 1 << ".gms";
                write_text_file(fs::path(a.out_dir) / name.str(), serialize_instance(random_instance(rng, spec)));
            }
            out << "wrote " << a.count << " instances to " << a.out_dir << '\n';
            return kExitYes;
        }
        if (a.count != 1)
            throw Error("--count above 1 needs --out-dir");
        const std::string text = serialize_instance(random_instance(rng, spec));
        if (a.out.empty())
            out << text;
        else
            write_text_file(a.out, text);
        return kExitYes;
    }

    if (a.reduction.empty() || a.source.empty())
        throw Error("generate needs --reduction and --source, or --random");
    ReductionOutput r = build_reduction(a.reduction, read_text_file(a.source), a.param);
    std::ostream& info = a.out.empty() ? err : out;
    const std::string text = serialize_instance(r.instance);
    if (a.out.empty())
        out << text;
    else
        write_text_file(a.out, text);
    info << "generated " << a.reduction << " n=" << r.instance.n() << " tau=" << r.instance.tau()
         << " k=" << r.instance.k << " ell=" << r.instance.ell << '\n';
    if (!a.meta_out.empty())
        write_text_file(a.meta_out, json(r.meta).dump(2) + "\n");
    if (!a.witness_from.empty()) {
        std::string target = a.witness_out;
        if (target.empty()) {
            if (a.out.empty())
                throw Error("--witness-from needs --witness-out or --out");
            target = a.out + ".sol";
        }
        const SolutionSequence sol = r.witness(parse_certificate(read_text_file(a.witness_from)));
        write_text_file(target, serialize_solution(sol));
        const VerifyReport rep = verify_solution(r.instance, sol);
        info << "witness " << rep.summary() << '\n';
        if (!rep.accepted)
            return kExitNo;
    }
    return kExitYes;
}

// enumerate -------------------------------------------------------------------

int cmd_enumerate(const std::string& inst_path, std::size_t layer, const std::string& forced,
                  std::optional<int> k, std::ostream& out) {
    const ProblemInstance inst = load_instance(inst_path);
    if (layer < 1 || layer > inst.tau())
        throw Error("--layer must be in 1.." + std::to_string(inst.tau()));
    EnumerationRequest req;
    req.kind = inst.kind;
    req.layer = &inst.graph.layer(layer - 1);
    req.k = k.value_or(inst.k);
    std::vector<Element> elems;
    for (const auto& w : split_list(forced))
        elems.push_back(parse_element(w));
    req.forced = make_set(std::move(elems));
    const auto sets = enumerate_supersets(req);
    out << "count=" << sets.size() << '\n';
    for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? " " : "") << to_string(s[i]);
        out << '\n';
    }
    return sets.empty() ? kExitNo : kExitYes;
}

// bench -----------------------------------------------------------------------

struct BenchArgs {
    std::string suite;
    std::string algos = "backward,forward,oracle";
    double timeout = 10;
    std::string csv;
    unsigned threads = 1;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    std::vector<Algo> algos;
    for (const auto& name : split_list(a.algos))
        algos.push_back(parse_algo(name));
    if (algos.empty())
        throw Error("--algos is empty");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.suite))
        if (entry.is_regular_file() && entry.path().extension() == ".gms")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw Error("no .gms files in " + a.suite);

    std::ostringstream csv;
    csv << "instance,problem,n,tau,k,ell";
    for (Algo al : algos)
        csv << ',' << algo_name(al) << "_verdict," << algo_name(al) << "_ms," << algo_name(al) << "_insertions";
    csv << ",agree\n";

    std::size_t disagreements = 0, rejected = 0;
    for (const auto& file : files) {
        const ProblemInstance inst = load_instance(file.string());
        csv << file.filename().string() << ',' << name_of(inst.kind) << ',' << inst.n() << ',' << inst.tau() << ','
            << inst.k << ',' << inst.ell;
        std::optional<std::string> decided;
        bool agree = true;
        out << file.filename().string();
        for (Algo al : algos) {
            Outcome o = run_algo(al, inst, solve_options(a.threads, a.timeout, false), std::nullopt);
            std::string ins;
            if (o.result.yes() && o.result.solution) {
                const VerifyReport rep = verify_solution(inst, *o.result.solution);
                if (!rep.accepted) {
                    ++rejected;
                    o.status = "REJECTED";
                }
                ins = std::to_string(rep.insertion_total);
            }
            if (o.decided()) {
                if (decided && *decided != o.status)
                    agree = false;
                decided = o.status;
            }
            csv << ',' << o.status << ',' << std::fixed << std::setprecision(3) << o.ms << ',' << ins;
            out << ' ' << algo_name(al) << '=' << o.status;
        }
        if (!agree)
            ++disagreements;
        csv << ',' << (agree ? "yes" : "no") << '\n';
        out << (agree ? "" : " DISAGREE") << '\n';
    }
    if (!a.csv.empty())
        write_text_file(a.csv, csv.str());
    out << files.size() << " instances, " << disagreements << " disagreements, " << rejected << " rejected witnesses\n";
    if (disagreements || rejected)
        throw Error("algorithms disagree or produced rejected witnesses");
    return kExitYes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Global multistage graph problem solver"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Decide an instance");
    solve->add_option("instance", sa.instance, "Instance file")->required();
    solve->add_option("--algo", sa.algo, "backward, forward or oracle");
    solve->add_option("--q", sa.q, "Local budget per step (oracle only)");
    solve->add_flag("--json", sa.json, "Print a JSON object");
    solve->add_option("--witness", sa.witness, "Write the solution sequence here");
    solve->add_option("--threads", sa.threads, "Worker threads");
    solve->add_option("--timeout", sa.timeout, "Seconds before the search gives up (0 = none)");
    solve->add_flag("--no-memo", sa.no_memo, "Disable memoization");

    std::string v_inst, v_sol;
    bool v_json = false;
    auto* verify = app.add_subcommand("verify", "Check a solution sequence");
    verify->add_option("instance", v_inst, "Instance file")->required();
    verify->add_option("solution", v_sol, "Solution file")->required();
    verify->add_flag("--json", v_json, "Print a JSON object");

    std::string k_inst, k_out;
    auto* kernelize = app.add_subcommand("kernelize", "Build the temporal kernel");
    kernelize->add_option("instance", k_inst, "Instance file")->required();
    kernelize->add_option("--out", k_out, "Kernel instance file; the id map goes to <out>.map.json")->required();

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "Generate reduction or random instances");
    generate->add_option("--reduction", ga.reduction, "Reduction name");
    generate->add_option("--source", ga.source, "Source graph or set family");
    generate->add_option("--param", ga.param, "Source parameter");
    generate->add_option("--out", ga.out, "Instance file (stdout if absent)");
    generate->add_option("--witness-from", ga.witness_from, "Source certificate file");
    generate->add_option("--witness-out", ga.witness_out, "Witness solution file");
    generate->add_option("--meta-out", ga.meta_out, "Structural counts as JSON");
    generate->add_flag("--random", ga.random, "Random instances instead of a reduction");
    generate->add_option("--problem", ga.problem, "Problem for --random");
    generate->add_option("--seed", ga.seed, "Seed for --random");
    generate->add_option("--count", ga.count, "Number of random instances");
    generate->add_option("--out-dir", ga.out_dir, "Directory for --count instances");
    generate->add_option("--n-max", ga.n_max, "Largest vertex count");
    generate->add_option("--tau-max", ga.tau_max, "Largest lifetime");
    generate->add_option("--k-max", ga.k_max, "Largest k");
    generate->add_option("--ell-max", ga.ell_max, "Largest ell");
    generate->add_option("--edge-prob", ga.edge_prob, "Edge probability of the first layer");

    std::string e_inst, e_forced;
    std::size_t e_layer = 1;
    std::optional<int> e_k;
    auto* enumerate = app.add_subcommand("enumerate", "List superset solutions of one layer");
    enumerate->add_option("instance", e_inst, "Instance file")->required();
    enumerate->add_option("--layer", e_layer, "1-based layer")->required();
    enumerate->add_option("--forced", e_forced, "Forced elements, comma or space separated");
    enumerate->add_option("--k", e_k, "Size cap (defaults to the instance's k)");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Run several algorithms over a directory");
    bench->add_option("--suite", ba.suite, "Directory of .gms files")->required();
    bench->add_option("--algos", ba.algos, "Comma-separated algorithms");
    bench->add_option("--timeout", ba.timeout, "Seconds per run");
    bench->add_option("--csv", ba.csv, "CSV output file");
    bench->add_option("--threads", ba.threads, "Worker threads");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*solve)
            return cmd_solve(sa, out);
        if (*verify)
            return cmd_verify(v_inst, v_sol, v_json, out);
        if (*kernelize)
            return cmd_kernelize(k_inst, k_out, out);
        if (*generate)
            return cmd_generate(ga, out, err);
        if (*enumerate)
            return cmd_enumerate(e_inst, e_layer, e_forced, e_k, out);
        if (*bench)
            return cmd_bench(ba, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace gms::cli
