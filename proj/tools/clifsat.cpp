// clifsat: SAT via the Clifford algebra of R^{n,n}.
//
// Subcommands: solve, expand, unsat-test, cover, gen, bench, verify.
// Exit codes follow solver convention: 10 satisfiable, 20 unsatisfiable,
// 1 error (and 0 for gen/bench).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "clifsat/dimacs.hpp"
#include "clifsat/run.hpp"
#include "clifsat/symmetry.hpp"

namespace {

using namespace clifsat;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_report(const nlohmann::json& j, bool json_output) {
    if (json_output) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (j.contains("status")) std::cout << "s " << j["status"].get<std::string>() << '\n';
    if (j.contains("witness") && !j["witness"].is_null()) {
        std::cout << "v";
        for (const auto& lit : j["witness"]) std::cout << ' ' << lit.get<int>();
        std::cout << " 0\n";
    }
    if (j.contains("warnings"))
        for (const auto& w : j["warnings"]) std::cout << "c warning: " << w.get<std::string>() << '\n';
}

struct CommonOpts {
    std::string file;
    std::string method = "symmetry";
    std::uint64_t seed = 1;
    int guard = max_n();
    double tolerance = kDefaultTolerance;
    int givens_steps = 16;
    std::size_t samples = 10000;
    std::string format = "json";

    void attach(CLI::App* app, bool with_method) {
        app->add_option("file", file, "DIMACS CNF file ('-' or absent for stdin)");
        if (with_method)
            app->add_option("--method", method,
                            "dnf | symmetry | o1n-cover | on-cover | oracle");
        app->add_option("--seed", seed, "random seed");
        app->add_option("--max-n", guard, "guard on variable count (2^n allocations)");
        app->add_option("--tolerance", tolerance, "numeric tolerance for the O(n) layer");
        app->add_option("--givens-steps", givens_steps, "Givens grid steps per angle");
        app->add_option("--samples", samples, "sample budget for the O(n) cover search");
        app->add_option("--format", format, "json | text")
            ->check(CLI::IsMember({"json", "text"}));
    }

    RunConfig to_config() const {
        RunConfig cfg;
        const auto m = method_from_string(method);
        if (!m) throw error("unknown method '" + method + "'");
        cfg.method = *m;
        cfg.seed = seed;
        cfg.guard = guard;
        cfg.tolerance = tolerance;
        cfg.givens_steps = givens_steps;
        cfg.cover_samples = samples;
        cfg.json_output = format == "json";
        return cfg;
    }
};

int cmd_solve(const CommonOpts& opts) {
    const DimacsDocument doc = parse_dimacs(read_input(opts.file));
    const RunResult result = run(opts.to_config(), doc);
    print_report(result.report, opts.format == "json");
    return result.exit_code;
}

int cmd_expand(const CommonOpts& opts, std::size_t limit) {
    const DimacsDocument doc = parse_dimacs(read_input(opts.file));
    RunConfig cfg = opts.to_config();
    set_max_n(cfg.guard);
    const CnfFormula f = doc.to_formula();
    check_dimension(f.n);

    const auto atoms = dnf_expand(f);
    nlohmann::json j;
    j["status"] = atoms.empty() ? "UNSAT" : "SAT";
    j["method"] = "dnf";
    j["n"] = f.n;
    j["m"] = f.clauses.size();
    j["expansion_size"] = atoms.size();
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t i = 0; i < atoms.size() && i < limit; ++i)
        list.push_back(witness_literals(atoms[i]));
    j["atoms"] = list;
    j["truncated"] = atoms.size() > limit;

    if (opts.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "s " << j["status"].get<std::string>() << " (" << atoms.size()
                  << " satisfying atoms)\n";
        for (const auto& atom : j["atoms"]) {
            std::cout << "v";
            for (const auto& lit : atom) std::cout << ' ' << lit.get<int>();
            std::cout << " 0\n";
        }
    }
    return atoms.empty() ? kExitUnsat : kExitSat;
}

int cmd_unsat_test(const CommonOpts& opts, const std::string& backend) {
    const DimacsDocument doc = parse_dimacs(read_input(opts.file));
    set_max_n(opts.guard);
    const CnfFormula f = doc.to_formula();
    check_dimension(f.n);

    const SymmetryBackend b =
        backend == "multivector" ? SymmetryBackend::multivector : SymmetryBackend::atomset;
    const SymmetryReport report = symmetry_test(f, b);

    nlohmann::json j;
    j["status"] = report.verdict == SolveStatus::UNSAT ? "UNSAT" : "SAT";
    j["method"] = "symmetry-test";
    j["backend"] = to_string(report.backend);
    j["n"] = f.n;
    j["m"] = f.clauses.size();
    j["symmetric_under"] = report.symmetric_under;
    if (opts.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "s " << j["status"].get<std::string>() << '\n';
        std::cout << "c symmetric generators:";
        for (std::size_t i = 0; i < report.symmetric_under.size(); ++i)
            if (report.symmetric_under[i]) std::cout << ' ' << (i + 1);
        std::cout << '\n';
    }
    return report.verdict == SolveStatus::UNSAT ? kExitUnsat : kExitSat;
}

int cmd_cover(const CommonOpts& opts, const std::string& which) {
    const DimacsDocument doc = parse_dimacs(read_input(opts.file));
    set_max_n(opts.guard);
    const CnfFormula f = doc.to_formula();
    check_dimension(f.n);

    if (which == "o1n") {
        const CoverVerdict v = o1n_cover_test(f);
        nlohmann::json j;
        j["status"] = v.status == SolveStatus::UNSAT ? "UNSAT" : "SAT";
        j["method"] = "o1n-cover";
        j["n"] = f.n;
        j["m"] = f.clauses.size();
        j["covered"] = v.covered;
        j["group_order"] = (std::uint64_t{1} << f.n);
        j["witness"] = nullptr;
        if (v.witness) j["witness"] = witness_literals(atom_of_lambda(*v.witness));
        print_report(j, opts.format == "json");
        return v.status == SolveStatus::UNSAT ? kExitUnsat : kExitSat;
    }

    CoverConfig cc;
    cc.samples = opts.samples;
    cc.seed = opts.seed;
    cc.givens_steps = opts.givens_steps;
    cc.eps = opts.tolerance;
    const CoverSearchReport report = cover_search(f, cc);
    nlohmann::json j;
    j["status"] = report.uncovered.empty() ? "UNSAT" : "SAT";
    j["method"] = "on-cover";
    j["experimental"] = true;
    j["sign_convention"] = ClassLabel::kConvention;
    j["n"] = f.n;
    j["m"] = f.clauses.size();
    j["samples"] = report.samples;
    j["classified"] = report.classified;
    j["indeterminate"] = report.indeterminate;
    j["unclassified_fraction"] = report.unclassified_fraction();
    j["covered_hits"] = report.covered_hits;
    j["consistent_with_o1n"] = report.consistent_with_o1n;
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& l : report.uncovered) witnesses.push_back(witness_literals(atom_of_lambda(l)));
    j["uncovered"] = witnesses;
    j["witness"] = nullptr;
    if (!report.uncovered.empty())
        j["witness"] = witness_literals(atom_of_lambda(report.uncovered.front()));
    print_report(j, opts.format == "json");
    return report.uncovered.empty() ? kExitUnsat : kExitSat;
}

int cmd_verify(const CommonOpts& opts) {
    const DimacsDocument doc = parse_dimacs(read_input(opts.file));
    const RunResult result = run_verify(opts.to_config(), doc);
    if (opts.format == "json") {
        std::cout << result.report.dump(2) << '\n';
    } else {
        std::cout << "s " << result.report["status"].get<std::string>() << '\n'
                  << "c methods agree: " << (result.report["agree"].get<bool>() ? "yes" : "no")
                  << '\n';
    }
    return result.exit_code;
}

int cmd_gen(int n, int m, int k, std::uint64_t seed, const std::string& out_path) {
    const DimacsDocument doc = gen_random_ksat(n, m, k, seed);
    const std::string text = write_dimacs(doc);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw error("cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

int cmd_bench(const std::string& n_list, const std::string& ratio_list, int k, int seeds,
              std::uint64_t seed, const std::string& format) {
    BenchConfig cfg;
    cfg.n_values.clear();
    for (const auto& tok : CLI::detail::split(n_list, ',')) cfg.n_values.push_back(std::stoi(tok));
    cfg.ratios.clear();
    for (const auto& tok : CLI::detail::split(ratio_list, ',')) cfg.ratios.push_back(std::stod(tok));
    cfg.k = k;
    cfg.seeds_per_cell = seeds;
    cfg.seed = seed;

    const nlohmann::json rows = bench(cfg);
    if (format == "json") {
        std::cout << rows.dump(2) << '\n';
        return 0;
    }
    std::cout << "n\tm\tstatus\texpansion\tdnf_ms\tsymmetry_ms\to1n_ms\toracle_ms\n";
    for (const auto& row : rows)
        std::cout << row["n"].get<int>() << '\t' << row["m"].get<int>() << '\t'
                  << row["status"].get<std::string>() << '\t'
                  << row["expansion_size"].get<std::uint64_t>() << '\t'
                  << row["ms_dnf"].get<double>() << '\t' << row["ms_symmetry"].get<double>()
                  << '\t' << row["ms_o1n-cover"].get<double>() << '\t'
                  << row["ms_oracle"].get<double>() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAT in the Clifford algebra of R^{n,n}"};
    app.require_subcommand(1);

    CommonOpts solve_opts, expand_opts, unsat_opts, cover_opts, verify_opts;
    std::size_t expand_limit = 64;
    std::string unsat_backend = "atomset";
    std::string cover_which = "o1n";

    auto* solve = app.add_subcommand("solve", "solve an instance with the chosen method");
    solve_opts.attach(solve, true);

    auto* expand = app.add_subcommand("expand", "full DNF expansion: list satisfying atoms");
    expand_opts.attach(expand, false);
    expand->add_option("--limit", expand_limit, "max atoms to list");

    auto* unsat = app.add_subcommand("unsat-test", "per-generator symmetry test");
    unsat_opts.attach(unsat, false);
    unsat->add_option("--backend", unsat_backend, "atomset | multivector")
        ->check(CLI::IsMember({"atomset", "multivector"}));

    auto* cover = app.add_subcommand("cover", "clause-cover tests over O(1)^n or O(n)");
    cover_opts.attach(cover, false);
    cover->add_option("--group", cover_which, "o1n | on")->check(CLI::IsMember({"o1n", "on"}));

    auto* verify = app.add_subcommand("verify", "run all rigorous methods and compare");
    verify_opts.attach(verify, false);

    int gen_n = 8, gen_m = 24, gen_k = 3;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a random k-SAT instance");
    gen->add_option("--n", gen_n, "variables")->required();
    gen->add_option("--m", gen_m, "clauses")->required();
    gen->add_option("--k", gen_k, "literals per clause");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--output", gen_out, "output file (stdout otherwise)");

    std::string bench_n = "6,8,10", bench_ratios = "2,4.26", bench_format = "text";
    int bench_k = 3, bench_seeds = 5;
    std::uint64_t bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "time every method over an n, m/n grid");
    bench_cmd->add_option("--n", bench_n, "comma-separated n values");
    bench_cmd->add_option("--ratios", bench_ratios, "comma-separated m/n ratios");
    bench_cmd->add_option("--k", bench_k, "literals per clause");
    bench_cmd->add_option("--seeds", bench_seeds, "instances per grid cell");
    bench_cmd->add_option("--seed", bench_seed, "base seed");
    bench_cmd->add_option("--format", bench_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_opts);
        if (expand->parsed()) return cmd_expand(expand_opts, expand_limit);
        if (unsat->parsed()) return cmd_unsat_test(unsat_opts, unsat_backend);
        if (cover->parsed()) return cmd_cover(cover_opts, cover_which);
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_k, gen_seed, gen_out);
        if (bench_cmd->parsed())
            return cmd_bench(bench_n, bench_ratios, bench_k, bench_seeds, bench_seed, bench_format);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return clifsat::kExitError;
    } catch (const clifsat::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return clifsat::kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return clifsat::kExitError;
    }
    return clifsat::kExitError;
}
