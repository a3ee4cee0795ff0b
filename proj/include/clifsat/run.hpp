#pragma once

// Method dispatch and JSON reporting for the CLI.  Every method fills the
// same report shape: {status, witness, method, n, m, counters, timings,
// warnings}.  Exit codes follow solver convention: 10 SAT, 20 UNSAT,
// 1 error.

#include <chrono>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/common.hpp"
#include "clifsat/dimacs.hpp"
#include "clifsat/nullspaces.hpp"
#include "clifsat/ortho.hpp"
#include "clifsat/symmetry.hpp"

namespace clifsat {

inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitError = 1;

enum class Method { dnf, symmetry, o1n_cover, on_cover, oracle };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::dnf: return "dnf";
        case Method::symmetry: return "symmetry";
        case Method::o1n_cover: return "o1n-cover";
        case Method::on_cover: return "on-cover";
        case Method::oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Method> method_from_string(const std::string& s) {
    if (s == "dnf") return Method::dnf;
    if (s == "symmetry") return Method::symmetry;
    if (s == "o1n-cover") return Method::o1n_cover;
    if (s == "on-cover") return Method::on_cover;
    if (s == "oracle") return Method::oracle;
    return std::nullopt;
}

struct RunConfig {
    Method method = Method::symmetry;
    std::uint64_t seed = 1;
    int guard = max_n();
    double tolerance = kDefaultTolerance;
    int givens_steps = 16;
    std::size_t cover_samples = 10000;
    bool json_output = true;
};

// Witness in DIMACS v-line semantics: one signed literal per variable.
inline std::vector<int> witness_literals(const AtomId& atom) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(atom.n));
    for (int v = 1; v <= atom.n; ++v) out.push_back(atom.value(v) ? v : -v);
    return out;
}

inline nlohmann::json report_json(const CnfFormula& f, const SolveReport& report) {
    nlohmann::json j;
    j["status"] = report.status == SolveStatus::SAT ? "SAT" : "UNSAT";
    j["witness"] = nullptr;
    if (report.witness) j["witness"] = witness_literals(*report.witness);
    j["method"] = report.method;
    j["n"] = f.n;
    j["m"] = f.clauses.size();
    j["counters"] = {
        {"atoms_examined", report.counters.atoms_examined},
        {"clauses", report.counters.clauses},
        {"expansion_size", report.counters.expansion_size},
        {"test_rounds", report.counters.test_rounds},
        {"symmetry_checks", report.counters.symmetry_checks},
        {"samples", report.counters.samples},
        {"classified", report.counters.classified},
    };
    j["timings"] = {{"solve_ms", report.wall_ms}};
    j["warnings"] = report.warnings;
    return j;
}

inline SolveReport solve_with_method(const CnfFormula& full, const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveReport report;
    report.method = to_string(cfg.method);
    report.counters.clauses = full.clauses.size();

    // DIMACS tolerance: tautological clauses drop (they encode to I), an
    // empty clause is immediate unsatisfiability.  Both are warned about, and
    // the symmetry machinery only ever sees clauses within its hypothesis.
    CnfFormula f(full.n, {});
    bool empty_clause = false;
    for (std::size_t j = 0; j < full.clauses.size(); ++j) {
        if (full.clauses[j].tautological()) {
            report.warnings.push_back("clause " + std::to_string(j + 1) +
                                      " is tautological; treated as always true");
        } else if (full.clauses[j].empty()) {
            report.warnings.push_back("clause " + std::to_string(j + 1) +
                                      " is empty; instance is trivially unsatisfiable");
            empty_clause = true;
        } else {
            f.clauses.push_back(full.clauses[j]);
        }
    }
    if (empty_clause) {
        report.status = SolveStatus::UNSAT;
        report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                             .count();
        return report;
    }

    switch (cfg.method) {
        case Method::dnf: {
            const AtomSet s = encode_cnf(f);
            report.counters.expansion_size = s.count();
            report.counters.atoms_examined = s.capacity();
            AtomId first;
            if (s.first(first)) {
                report.status = SolveStatus::SAT;
                report.witness = first;
            } else {
                report.status = SolveStatus::UNSAT;
            }
            break;
        }
        case Method::symmetry: {
            report = solve_by_reduction(f);
            report.method = to_string(cfg.method);
            break;
        }
        case Method::o1n_cover: {
            const CoverVerdict v = o1n_cover_test(f);
            report.status = v.status;
            report.counters.expansion_size = (std::size_t{1} << f.n) - v.covered;
            report.counters.atoms_examined = v.covered;
            if (v.witness) report.witness = atom_of_lambda(*v.witness);
            break;
        }
        case Method::on_cover: {
            CoverConfig cc;
            cc.samples = cfg.cover_samples;
            cc.seed = cfg.seed;
            cc.givens_steps = cfg.givens_steps;
            cc.eps = cfg.tolerance;
            const CoverSearchReport cover = cover_search(f, cc);
            report.counters.samples = cover.samples;
            report.counters.classified = cover.classified;
            report.warnings.push_back(
                "experimental: O(n) cover search classifies symmetric involutions only; "
                "not part of the cross-method agreement gate");
            if (!cover.uncovered.empty()) {
                report.status = SolveStatus::SAT;
                report.witness = atom_of_lambda(cover.uncovered.front());
            } else {
                report.status = SolveStatus::UNSAT;
                report.warnings.push_back("no uncovered classified sample in " +
                                          std::to_string(cover.samples) + " draws");
            }
            break;
        }
        case Method::oracle: {
            const auto solutions = brute_force_oracle(f);
            report.counters.atoms_examined = std::size_t{1} << f.n;
            report.counters.expansion_size = solutions.size();
            if (!solutions.empty()) {
                report.status = SolveStatus::SAT;
                report.witness = solutions.front();
            } else {
                report.status = SolveStatus::UNSAT;
            }
            break;
        }
    }

    if (report.witness && !f.satisfied_by(*report.witness))
        throw error("internal: witness fails direct evaluation");
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct RunResult {
    nlohmann::json report;
    int exit_code = kExitError;
};

inline RunResult run(const RunConfig& cfg, const DimacsDocument& doc) {
    set_max_n(cfg.guard);
    CnfFormula f = doc.to_formula();
    check_dimension(f.n);
    SolveReport report = solve_with_method(f, cfg);
    for (const auto& w : doc.warnings) report.warnings.push_back("dimacs: " + w);
    RunResult out;
    out.report = report_json(f, report);
    out.exit_code = report.status == SolveStatus::SAT ? kExitSat : kExitUnsat;
    return out;
}

// Cross-method consistency: run all rigorous methods and compare statuses.
// The experimental on-cover method never takes part.
inline RunResult run_verify(const RunConfig& cfg, const DimacsDocument& doc) {
    set_max_n(cfg.guard);
    CnfFormula f = doc.to_formula();
    check_dimension(f.n);

    nlohmann::json methods = nlohmann::json::object();
    std::optional<SolveStatus> agreed;
    bool agree = true;
    for (Method m : {Method::dnf, Method::symmetry, Method::o1n_cover, Method::oracle}) {
        RunConfig sub = cfg;
        sub.method = m;
        const SolveReport r = solve_with_method(f, sub);
        methods[to_string(m)] = report_json(f, r);
        if (!agreed)
            agreed = r.status;
        else if (*agreed != r.status)
            agree = false;
    }

    RunResult out;
    out.report["status"] = agree ? (*agreed == SolveStatus::SAT ? "SAT" : "UNSAT") : "DISAGREE";
    out.report["agree"] = agree;
    out.report["methods"] = methods;
    out.report["n"] = f.n;
    out.report["m"] = f.clauses.size();
    out.exit_code = !agree ? kExitError : (*agreed == SolveStatus::SAT ? kExitSat : kExitUnsat);
    return out;
}

// --- Benchmark harness ------------------------------------------------------

struct BenchConfig {
    std::vector<int> n_values = {6, 8, 10};
    std::vector<double> ratios = {2.0, 4.26};  // m/n
    int k = 3;
    int seeds_per_cell = 5;
    std::uint64_t seed = 1;
    std::vector<Method> methods = {Method::dnf, Method::symmetry, Method::o1n_cover,
                                   Method::oracle};
};

inline nlohmann::json bench(const BenchConfig& cfg) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n : cfg.n_values)
        for (double ratio : cfg.ratios) {
            const int m = std::max(1, static_cast<int>(ratio * n + 0.5));
            for (int s = 0; s < cfg.seeds_per_cell; ++s) {
                const std::uint64_t seed = cfg.seed + 7919u * static_cast<std::uint64_t>(s);
                const CnfFormula f = gen_random_ksat(n, m, cfg.k, seed).to_formula();
                nlohmann::json row;
                row["n"] = n;
                row["m"] = m;
                row["k"] = cfg.k;
                row["seed"] = seed;
                for (Method method : cfg.methods) {
                    RunConfig rc;
                    rc.method = method;
                    const SolveReport r = solve_with_method(f, rc);
                    row[std::string("ms_") + to_string(method)] = r.wall_ms;
                    if (method == Method::dnf)
                        row["expansion_size"] = r.counters.expansion_size;
                    row["status"] = r.status == SolveStatus::SAT ? "SAT" : "UNSAT";
                }
                rows.push_back(row);
            }
        }
    return rows;
}

}  // namespace clifsat
