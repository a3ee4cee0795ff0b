#pragma once

// The symmetry-based unsatisfiability test: a nonempty SAT problem S is
// unsatisfiable iff gamma_i S gamma_i^{-1} = S for all 2n generators.  On
// atoms the conjugation acts as a variable-bit flip, so the atom-set backend
// checks flip invariance; the multivector backend conjugates S itself.
// The self-reduction solver turns the test into a solver: fix rho_i = T,
// retest, keep T if still satisfiable, else fix F; n rounds build a witness.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/common.hpp"
#include "clifsat/efb.hpp"
#include "clifsat/lattice.hpp"

namespace clifsat {

enum class SymmetryBackend { atomset, multivector };

inline const char* to_string(SymmetryBackend b) {
    return b == SymmetryBackend::atomset ? "atomset" : "multivector";
}

// Multivector backend cost is ~2^n terms with exact coefficients; keep it on
// a shorter leash than the bitset guard.
inline constexpr int kMaxMultivectorBackendN = 16;

struct SymmetryReport {
    std::vector<bool> symmetric_under;  // one entry per generator, 1..2n
    SolveStatus verdict = SolveStatus::SAT;
    SymmetryBackend backend = SymmetryBackend::atomset;

    bool all_symmetric() const {
        for (bool b : symmetric_under)
            if (!b) return false;
        return true;
    }
};

// Theorem hypothesis: at least one clause, none empty, none tautological.
inline void check_symmetry_preconditions(const CnfFormula& f) {
    if (f.clauses.empty())
        throw precondition_error("symmetry test needs a nonempty SAT problem (no clauses given)");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        if (f.clauses[j].empty())
            throw precondition_error("clause " + std::to_string(j + 1) + " is empty");
        if (f.clauses[j].tautological())
            throw precondition_error("clause " + std::to_string(j + 1) + " (" +
                                     f.clauses[j].to_string() + ") is tautological");
    }
}

// The conjugation action of gamma_i on atoms: a bit flip at the touched Witt
// pair.  gamma_i and gamma_{i+n} act identically; the action is an involution.
struct AtomInvolution {
    int var = 1;  // Witt pair index, 1-based

    AtomId operator()(const AtomId& a) const {
        return AtomId(a.n, a.bits ^ (1u << (var - 1)));
    }
};

inline AtomInvolution conjugation_action_on_atoms(GeneratorIndex g, int n) {
    g.check(n);
    return AtomInvolution{g.witt_index(n)};
}

inline SymmetryReport symmetry_test(const CnfFormula& f,
                                    SymmetryBackend backend = SymmetryBackend::atomset) {
    check_symmetry_preconditions(f);
    SymmetryReport report;
    report.backend = backend;
    report.symmetric_under.resize(2 * static_cast<std::size_t>(f.n));

    if (backend == SymmetryBackend::atomset) {
        const AtomSet s = encode_cnf(f);
        for (int g = 1; g <= 2 * f.n; ++g) {
            const int var = GeneratorIndex(g).witt_index(f.n);
            report.symmetric_under[g - 1] = (s.flip_variable(var) == s);
        }
    } else {
        if (f.n > kMaxMultivectorBackendN)
            throw guard_error("multivector backend supports n <= " +
                              std::to_string(kMaxMultivectorBackendN));
        const Multivector s = cnf_multivector(f);
        for (int g = 1; g <= 2 * f.n; ++g)
            report.symmetric_under[g - 1] = (conjugate_by_generator(s, GeneratorIndex(g)) == s);
    }

    report.verdict = report.all_symmetric() ? SolveStatus::UNSAT : SolveStatus::SAT;
    return report;
}

// --- Self-reduction -------------------------------------------------------

namespace detail {

// rho_var := value as clause simplification: satisfied clauses drop,
// falsified literals strip.
struct Substitution {
    CnfFormula reduced;
    bool emptied_clause = false;
};

inline Substitution substitute(const CnfFormula& f, int var, bool value) {
    Substitution out;
    out.reduced.n = f.n;
    for (const auto& c : f.clauses) {
        bool satisfied = false;
        std::vector<Literal> kept;
        kept.reserve(c.size());
        for (const auto& l : c.literals()) {
            if (l.var == var) {
                if (l.negated != value) satisfied = true;
            } else {
                kept.push_back(l);
            }
        }
        if (satisfied) continue;
        if (kept.empty()) out.emptied_clause = true;
        out.reduced.clauses.emplace_back(std::move(kept));
    }
    return out;
}

// Status of a reduced problem.  An emptied clause is UNSAT and a clause-free
// residue SAT without invoking the test, keeping every test invocation inside
// the theorem's nonempty hypothesis.
inline SolveStatus reduced_status(const Substitution& sub, SymmetryBackend backend,
                                  std::uint64_t& symmetry_checks) {
    if (sub.emptied_clause) return SolveStatus::UNSAT;
    if (sub.reduced.clauses.empty()) return SolveStatus::SAT;
    ++symmetry_checks;
    return symmetry_test(sub.reduced, backend).verdict;
}

}  // namespace detail

// The paper's loop: test S; while satisfiable, for each variable in ascending
// order set it true, retest, and keep true iff the reduced problem stays
// satisfiable.  Exactly n rounds for a satisfiable input.
inline SolveReport solve_by_reduction(const CnfFormula& f,
                                      SymmetryBackend backend = SymmetryBackend::atomset) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveReport report;
    report.method = std::string("symmetry-reduction/") + to_string(backend);
    report.counters.clauses = f.clauses.size();

    if (f.clauses.empty()) {
        // No constraints: satisfiable by convention with the all-false atom.
        report.status = SolveStatus::SAT;
        report.witness = AtomId(f.n, 0);
    } else {
        ++report.counters.symmetry_checks;
        if (symmetry_test(f, backend).verdict == SolveStatus::UNSAT) {
            report.status = SolveStatus::UNSAT;
        } else {
            CnfFormula current = f;
            std::uint32_t witness_bits = 0;
            for (int var = 1; var <= f.n; ++var) {
                ++report.counters.test_rounds;
                auto fixed_true = detail::substitute(current, var, true);
                if (detail::reduced_status(fixed_true, backend, report.counters.symmetry_checks) ==
                    SolveStatus::SAT) {
                    witness_bits |= 1u << (var - 1);
                    current = std::move(fixed_true.reduced);
                } else {
                    current = detail::substitute(current, var, false).reduced;
                }
            }
            report.status = SolveStatus::SAT;
            report.witness = AtomId(f.n, witness_bits);
        }
    }

    if (report.witness && !f.satisfied_by(*report.witness))
        throw error("internal: reduction witness fails direct evaluation");

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace clifsat
