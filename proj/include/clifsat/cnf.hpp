#pragma once

// CNF representation and its Clifford encoding.  A clause C_j with falsifying
// partial assignment z_j encodes as I - z_j; the whole problem as
// S = prod_j (I - z_j), whose expansion is the DNF: the atoms of S are
// exactly the satisfying assignments, and S = 0 means unsatisfiable.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clifsat/common.hpp"
#include "clifsat/efb.hpp"
#include "clifsat/lattice.hpp"

namespace clifsat {

struct Literal {
    int var = 0;
    bool negated = false;

    Literal() = default;
    Literal(int var_, bool negated_) : var(var_), negated(negated_) {}

    // DIMACS-style signed form.
    static Literal from_dimacs(int lit) { return Literal(lit < 0 ? -lit : lit, lit < 0); }
    int to_dimacs() const { return negated ? -var : var; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

class Clause {
public:
    Clause() = default;

    // Normalizes: sorts by variable, drops duplicate literals, flags a
    // variable appearing in both polarities as a tautology.
    explicit Clause(std::vector<Literal> lits) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i].var == lits[i + 1].var) tautology_ = true;
        lits_ = std::move(lits);
    }

    const std::vector<Literal>& literals() const { return lits_; }
    bool empty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }
    bool tautological() const { return tautology_; }

    int max_var() const {
        int m = 0;
        for (const auto& l : lits_) m = std::max(m, l.var);
        return m;
    }

    bool satisfied_by(std::uint32_t assignment) const {
        for (const auto& l : lits_)
            if (((assignment >> (l.var - 1)) & 1u) != static_cast<unsigned>(l.negated)) return true;
        return false;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& l : lits_) {
            if (!s.empty()) s += " ";
            s += std::to_string(l.to_dimacs());
        }
        return s.empty() ? "<empty>" : s;
    }

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> lits_;
    bool tautology_ = false;
};

struct CnfFormula {
    int n = 0;
    std::vector<Clause> clauses;

    CnfFormula() = default;
    CnfFormula(int n_, std::vector<Clause> clauses_) : n(n_), clauses(std::move(clauses_)) {
        if (n < 1) throw dimension_error("formula needs at least one variable");
        for (const auto& c : clauses)
            if (c.max_var() > n)
                throw dimension_error("literal " + std::to_string(c.max_var()) +
                                      " exceeds variable count " + std::to_string(n));
    }

    std::size_t clause_count() const { return clauses.size(); }

    bool satisfied_by(std::uint32_t assignment) const {
        for (const auto& c : clauses)
            if (!c.satisfied_by(assignment)) return false;
        return true;
    }

    bool satisfied_by(const AtomId& a) const { return satisfied_by(a.bits); }
};

// The unique partial assignment falsifying a clause: every literal's variable
// set to the literal's complement.
struct FalsifyingCube {
    std::vector<std::pair<int, bool>> fixed;  // (variable, value), ascending

    static FalsifyingCube of_clause(const Clause& c) {
        FalsifyingCube z;
        z.fixed.reserve(c.size());
        for (const auto& l : c.literals()) z.fixed.emplace_back(l.var, l.negated);
        return z;
    }

    // The atoms of z_j: 2^{n-k} of them for a k-literal clause.  A
    // tautological clause fixes a variable both ways, giving the empty set.
    AtomSet atoms(int n) const {
        AtomSet s = AtomSet::full(n);
        for (const auto& [var, value] : fixed) s = s & AtomSet::literal(var, value, n);
        return s;
    }
};

// I - z_j as an atom set: everything except the falsifying cube.  A
// tautological clause yields the full set (z_j = 0).
inline AtomSet encode_clause(const Clause& c, int n) {
    return ~FalsifyingCube::of_clause(c).atoms(n);
}

// S = prod_j (I - z_j) as an atom set.  Clauses are intersected smallest set
// first; intersection is commutative so any order is semantically equal.
inline AtomSet encode_cnf(const CnfFormula& f) {
    std::vector<AtomSet> sets;
    sets.reserve(f.clauses.size());
    for (const auto& c : f.clauses) sets.push_back(encode_clause(c, f.n));
    std::sort(sets.begin(), sets.end(),
              [](const AtomSet& a, const AtomSet& b) { return a.count() < b.count(); });
    AtomSet acc = AtomSet::full(f.n);
    for (const auto& s : sets) {
        acc = acc & s;
        if (acc.none()) break;
    }
    return acc;
}

// Full DNF expansion: the sorted satisfying atoms; empty iff UNSAT.
inline std::vector<AtomId> dnf_expand(const CnfFormula& f) { return encode_cnf(f).atoms(); }

// Ground truth by direct evaluation of all 2^n assignments.  No Clifford or
// atom-set machinery is involved.
inline std::vector<AtomId> brute_force_oracle(const CnfFormula& f) {
    check_dimension(f.n);
    std::vector<AtomId> out;
    const std::uint32_t limit = 1u << f.n;
    for (std::uint32_t a = 0; a < limit; ++a) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (const auto& l : c.literals())
                if (((a >> (l.var - 1)) & 1u) != static_cast<unsigned>(l.negated)) {
                    sat = true;
                    break;
                }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) out.emplace_back(f.n, a);
    }
    return out;
}

// Atom <-> assignment bijection (an atom is a full assignment already; these
// give the map form).
inline std::vector<bool> assignment_of_atom(const AtomId& a) {
    std::vector<bool> out(static_cast<std::size_t>(a.n));
    for (int i = 1; i <= a.n; ++i) out[i - 1] = a.value(i);
    return out;
}

inline AtomId atom_of_assignment(const std::vector<bool>& values) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i]) bits |= 1u << i;
    return AtomId(static_cast<int>(values.size()), bits);
}

// --- Multivector route ----------------------------------------------------
//
// The same encoding built purely in the algebra, used by the multivector
// symmetry backend and by the oracle-equivalence tests.  Only identity and
// products appear here; the atom-set layer is not consulted.

// rho_i -> q_i p_i, complement -> p_i q_i, expanded over the free indices:
// q_i p_i prod_{j != i} {q_j, p_j}, a sum of 2^{n-1} primitive idempotents.
// Equal to mv_mul(witt_q(i), witt_p(i)) resp. mv_mul(witt_p(i), witt_q(i));
// the tests pin that down.
inline Multivector literal_multivector(const Literal& l, int n) {
    check_dimension(n);
    if (l.var < 1 || l.var > n) throw dimension_error("literal variable out of range");
    Multivector out(n);
    const std::uint32_t bit = 1u << (l.var - 1);
    for (std::uint32_t a = 0; a < (1u << (n - 1)); ++a) {
        const std::uint32_t low = a & (bit - 1u);
        const std::uint32_t high = (a ^ low) << 1;
        out.add_key(low | high | (l.negated ? 0u : bit), 1);
    }
    return out;
}

// I - z_j in the algebra; a tautological clause collapses z_j to 0 on its own.
inline Multivector clause_multivector(const Clause& c, int n) {
    Multivector z = Multivector::identity(n);
    for (const auto& l : c.literals()) z = mv_mul(z, literal_multivector(Literal(l.var, !l.negated), n));
    return Multivector::identity(n) - z;
}

inline Multivector cnf_multivector(const CnfFormula& f) {
    Multivector s = Multivector::identity(f.n);
    for (const auto& c : f.clauses) s = mv_mul(s, clause_multivector(c, f.n));
    return s;
}

// --- Reporting ------------------------------------------------------------

enum class SolveStatus { SAT, UNSAT };

struct SolveCounters {
    std::uint64_t atoms_examined = 0;
    std::uint64_t clauses = 0;
    std::uint64_t expansion_size = 0;
    std::uint64_t test_rounds = 0;
    std::uint64_t symmetry_checks = 0;
    std::uint64_t samples = 0;
    std::uint64_t classified = 0;
};

struct SolveReport {
    SolveStatus status = SolveStatus::UNSAT;
    std::optional<AtomId> witness;
    std::string method;
    SolveCounters counters;
    double wall_ms = 0.0;
    std::vector<std::string> warnings;
};

}  // namespace clifsat
