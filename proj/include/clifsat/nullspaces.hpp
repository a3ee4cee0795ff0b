#pragma once

// The discrete correspondences: Boolean atoms <-> primitive idempotents <->
// maximal totally null subspaces of R^{n,n} <-> elements of O(1)^n.  The
// reference is the vacuum atom prod p_i q_i, whose subspace is P = span{p_i}
// and whose lambda is the identity; setting variable i true swaps p_i for
// q_i, i.e. applies the reflection lambda_i.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/common.hpp"
#include "clifsat/dense.hpp"
#include "clifsat/lattice.hpp"

namespace clifsat {

// A maximal totally null subspace from the discrete family: span of one null
// vector per Witt pair.  Bit set means the q_i generator was chosen.
struct MaxNullSubspace {
    int n = 0;
    std::uint32_t q_mask = 0;

    MaxNullSubspace() = default;
    MaxNullSubspace(int n_, std::uint32_t q_mask_) : n(n_), q_mask(q_mask_) {}

    bool q_chosen(int i) const { return (q_mask >> (i - 1)) & 1u; }

    friend auto operator<=>(const MaxNullSubspace&, const MaxNullSubspace&) = default;

    std::string to_string() const {
        std::string s = "span{";
        for (int i = 1; i <= n; ++i) {
            if (i > 1) s += ", ";
            s += (q_chosen(i) ? "q" : "p") + std::to_string(i);
        }
        return s + "}";
    }
};

// An element of O(1)^n: diagonal +-1 matrices, the involutions that flip a
// subset of the timelike axes and so exchange p_i <-> q_i.  Bit set means
// lambda_i = -1.
struct SignatureLambda {
    int n = 0;
    std::uint32_t neg_mask = 0;

    SignatureLambda() = default;
    SignatureLambda(int n_, std::uint32_t neg_mask_) : n(n_), neg_mask(neg_mask_) {}

    static SignatureLambda identity(int n) { return SignatureLambda(n, 0); }

    int sign(int i) const { return ((neg_mask >> (i - 1)) & 1u) ? -1 : 1; }
    int negative_count() const { return std::popcount(neg_mask); }

    // Componentwise product; every element is its own inverse.
    friend SignatureLambda operator*(const SignatureLambda& a, const SignatureLambda& b) {
        check_same_dimension(a.n, b.n);
        return SignatureLambda(a.n, a.neg_mask ^ b.neg_mask);
    }

    friend auto operator<=>(const SignatureLambda&, const SignatureLambda&) = default;

    std::string to_string() const {
        std::string s;
        for (int i = 1; i <= n; ++i) s += sign(i) > 0 ? '+' : '-';
        return s;
    }
};

// --- The three-way bijection ------------------------------------------------
//
// Convention: atom bit i set (factor q_i p_i, variable i true) <-> the span
// picks q_i <-> lambda_i = -1 applied to the all-p reference P.

inline MaxNullSubspace m_of_atom(const AtomId& a) { return MaxNullSubspace(a.n, a.bits); }
inline AtomId atom_of_m(const MaxNullSubspace& m) { return AtomId(m.n, m.q_mask); }

inline SignatureLambda lambda_of_atom(const AtomId& a) { return SignatureLambda(a.n, a.bits); }
inline AtomId atom_of_lambda(const SignatureLambda& l) { return AtomId(l.n, l.neg_mask); }

inline SignatureLambda lambda_of_m(const MaxNullSubspace& m) {
    return SignatureLambda(m.n, m.q_mask);
}
inline MaxNullSubspace m_of_lambda(const SignatureLambda& l) {
    return MaxNullSubspace(l.n, l.neg_mask);
}

// v psi = 0 for every v in M(psi), checked against the dense matrix model.
// Needs n within the oracle cap.
inline bool annihilation_check(const AtomId& a) {
    const DenseOracle oracle(a.n);
    const DenseMatrix psi = oracle.matrix_of(a.idempotent());
    const MaxNullSubspace m = m_of_atom(a);
    for (int i = 1; i <= a.n; ++i) {
        const DenseMatrix& v = m.q_chosen(i) ? oracle.q(i) : oracle.p(i);
        if (!(v * psi).is_zero()) return false;
    }
    return true;
}

// --- Clause-induced subsets of O(1)^n ---------------------------------------

// T'_{z_j}: the lambdas of the falsifying cube of a clause; 2^{n-k} members
// for a k-literal clause.  Backed by the atom bit vector under the
// lambda <-> atom relabeling, so unions and covers are bitwise.
struct TPrimeSet {
    AtomSet members;

    explicit TPrimeSet(int n) : members(n) {}
    explicit TPrimeSet(AtomSet s) : members(std::move(s)) {}

    int dimension() const { return members.dimension(); }
    std::size_t size() const { return members.count(); }

    bool contains(const SignatureLambda& l) const { return members.test(atom_of_lambda(l)); }

    std::vector<SignatureLambda> lambdas() const {
        std::vector<SignatureLambda> out;
        out.reserve(size());
        members.for_each([&](AtomId a) { out.push_back(lambda_of_atom(a)); });
        return out;
    }

    friend TPrimeSet operator|(const TPrimeSet& a, const TPrimeSet& b) {
        return TPrimeSet(a.members | b.members);
    }
};

inline TPrimeSet tprime_of_clause(const Clause& c, int n) {
    return TPrimeSet(FalsifyingCube::of_clause(c).atoms(n));
}

// Union of all clause T' sets.
inline TPrimeSet tprime_union(const CnfFormula& f) {
    TPrimeSet acc(f.n);
    for (const auto& c : f.clauses) acc = acc | tprime_of_clause(c, f.n);
    return acc;
}

struct CoverVerdict {
    SolveStatus status = SolveStatus::UNSAT;
    std::optional<SignatureLambda> witness;  // an uncovered lambda, when SAT
    std::size_t covered = 0;                 // |union of T'_{z_j}|
};

// UNSAT iff the clause-induced subsets cover all of O(1)^n; any uncovered
// lambda is a solution.
inline CoverVerdict o1n_cover_test(const CnfFormula& f) {
    const TPrimeSet covered = tprime_union(f);
    CoverVerdict out;
    out.covered = covered.size();
    AtomId uncovered;
    if ((~covered.members).first(uncovered)) {
        out.status = SolveStatus::SAT;
        out.witness = lambda_of_atom(uncovered);
        if (!f.satisfied_by(uncovered))
            throw error("internal: uncovered lambda fails direct evaluation");
    }
    return out;
}

}  // namespace clifsat
