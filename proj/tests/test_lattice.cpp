#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>

#include "clifsat/lattice.hpp"

using namespace clifsat;

namespace {

AtomSet random_set(int n, std::mt19937_64& rng) {
    AtomSet s(n);
    std::uniform_int_distribution<std::uint32_t> bit(0, 1);
    for (std::uint32_t i = 0; i < (1u << n); ++i)
        if (bit(rng)) s.set(i);
    return s;
}

// A tiny Boolean expression tree with an independent truth-table evaluator.
struct Expr {
    enum Kind { var, neg, conj, disj } kind;
    int index = 0;
    std::shared_ptr<Expr> left, right;

    bool eval(std::uint32_t assignment) const {
        switch (kind) {
            case var: return (assignment >> (index - 1)) & 1u;
            case neg: return !left->eval(assignment);
            case conj: return left->eval(assignment) && right->eval(assignment);
            case disj: return left->eval(assignment) || right->eval(assignment);
        }
        return false;
    }

    AtomSet to_set(int n) const {
        switch (kind) {
            case var: return var_idempotent(index, true, n);
            case neg: return bool_not(left->to_set(n));
            case conj: return bool_and(left->to_set(n), right->to_set(n));
            case disj: return bool_or(left->to_set(n), right->to_set(n));
        }
        return AtomSet(n);
    }
};

std::shared_ptr<Expr> random_expr(int n, int depth, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> var_draw(1, n);
    std::uniform_int_distribution<int> kind_draw(0, depth <= 0 ? 0 : 3);
    auto e = std::make_shared<Expr>();
    switch (kind_draw(rng)) {
        case 0:
            e->kind = Expr::var;
            e->index = var_draw(rng);
            break;
        case 1:
            e->kind = Expr::neg;
            e->left = random_expr(n, depth - 1, rng);
            break;
        case 2:
            e->kind = Expr::conj;
            e->left = random_expr(n, depth - 1, rng);
            e->right = random_expr(n, depth - 1, rng);
            break;
        default:
            e->kind = Expr::disj;
            e->left = random_expr(n, depth - 1, rng);
            e->right = random_expr(n, depth - 1, rng);
            break;
    }
    return e;
}

}  // namespace

TEST_CASE("a variable and its complement intersect to nothing") {
    for (int n : {1, 3, 6}) {
        for (int i = 1; i <= n; ++i) {
            const AtomSet t = var_idempotent(i, true, n);
            const AtomSet f = var_idempotent(i, false, n);
            CHECK(bool_and(t, f).none());
            CHECK(bool_or(t, f) == AtomSet::full(n));
            CHECK(t.count() == (std::size_t{1} << (n - 1)));
        }
    }
}

TEST_CASE("complement of the empty set is the full set of atoms") {
    for (int n : {1, 4, 10}) {
        CHECK(bool_not(AtomSet::empty(n)) == AtomSet::full(n));
        CHECK(bool_not(AtomSet::full(n)).none());
        CHECK(AtomSet::full(n).count() == (std::size_t{1} << n));
    }
}

TEST_CASE("excluded middle on random sets, and the identity multivector") {
    std::mt19937_64 rng(11);
    const int n = 6;
    const AtomSet full = atoms_of_multivector(Multivector::identity(n));
    CHECK(full == AtomSet::full(n));
    for (int round = 0; round < 100; ++round) {
        const AtomSet s = random_set(n, rng);
        CHECK(bool_or(s, bool_not(s)) == full);
        CHECK(bool_and(s, bool_not(s)).none());
    }
}

TEST_CASE("var_idempotent examples") {
    const AtomSet s = var_idempotent(1, true, 3);
    CHECK(s.count() == 4);
    for (const auto& a : s.atoms()) CHECK(a.value(1));

    const AtomSet single = var_idempotent(1, true, 1);
    CHECK(single.count() == 1);
    CHECK(single.test(AtomId(1, 1u)));

    // q1p1 p2q2 at n=3: two atoms, free third variable.
    const AtomSet both = bool_and(var_idempotent(1, true, 3), var_idempotent(2, false, 3));
    CHECK(both.count() == 2);
    CHECK(both.test(AtomId(3, 0b001u)));
    CHECK(both.test(AtomId(3, 0b101u)));
    const Multivector mv = multivector_of_atoms(both);
    CHECK(mv == mv_mul(multivector_of_atoms(var_idempotent(1, true, 3)),
                       multivector_of_atoms(var_idempotent(2, false, 3))));
}

TEST_CASE("Huntington's axiom") {
    CHECK(huntington_check(AtomSet::empty(4), AtomSet::full(4)));

    std::mt19937_64 rng(22);
    for (int round = 0; round < 1000; ++round) {
        const AtomSet s1 = random_set(6, rng);
        const AtomSet s2 = random_set(6, rng);
        CHECK(huntington_check(s1, s2));
    }

    // Same identity evaluated wholly in the algebra.
    for (int round = 0; round < 50; ++round) {
        const AtomSet s1 = random_set(3, rng);
        const AtomSet s2 = random_set(3, rng);
        CHECK(huntington_check_mv(multivector_of_atoms(s1), multivector_of_atoms(s2)));
    }
}

TEST_CASE("atom set <-> multivector round trips") {
    CHECK(atoms_of_multivector(Multivector::identity(3)) == AtomSet::full(3));
    CHECK(multivector_of_atoms(AtomSet::full(3)) == Multivector::identity(3));

    // q1p1 p2q2 at n=2 is the atom with variable 1 true, variable 2 false.
    Multivector one_atom(2);
    one_atom.add_term(EfbBasisElement(2, 0b01u, 0u), 1);
    const AtomSet s = atoms_of_multivector(one_atom);
    CHECK(s.count() == 1);
    CHECK(s.test(AtomId(2, 0b01u)));

    std::mt19937_64 rng(33);
    for (int round = 0; round < 1000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const AtomSet original = random_set(n, rng);
        CHECK(atoms_of_multivector(multivector_of_atoms(original)) == original);
    }
}

TEST_CASE("malformed idempotents are rejected") {
    Multivector coeff_two(2);
    coeff_two.add_term(EfbBasisElement(2, 0u, 0u), 2);
    CHECK_THROWS_AS(atoms_of_multivector(coeff_two), malformed_idempotent_error);

    Multivector non_atom(2);
    non_atom.add_term(EfbBasisElement(2, 0u, 1u), 1);  // an odd factor
    CHECK_THROWS_AS(atoms_of_multivector(non_atom), malformed_idempotent_error);
}

TEST_CASE("idempotent sums square to themselves in the algebra") {
    std::mt19937_64 rng(44);
    for (int n = 1; n <= 4; ++n)
        for (int round = 0; round < 25; ++round) {
            const Multivector s = multivector_of_atoms(random_set(n, rng));
            CHECK(mv_mul(s, s) == s);
        }
}

TEST_CASE("boolean laws hold bit-parallel") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 10000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const AtomSet a = random_set(n, rng);
        const AtomSet b = random_set(n, rng);
        const AtomSet c = random_set(n, rng);

        CHECK(bool_and(a, b) == bool_and(b, a));
        CHECK(bool_or(a, b) == bool_or(b, a));
        CHECK(bool_and(a, bool_and(b, c)) == bool_and(bool_and(a, b), c));
        CHECK(bool_or(a, bool_or(b, c)) == bool_or(bool_or(a, b), c));
        CHECK(bool_not(bool_and(a, b)) == bool_or(bool_not(a), bool_not(b)));
        CHECK(bool_not(bool_or(a, b)) == bool_and(bool_not(a), bool_not(b)));
        CHECK(bool_and(a, bool_or(a, b)) == a);
        CHECK(bool_or(a, bool_and(a, b)) == a);
        CHECK(huntington_check(a, b));
    }
}

TEST_CASE("set algebra and Clifford algebra agree") {
    std::mt19937_64 rng(66);
    for (int n = 1; n <= 4; ++n)
        for (int round = 0; round < 50; ++round) {
            const AtomSet a = random_set(n, rng);
            const AtomSet b = random_set(n, rng);
            const Multivector ma = multivector_of_atoms(a);
            const Multivector mb = multivector_of_atoms(b);
            const Multivector id = Multivector::identity(n);

            CHECK(atoms_of_multivector(mv_mul(ma, mb)) == bool_and(a, b));
            CHECK(atoms_of_multivector(ma + mb - mv_mul(ma, mb)) == bool_or(a, b));
            CHECK(atoms_of_multivector(id - ma) == bool_not(a));
        }
}

TEST_CASE("logical equivalence is equality of atom sets") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 400; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto e1 = random_expr(n, 4, rng);
        const auto e2 = random_expr(n, 4, rng);

        const AtomSet s1 = e1->to_set(n);
        const AtomSet s2 = e2->to_set(n);

        // Truth-table evaluation is the independent reference.
        bool truth_equal = true;
        for (std::uint32_t a = 0; a < (1u << n); ++a) {
            CHECK(s1.test(a) == e1->eval(a));
            CHECK(s2.test(a) == e2->eval(a));
            truth_equal = truth_equal && (e1->eval(a) == e2->eval(a));
        }
        CHECK((s1 == s2) == truth_equal);
    }
}

TEST_CASE("atom set errors") {
    CHECK_THROWS_AS(var_idempotent(4, true, 3), dimension_error);
    CHECK_THROWS_AS(var_idempotent(0, true, 3), dimension_error);
    CHECK_THROWS_AS(bool_and(AtomSet::full(2), AtomSet::full(3)), dimension_error);
    CHECK_THROWS_AS(AtomSet(max_n() + 1), guard_error);
}
