#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clifsat/dimacs.hpp"
#include "clifsat/symmetry.hpp"
#include "fixtures.hpp"

using namespace clifsat;

TEST_CASE("the running example is symmetric under every generator") {
    const auto report = symmetry_test(fixtures::unsat_3sat(), SymmetryBackend::atomset);
    REQUIRE(report.symmetric_under.size() == 6);
    for (bool b : report.symmetric_under) CHECK(b);
    CHECK(report.verdict == SolveStatus::UNSAT);

    const auto mv_report = symmetry_test(fixtures::unsat_3sat(), SymmetryBackend::multivector);
    CHECK(mv_report.verdict == SolveStatus::UNSAT);
    CHECK(mv_report.symmetric_under == report.symmetric_under);
}

TEST_CASE("a satisfiable unit clause breaks the symmetry") {
    const CnfFormula f = fixtures::make_formula(1, {{1}});
    for (auto backend : {SymmetryBackend::atomset, SymmetryBackend::multivector}) {
        const auto report = symmetry_test(f, backend);
        CHECK(report.verdict == SolveStatus::SAT);
        CHECK_FALSE(report.symmetric_under[0]);
        CHECK_FALSE(report.symmetric_under[1]);
    }
}

TEST_CASE("complementary unit clauses give S = 0, fixed by conjugation") {
    const CnfFormula f = fixtures::make_formula(1, {{1}, {-1}});
    for (auto backend : {SymmetryBackend::atomset, SymmetryBackend::multivector}) {
        const auto report = symmetry_test(f, backend);
        CHECK(report.verdict == SolveStatus::UNSAT);
        CHECK(report.all_symmetric());
    }
}

TEST_CASE("hypothesis violations are named") {
    CHECK_THROWS_AS(symmetry_test(CnfFormula(2, {})), precondition_error);

    CnfFormula with_empty(2, {});
    with_empty.clauses.push_back(Clause(std::vector<Literal>{}));
    CHECK_THROWS_AS(symmetry_test(with_empty), precondition_error);

    const CnfFormula with_taut = fixtures::make_formula(2, {{1, -1}});
    CHECK_THROWS_MATCHES(symmetry_test(with_taut), precondition_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("tautological")));
}

TEST_CASE("conjugation acts on atoms as a variable flip") {
    // Atom with x1=T, x2=F; conjugating by gamma_1 flips x1.
    const AtomId a(2, 0b01u);
    const auto flip1 = conjugation_action_on_atoms(GeneratorIndex(1), 2);
    CHECK(flip1(a) == AtomId(2, 0b00u));

    // The timelike partner gamma_{n+1} acts identically.
    const auto flip3 = conjugation_action_on_atoms(GeneratorIndex(3), 2);
    CHECK(flip3(a) == flip1(a));

    // Involution.
    CHECK(flip1(flip1(a)) == a);
}

TEST_CASE("the atom action matches multivector conjugation exactly") {
    for (int n = 1; n <= 4; ++n)
        for (int g = 1; g <= 2 * n; ++g) {
            const auto action = conjugation_action_on_atoms(GeneratorIndex(g), n);
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                const AtomId atom(n, bits);
                const Multivector conj =
                    conjugate_by_generator(Multivector::basis(atom.idempotent()), GeneratorIndex(g));
                CHECK(conj == Multivector::basis(action(atom).idempotent()));
            }
        }
}

TEST_CASE("backends agree on random instances") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 1000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % n);
        const int m = 1 + static_cast<int>(rng() % (4 * n));
        const CnfFormula f = gen_random_ksat(n, m, k, rng()).to_formula();

        const auto a = symmetry_test(f, SymmetryBackend::atomset);
        const auto b = symmetry_test(f, SymmetryBackend::multivector);
        CHECK(a.verdict == b.verdict);
        CHECK(a.symmetric_under == b.symmetric_under);
    }
}

TEST_CASE("the verdict equals emptiness of the DNF") {
    std::mt19937_64 rng(271828);
    for (int round = 0; round < 1000; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int k = 2 + static_cast<int>(rng() % 2);
        const int m = 1 + static_cast<int>(rng() % (5 * n));
        const CnfFormula f = gen_random_ksat(n, m, std::min(k, n), rng()).to_formula();

        const auto report = symmetry_test(f, SymmetryBackend::atomset);
        const bool unsat = dnf_expand(f).empty();
        CHECK((report.verdict == SolveStatus::UNSAT) == unsat);
    }
}

TEST_CASE("a nonempty flip-invariant atom set is the full set") {
    // Closure of any nonempty set under all variable flips is everything;
    // this is why symmetry of a clause-constrained S forces S = 0.
    std::mt19937_64 rng(161803);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        AtomSet s(n);
        s.set(static_cast<std::uint32_t>(rng() & ((1u << n) - 1u)));
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 1; v <= n; ++v) {
                const AtomSet flipped = s.flip_variable(v) | s;
                if (!(flipped == s)) {
                    s = flipped;
                    grew = true;
                }
            }
        }
        CHECK(s == AtomSet::full(n));
    }

    for (int v = 1; v <= 4; ++v) {
        CHECK(AtomSet::full(4).flip_variable(v) == AtomSet::full(4));
        CHECK(AtomSet::empty(4).flip_variable(v) == AtomSet::empty(4));
    }
}

TEST_CASE("self-reduction on the running example") {
    const auto report = solve_by_reduction(fixtures::unsat_3sat());
    CHECK(report.status == SolveStatus::UNSAT);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("self-reduction finds the unique witness") {
    const CnfFormula f = fixtures::make_formula(2, {{1, 2}, {-1}});
    const auto report = solve_by_reduction(f);
    REQUIRE(report.status == SolveStatus::SAT);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(report.witness->value(1));
    CHECK(report.witness->value(2));
    CHECK(report.counters.test_rounds == 2);
}

TEST_CASE("self-reduction convention for the unconstrained formula") {
    const auto report = solve_by_reduction(CnfFormula(3, {}));
    REQUIRE(report.status == SolveStatus::SAT);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->bits == 0u);
    CHECK(report.counters.test_rounds == 0);
}

TEST_CASE("self-reduction matches the oracle and uses n rounds when SAT") {
    std::mt19937_64 rng(141421);
    for (int round = 0; round < 500; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int k = 2 + static_cast<int>(rng() % 2);
        const int m = 1 + static_cast<int>(rng() % (5 * n));
        const CnfFormula f = gen_random_ksat(n, m, std::min(k, n), rng()).to_formula();

        const auto report = solve_by_reduction(f);
        const bool unsat = brute_force_oracle(f).empty();
        CHECK((report.status == SolveStatus::UNSAT) == unsat);
        if (report.status == SolveStatus::SAT) {
            REQUIRE(report.witness.has_value());
            CHECK(f.satisfied_by(*report.witness));
            CHECK(report.counters.test_rounds == static_cast<std::uint64_t>(n));
        } else {
            CHECK(report.counters.test_rounds == 0);
        }
    }
}

TEST_CASE("multivector backend rejects oversized problems") {
    const CnfFormula f = gen_random_ksat(kMaxMultivectorBackendN + 1, 3, 2, 9).to_formula();
    REQUIRE_THROWS_AS(symmetry_test(f, SymmetryBackend::multivector), guard_error);
}
