#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clifsat/dimacs.hpp"
#include "clifsat/run.hpp"
#include "fixtures.hpp"

using namespace clifsat;

TEST_CASE("the running example parses to five clauses") {
    const DimacsDocument doc = parse_dimacs(fixtures::unsat_3sat_dimacs());
    CHECK(doc.declared_vars == 3);
    CHECK(doc.declared_clauses == 5);
    REQUIRE(doc.clauses.size() == 5);
    CHECK(doc.clauses[0] == std::vector<int>{1, -2});
    CHECK(doc.clauses[3] == std::vector<int>{-1, -2, 3});
    CHECK(doc.warnings.empty());
    CHECK(doc.comments.size() == 1);

    const CnfFormula f = doc.to_formula();
    CHECK(f.n == 3);
    CHECK(f.clauses.size() == 5);
}

TEST_CASE("minimal file with a comment") {
    const DimacsDocument doc = parse_dimacs("c comment\np cnf 1 1\n1 0\n");
    REQUIRE(doc.clauses.size() == 1);
    CHECK(doc.clauses[0] == std::vector<int>{1});
    CHECK(doc.comments == std::vector<std::string>{"comment"});
}

TEST_CASE("clauses may span lines and whitespace is free-form") {
    const DimacsDocument doc = parse_dimacs("p cnf 4 2\n1 -2\n3 0 4\n-1\n0\n");
    REQUIRE(doc.clauses.size() == 2);
    CHECK(doc.clauses[0] == std::vector<int>{1, -2, 3});
    CHECK(doc.clauses[1] == std::vector<int>{4, -1});
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs(""), parse_error);

    try {
        parse_dimacs("p cnf 2 1\n1 3 0\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("header mismatch and missing terminator are warnings") {
    const DimacsDocument extra = parse_dimacs("p cnf 2 1\n1 0\n2 0\n");
    CHECK(extra.clauses.size() == 2);  // trailing clause still read
    REQUIRE(extra.warnings.size() == 1);

    const DimacsDocument unterminated = parse_dimacs("p cnf 2 2\n1 0\n-2");
    CHECK(unterminated.clauses.size() == 2);
    CHECK_FALSE(unterminated.warnings.empty());
}

TEST_CASE("serialize then parse is the identity on generated documents") {
    std::mt19937_64 rng(8675309);
    for (int round = 0; round < 1000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const int k = 1 + static_cast<int>(rng() % n);
        const int m = static_cast<int>(rng() % 30);
        const DimacsDocument doc = gen_random_ksat(n, m, k, rng());

        const DimacsDocument round_tripped = parse_dimacs(write_dimacs(doc));
        CHECK(round_tripped.declared_vars == doc.declared_vars);
        CHECK(round_tripped.clauses == doc.clauses);
        CHECK(round_tripped.comments == doc.comments);
        CHECK(round_tripped.warnings.empty());

        // And the serializer accepts its own parse.
        CHECK(write_dimacs(round_tripped) == write_dimacs(doc));
    }
}

TEST_CASE("generation is deterministic and well-formed") {
    const DimacsDocument a = gen_random_ksat(8, 34, 3, 12345);
    const DimacsDocument b = gen_random_ksat(8, 34, 3, 12345);
    CHECK(write_dimacs(a) == write_dimacs(b));

    const DimacsDocument c = gen_random_ksat(8, 34, 3, 54321);
    CHECK(write_dimacs(a) != write_dimacs(c));

    for (const auto& clause : a.clauses) {
        CHECK(clause.size() == 3);
        for (std::size_t i = 0; i < clause.size(); ++i)
            for (std::size_t j = i + 1; j < clause.size(); ++j)
                CHECK(std::abs(clause[i]) != std::abs(clause[j]));
    }

    CHECK_THROWS_AS(gen_random_ksat(3, 5, 4, 1), dimension_error);
}

TEST_CASE("generated instances agree with the oracle across methods") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const CnfFormula f = gen_random_ksat(8, 34, 3, seed).to_formula();
        CHECK(dnf_expand(f) == brute_force_oracle(f));
    }
}

TEST_CASE("run dispatch: statuses, exit codes, schema") {
    const DimacsDocument unsat_doc = parse_dimacs(fixtures::unsat_3sat_dimacs());
    const DimacsDocument sat_doc = parse_dimacs("p cnf 2 1\n1 2 0\n");

    const std::vector<Method> rigorous = {Method::dnf, Method::symmetry, Method::o1n_cover,
                                          Method::oracle};
    std::vector<std::string> keys;
    for (Method m : rigorous) {
        RunConfig cfg;
        cfg.method = m;

        const RunResult u = run(cfg, unsat_doc);
        CHECK(u.exit_code == kExitUnsat);
        CHECK(u.report["status"] == "UNSAT");
        CHECK(u.report["witness"].is_null());

        const RunResult s = run(cfg, sat_doc);
        CHECK(s.exit_code == kExitSat);
        CHECK(s.report["status"] == "SAT");
        REQUIRE(s.report["witness"].is_array());
        CHECK(s.report["witness"].size() == 2);

        // Schema stability: identical top-level fields for every method.
        std::vector<std::string> this_keys;
        for (const auto& [key, value] : s.report.items()) this_keys.push_back(key);
        if (keys.empty())
            keys = this_keys;
        else
            CHECK(keys == this_keys);
    }
}

TEST_CASE("run with the experimental on-cover method is labeled") {
    RunConfig cfg;
    cfg.method = Method::on_cover;
    cfg.cover_samples = 400;
    const RunResult r = run(cfg, parse_dimacs("p cnf 2 1\n1 2 0\n"));
    CHECK(r.exit_code == kExitSat);
    bool labeled = false;
    for (const auto& w : r.report["warnings"]) {
        if (w.get<std::string>().find("experimental") != std::string::npos) labeled = true;
    }
    CHECK(labeled);
}

TEST_CASE("empty formula solves SAT with the all-false witness") {
    RunConfig cfg;
    cfg.method = Method::dnf;
    const RunResult r = run(cfg, parse_dimacs("p cnf 2 0\n"));
    CHECK(r.exit_code == kExitSat);
    CHECK(r.report["witness"] == nlohmann::json({-1, -2}));
}

TEST_CASE("all methods agree on random instances") {
    std::mt19937_64 rng(424242);
    for (int round = 0; round < 60; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int m = 1 + static_cast<int>(rng() % (4 * n));
        const DimacsDocument doc = gen_random_ksat(n, m, std::min(3, n), rng());

        int first = -1;
        for (Method method : {Method::dnf, Method::symmetry, Method::o1n_cover, Method::oracle}) {
            RunConfig cfg;
            cfg.method = method;
            const RunResult r = run(cfg, doc);
            if (first < 0)
                first = r.exit_code;
            else
                CHECK(r.exit_code == first);
        }

        RunConfig vcfg;
        const RunResult v = run_verify(vcfg, doc);
        CHECK(v.report["agree"] == true);
        CHECK(v.exit_code == first);
    }
}

TEST_CASE("guard rejects oversized instances cleanly") {
    DimacsDocument doc;
    doc.declared_vars = 26;
    RunConfig cfg;
    cfg.guard = 24;
    CHECK_THROWS_AS(run(cfg, doc), guard_error);
    set_max_n(24);
}

TEST_CASE("bench produces rows with growing expansion work") {
    BenchConfig cfg;
    cfg.n_values = {6, 10};
    cfg.ratios = {2.0};
    cfg.seeds_per_cell = 10;
    cfg.methods = {Method::dnf};
    const nlohmann::json rows = bench(cfg);
    REQUIRE(rows.size() == 20);

    double small_n = 0, large_n = 0;
    for (const auto& row : rows) {
        if (row["n"] == 6) small_n += row["expansion_size"].get<double>();
        if (row["n"] == 10) large_n += row["expansion_size"].get<double>();
    }
    // Fixed clause ratio: the expansion term count grows with n.
    CHECK(large_n > small_n);
}
