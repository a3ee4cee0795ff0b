#pragma once

// Shared test fixtures.

#include <vector>

#include "clifsat/cnf.hpp"

namespace clifsat::fixtures {

// The running example: (x1 | ~x2)(x2 | x3)(~x1 | ~x3)(~x1 | ~x2 | x3)
// (x1 | x2 | ~x3); n=3, m=5, unsatisfiable.
inline CnfFormula unsat_3sat() {
    const std::vector<std::vector<int>> raw = {
        {1, -2}, {2, 3}, {-1, -3}, {-1, -2, 3}, {1, 2, -3},
    };
    std::vector<Clause> clauses;
    for (const auto& c : raw) {
        std::vector<Literal> lits;
        for (int v : c) lits.push_back(Literal::from_dimacs(v));
        clauses.emplace_back(std::move(lits));
    }
    return CnfFormula(3, std::move(clauses));
}

inline const char* unsat_3sat_dimacs() {
    return "c running unsat example\n"
           "p cnf 3 5\n"
           "1 -2 0\n"
           "2 3 0\n"
           "-1 -3 0\n"
           "-1 -2 3 0\n"
           "1 2 -3 0\n";
}

inline CnfFormula make_formula(int n, const std::vector<std::vector<int>>& raw) {
    std::vector<Clause> clauses;
    for (const auto& c : raw) {
        std::vector<Literal> lits;
        for (int v : c) lits.push_back(Literal::from_dimacs(v));
        clauses.emplace_back(std::move(lits));
    }
    return CnfFormula(n, std::move(clauses));
}

}  // namespace clifsat::fixtures
