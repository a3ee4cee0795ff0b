// Walkthrough: Boolean formulas as idempotents of Cl(R^{n,n}).
//
// Encodes (x1 | ~x2) & (x2 | x3) over three variables, expands it to its
// satisfying atoms, runs the generator-symmetry unsatisfiability test, and
// shows the same problem as a cover question over O(1)^n.

#include <iostream>

#include "clifsat/nullspaces.hpp"
#include "clifsat/symmetry.hpp"

using namespace clifsat;

int main() {
    const int n = 3;
    const CnfFormula f(n, {
                              Clause({Literal(1, false), Literal(2, true)}),
                              Clause({Literal(2, false), Literal(3, false)}),
                          });

    std::cout << "clause 1 encodes to I - z_1 with " << encode_clause(f.clauses[0], n).count()
              << " of " << (1u << n) << " atoms\n";

    const Multivector s = cnf_multivector(f);
    std::cout << "S = prod (I - z_j) has " << s.term_count() << " EFB terms:\n  " << s.to_string()
              << "\n";

    std::cout << "satisfying assignments (DNF atoms):\n";
    for (const AtomId& atom : dnf_expand(f)) {
        std::cout << "  " << atom.to_string() << "  ->  " << m_of_atom(atom).to_string()
                  << "  lambda=" << lambda_of_atom(atom).to_string() << "\n";
    }

    const SymmetryReport sym = symmetry_test(f);
    std::cout << "symmetry test: "
              << (sym.verdict == SolveStatus::UNSAT ? "UNSAT" : "SAT (some generator moves S)")
              << "\n";

    const CoverVerdict cover = o1n_cover_test(f);
    std::cout << "clause cubes cover " << cover.covered << " of " << (1u << n)
              << " elements of O(1)^n\n";
    if (cover.witness)
        std::cout << "uncovered lambda " << cover.witness->to_string() << " is a solution\n";
    return 0;
}
