#pragma once

// DIMACS CNF reading and writing.  Accepts 'c' comment lines, one
// 'p cnf <vars> <clauses>' header, then whitespace-separated signed literals
// with 0 terminators that may span lines.  Header/body clause-count mismatch
// is a warning, not an error; files in the wild get this wrong routinely.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/common.hpp"

namespace clifsat {

struct parse_error : error {
    int line = 0;
    int column = 0;

    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(column_)),
          line(line_),
          column(column_) {}
};

struct DimacsDocument {
    int declared_vars = 0;
    int declared_clauses = 0;
    std::vector<std::vector<int>> clauses;  // raw signed literals, no terminator
    std::vector<std::string> comments;      // without the leading 'c'
    std::vector<int> clause_lines;          // line where each clause starts
    std::vector<std::string> warnings;

    CnfFormula to_formula() const {
        std::vector<Clause> out;
        out.reserve(clauses.size());
        for (const auto& raw : clauses) {
            std::vector<Literal> lits;
            lits.reserve(raw.size());
            for (int v : raw) lits.push_back(Literal::from_dimacs(v));
            out.emplace_back(std::move(lits));
        }
        return CnfFormula(std::max(declared_vars, 1), std::move(out));
    }
};

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_spaces_in_line() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
};

}  // namespace detail

inline DimacsDocument parse_dimacs(std::string_view text) {
    detail::Cursor cur{text};
    DimacsDocument doc;
    bool have_header = false;
    std::vector<int> pending;
    int pending_line = 0;

    const auto fail = [&](const std::string& msg) -> void {
        throw parse_error(msg, cur.line, cur.col);
    };

    while (!cur.done()) {
        cur.skip_spaces_in_line();
        if (cur.done()) break;
        const char c = cur.peek();
        if (c == '\n') {
            cur.advance();
            continue;
        }
        if (c == 'c' && pending.empty()) {
            // Comment line.
            std::string comment;
            cur.advance();
            if (!cur.done() && cur.peek() == ' ') cur.advance();
            while (!cur.done() && cur.peek() != '\n') {
                comment += cur.peek();
                cur.advance();
            }
            doc.comments.push_back(comment);
            continue;
        }
        if (c == 'p') {
            if (have_header) fail("duplicate 'p' header");
            cur.advance();
            cur.skip_spaces_in_line();
            const char* fmt = "cnf";
            for (int i = 0; i < 3; ++i) {
                if (cur.done() || cur.peek() != fmt[i]) fail("expected 'p cnf' header");
                cur.advance();
            }
            cur.skip_spaces_in_line();
            const auto read_int = [&]() -> int {
                std::string tok;
                while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9') {
                    tok += cur.peek();
                    cur.advance();
                }
                if (tok.empty()) fail("expected a number in 'p cnf' header");
                try {
                    return std::stoi(tok);
                } catch (const std::out_of_range&) {
                    fail("header number " + tok + " does not fit an integer");
                }
                return 0;
            };
            doc.declared_vars = read_int();
            cur.skip_spaces_in_line();
            doc.declared_clauses = read_int();
            have_header = true;
            continue;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            if (!have_header) fail("literal before 'p cnf' header");
            const int tok_line = cur.line;
            std::string tok;
            if (c == '-') {
                tok += c;
                cur.advance();
            }
            while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9') {
                tok += cur.peek();
                cur.advance();
            }
            if (tok == "-" || tok.empty()) fail("stray '-' without digits");
            if (!cur.done() && cur.peek() != ' ' && cur.peek() != '\t' && cur.peek() != '\r' &&
                cur.peek() != '\n')
                fail(std::string("unexpected character '") + cur.peek() + "' in literal");
            long lit = 0;
            try {
                lit = std::stol(tok);
            } catch (const std::out_of_range&) {
                fail("literal " + tok + " does not fit an integer");
            }
            if (lit == 0) {
                doc.clauses.push_back(pending);
                doc.clause_lines.push_back(pending_line ? pending_line : tok_line);
                pending.clear();
                pending_line = 0;
            } else {
                if (lit > doc.declared_vars || lit < -doc.declared_vars)
                    fail("literal " + tok + " out of range for " +
                         std::to_string(doc.declared_vars) + " variables");
                if (pending.empty()) pending_line = tok_line;
                pending.push_back(static_cast<int>(lit));
            }
            continue;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    if (!have_header) throw parse_error("missing 'p cnf' header", cur.line, cur.col);
    if (!pending.empty()) {
        doc.clauses.push_back(pending);
        doc.clause_lines.push_back(pending_line);
        doc.warnings.push_back("final clause not terminated by 0");
    }
    if (doc.declared_clauses != static_cast<int>(doc.clauses.size()))
        doc.warnings.push_back("header declares " + std::to_string(doc.declared_clauses) +
                               " clauses, file has " + std::to_string(doc.clauses.size()));
    return doc;
}

inline std::string write_dimacs(const DimacsDocument& doc) {
    std::ostringstream out;
    for (const auto& c : doc.comments) out << "c " << c << '\n';
    out << "p cnf " << doc.declared_vars << ' ' << doc.clauses.size() << '\n';
    for (const auto& clause : doc.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

inline DimacsDocument document_of_formula(const CnfFormula& f) {
    DimacsDocument doc;
    doc.declared_vars = f.n;
    doc.declared_clauses = static_cast<int>(f.clauses.size());
    for (const auto& c : f.clauses) {
        std::vector<int> raw;
        raw.reserve(c.size());
        for (const auto& l : c.literals()) raw.push_back(l.to_dimacs());
        doc.clauses.push_back(std::move(raw));
        doc.clause_lines.push_back(0);
    }
    return doc;
}

// Uniform random k-SAT: every clause draws k distinct variables and
// independent polarities.  Deterministic per seed.
inline DimacsDocument gen_random_ksat(int n, int m, int k, std::uint64_t seed) {
    if (n < 1 || m < 0 || k < 1 || k > n)
        throw dimension_error("invalid k-SAT parameters: n=" + std::to_string(n) +
                              " m=" + std::to_string(m) + " k=" + std::to_string(k));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var_draw(1, n);
    std::uniform_int_distribution<int> sign_draw(0, 1);

    DimacsDocument doc;
    doc.declared_vars = n;
    doc.declared_clauses = m;
    doc.comments.push_back("random " + std::to_string(k) + "-SAT n=" + std::to_string(n) +
                           " m=" + std::to_string(m) + " seed=" + std::to_string(seed));
    for (int j = 0; j < m; ++j) {
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < k) {
            const int v = var_draw(rng);
            bool dup = false;
            for (int w : vars) dup |= (w == v);
            if (!dup) vars.push_back(v);
        }
        std::vector<int> clause;
        clause.reserve(vars.size());
        for (int v : vars) clause.push_back(sign_draw(rng) ? v : -v);
        doc.clauses.push_back(std::move(clause));
        doc.clause_lines.push_back(0);
    }
    return doc;
}

}  // namespace clifsat
