#pragma once

// Exact arithmetic in Cl(R^{n,n}) over the Extended Fock Basis.
//
// The 2n generators gamma_1..gamma_2n square to +1 for i <= n and -1 for
// i > n.  The Witt basis p_i = (gamma_i + gamma_{i+n})/2, q_i = (gamma_i -
// gamma_{i+n})/2 consists of null vectors with {p_i,q_j} = delta_ij.  An EFB
// basis element is a product psi_1...psi_n with psi_i in {q_i p_i, p_i q_i,
// p_i, q_i}; every algebra element is an integer combination of these.

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "clifsat/common.hpp"

namespace clifsat {

// Coefficients are exact integers; the S = 0 unsatisfiability criterion
// tolerates no rounding and no overflow.
using Coeff = boost::multiprecision::cpp_int;

// One factor of an EFB element.  Two bits: bit 0 is the h sign (set when the
// leftmost null vector is q_i), bit 1 is the grade parity (set when odd).
enum class FactorCode : std::uint8_t {
    pq = 0b00,  // p_i q_i   h=-1, even   (variable i false)
    qp = 0b01,  // q_i p_i   h=+1, even   (variable i true)
    p  = 0b10,  // p_i       h=-1, odd
    q  = 0b11,  // q_i       h=+1, odd
};

inline bool factor_h(FactorCode f) { return static_cast<std::uint8_t>(f) & 1u; }
inline bool factor_odd(FactorCode f) { return static_cast<std::uint8_t>(f) & 2u; }

inline FactorCode make_factor(bool h, bool odd) {
    return static_cast<FactorCode>((odd ? 2u : 0u) | (h ? 1u : 0u));
}

// Single-index Witt product.  Within one index the four words multiply to a
// single word or vanish: the product is nonzero exactly when the right end of
// x differs from the left end of y, and then keeps x's leading vector and the
// combined parity.  This reproduces the 16-entry table, e.g. qp*qp = qp,
// qp*pq = 0, q*p = qp, p*q = pq.
inline std::optional<FactorCode> factor_product(FactorCode x, FactorCode y) {
    const bool x_ends_p = factor_h(x) ^ factor_odd(x);
    const bool y_starts_q = factor_h(y);
    if (x_ends_p != y_starts_q) return std::nullopt;
    return make_factor(factor_h(x), factor_odd(x) ^ factor_odd(y));
}

// Index of a generator gamma_i, 1 <= i <= 2n; i <= n spacelike (square +1),
// i > n timelike (square -1).
struct GeneratorIndex {
    int value = 1;

    constexpr GeneratorIndex() = default;
    constexpr explicit GeneratorIndex(int v) : value(v) {}

    bool spacelike(int n) const { return value <= n; }

    // Witt pair this generator touches, 1-based.
    int witt_index(int n) const { return (value - 1) % n + 1; }

    void check(int n) const {
        if (value < 1 || value > 2 * n)
            throw dimension_error("generator index " + std::to_string(value) +
                                  " out of range 1.." + std::to_string(2 * n));
    }
};

// One EFB basis element psi_1...psi_n, packed as two n-bit signature words.
struct EfbBasisElement {
    int n = 0;
    std::uint32_t h = 0;    // bit i-1: h sign of factor i
    std::uint32_t odd = 0;  // bit i-1: grade parity of factor i

    EfbBasisElement() = default;
    EfbBasisElement(int n_, std::uint32_t h_, std::uint32_t odd_) : n(n_), h(h_), odd(odd_) {}

    FactorCode factor(int i) const { return make_factor((h >> (i - 1)) & 1u, (odd >> (i - 1)) & 1u); }

    void set_factor(int i, FactorCode f) {
        const std::uint32_t bit = 1u << (i - 1);
        h = (h & ~bit) | (factor_h(f) ? bit : 0u);
        odd = (odd & ~bit) | (factor_odd(f) ? bit : 0u);
    }

    // Parity of the whole element: product of per-factor parities.
    bool is_odd() const { return std::popcount(odd) & 1; }

    // Primitive idempotent: every factor in {qp, pq}.
    bool is_atom() const { return odd == 0; }

    std::uint64_t key() const { return (static_cast<std::uint64_t>(odd) << 32) | h; }

    static EfbBasisElement from_key(int n, std::uint64_t k) {
        return EfbBasisElement(n, static_cast<std::uint32_t>(k & 0xffffffffu),
                               static_cast<std::uint32_t>(k >> 32));
    }

    friend bool operator==(const EfbBasisElement&, const EfbBasisElement&) = default;

    std::string to_string() const {
        static const char* names[4] = {"pq", "qp", "p", "q"};
        std::string out;
        for (int i = 1; i <= n; ++i) {
            if (i > 1) out += ' ';
            out += names[static_cast<std::uint8_t>(factor(i))];
            out += std::to_string(i);
        }
        return out;
    }
};

// Product of two EFB basis elements: componentwise factor products with the
// interleaving sign picked up by moving each y_i left across the odd factors
// x_j with j > i.
inline std::optional<std::pair<int, EfbBasisElement>> efb_product(const EfbBasisElement& x,
                                                                  const EfbBasisElement& y) {
    check_same_dimension(x.n, y.n);
    const std::uint32_t mask = (x.n >= 32) ? ~0u : ((1u << x.n) - 1u);
    // Per index: nonzero iff (h_x ^ odd_x) == h_y.
    if (((x.h ^ x.odd ^ y.h) & mask) != 0) return std::nullopt;

    int swaps = 0;
    std::uint32_t yo = y.odd & mask;
    while (yo) {
        const int i = std::countr_zero(yo);
        yo &= yo - 1;
        swaps += std::popcount(x.odd & mask & ~((2u << i) - 1u));
    }
    const int sign = (swaps & 1) ? -1 : 1;
    return std::make_pair(sign, EfbBasisElement(x.n, x.h, x.odd ^ y.odd));
}

// Sparse exact-integer element of Cl(R^{n,n}) in the EFB basis.  Immutable in
// spirit: operations return fresh values; no stored zero coefficients.
class Multivector {
public:
    using TermMap = std::map<std::uint64_t, Coeff>;

    explicit Multivector(int n) : n_(n) { check_dimension(n); }

    int dimension() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // True when every term is even at every index (all factors in {qp, pq});
    // products of such elements reduce to a key-merge.
    bool all_factors_even() const {
        for (const auto& [k, c] : terms_)
            if (k >> 32) return false;
        return true;
    }

    const Coeff& coeff(const EfbBasisElement& e) const {
        static const Coeff zero = 0;
        auto it = terms_.find(e.key());
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const EfbBasisElement& e, const Coeff& c) {
        check_same_dimension(n_, e.n);
        add_key(e.key(), c);
    }

    void add_key(std::uint64_t key, const Coeff& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Multivector zero(int n) { return Multivector(n); }

    static Multivector basis(const EfbBasisElement& e, const Coeff& c = 1) {
        Multivector out(e.n);
        out.add_term(e, c);
        return out;
    }

    // Identity: the expansion of {q_1,p_1}...{q_n,p_n}, i.e. the sum of all
    // 2^n primitive idempotents with coefficient +1.
    static Multivector identity(int n) {
        Multivector out(n);
        for (std::uint32_t a = 0; a < (1u << n); ++a) out.terms_.emplace(a, 1);
        return out;
    }

    // Volume element omega = gamma_1...gamma_2n
    //                       = (-1)^{n(n-1)/2} [q_1,p_1]...[q_n,p_n].
    static Multivector omega(int n) {
        Multivector out(n);
        const bool lead = (n * (n - 1) / 2) & 1;
        for (std::uint32_t a = 0; a < (1u << n); ++a) {
            const bool neg = lead ^ ((n - std::popcount(a)) & 1);
            out.terms_.emplace(a, neg ? -1 : 1);
        }
        return out;
    }

    // Witt vectors and generators as algebra elements: p_i is the sum of the
    // 2^{n-1} basis elements with factor p at index i and idempotent factors
    // elsewhere (p_i = p_i * identity), likewise q_i.
    static Multivector witt_p(int i, int n) { return vector_term(i, n, false); }
    static Multivector witt_q(int i, int n) { return vector_term(i, n, true); }

    static Multivector generator(GeneratorIndex g, int n) {
        g.check(n);
        const int i = g.witt_index(n);
        Multivector out = witt_p(i, n);
        const Coeff qc = g.spacelike(n) ? 1 : -1;
        for (auto& [k, c] : witt_q(i, n).terms_) out.add_key(k, qc * c);
        return out;
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        check_same_dimension(a.n_, b.n_);
        Multivector out = a;
        for (const auto& [k, c] : b.terms_) out.add_key(k, c);
        return out;
    }

    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        check_same_dimension(a.n_, b.n_);
        Multivector out = a;
        for (const auto& [k, c] : b.terms_) out.add_key(k, -c);
        return out;
    }

    friend Multivector operator*(const Coeff& s, const Multivector& a) {
        Multivector out(a.n_);
        if (s == 0) return out;
        for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, s * c);
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str() + "*(" + EfbBasisElement::from_key(n_, k).to_string() + ")";
        }
        return out;
    }

private:
    static Multivector vector_term(int i, int n, bool q_side) {
        check_dimension(n);
        if (i < 1 || i > n) throw dimension_error("Witt index out of range");
        Multivector out(n);
        const std::uint32_t odd = 1u << (i - 1);
        for (std::uint32_t a = 0; a < (1u << (n - 1)); ++a) {
            // Spread the n-1 idempotent h bits around position i-1.
            const std::uint32_t low = a & (odd - 1u);
            const std::uint32_t high = (a ^ low) << 1;
            const std::uint32_t h = low | high | (q_side ? odd : 0u);
            out.terms_.emplace((static_cast<std::uint64_t>(odd) << 32) | h, 1);
        }
        return out;
    }

    int n_;
    TermMap terms_;
};

namespace detail {

// General bilinear product: every term pair through efb_product.
inline Multivector mv_mul_generic(const Multivector& a, const Multivector& b) {
    check_same_dimension(a.dimension(), b.dimension());
    const int n = a.dimension();
    Multivector out(n);
    for (const auto& [ka, ca] : a.terms()) {
        const auto ea = EfbBasisElement::from_key(n, ka);
        for (const auto& [kb, cb] : b.terms()) {
            const auto r = efb_product(ea, EfbBasisElement::from_key(n, kb));
            if (!r) continue;
            out.add_key(r->second.key(), r->first * (ca * cb));
        }
    }
    return out;
}

// Fast path for all-even-factor operands: term pairs survive only on equal
// keys (f_i f_j = delta_ij f_i at every index), so the product is a sorted
// key merge with no signs.
inline Multivector mv_mul_even(const Multivector& a, const Multivector& b) {
    Multivector out(a.dimension());
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            out.add_key(ia->first, ia->second * ib->second);
            ++ia, ++ib;
        }
    }
    return out;
}

}  // namespace detail

inline Multivector mv_mul(const Multivector& a, const Multivector& b) {
    check_same_dimension(a.dimension(), b.dimension());
    if (a.all_factors_even() && b.all_factors_even()) return detail::mv_mul_even(a, b);
    return detail::mv_mul_generic(a, b);
}

inline Multivector operator*(const Multivector& a, const Multivector& b) { return mv_mul(a, b); }

// gamma_i A gamma_i^{-1}.  Conjugation maps each EFB basis element to a
// signed basis element: the h bit at the touched Witt pair flips, the sign is
// (-1)^{#odd factors at the other indices}, with one more flip when the
// generator is timelike and the touched factor is odd.
inline Multivector conjugate_by_generator(const Multivector& a, GeneratorIndex g) {
    const int n = a.dimension();
    g.check(n);
    const std::uint32_t bit = 1u << (g.witt_index(n) - 1);
    const bool timelike = !g.spacelike(n);
    Multivector out(n);
    for (const auto& [k, c] : a.terms()) {
        const auto odd = static_cast<std::uint32_t>(k >> 32);
        const bool factor_is_odd = odd & bit;
        int flips = std::popcount(odd) - (factor_is_odd ? 1 : 0);
        if (timelike && factor_is_odd) ++flips;
        out.add_key(k ^ bit, (flips & 1) ? -c : c);
    }
    return out;
}

}  // namespace clifsat
