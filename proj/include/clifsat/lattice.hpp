#pragma once

// The finite Boolean algebra of idempotent sums: a primitive idempotent is a
// Boolean atom, a 0/1 sum of them is carried as a 2^n-bit vector indexed by h
// signature.  AND is the Clifford product, OR is s1 + s2 - s1 s2, NOT is
// I - s; the bit-parallel forms here are the fast carrier and are
// cross-checked against the Multivector algebra in the tests.

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clifsat/common.hpp"
#include "clifsat/efb.hpp"

namespace clifsat {

// One primitive idempotent / Boolean atom / full assignment.  Bit i-1 set
// means factor i is q_i p_i, i.e. variable i true.
struct AtomId {
    int n = 0;
    std::uint32_t bits = 0;

    AtomId() = default;
    AtomId(int n_, std::uint32_t bits_) : n(n_), bits(bits_) {}

    bool value(int var) const { return (bits >> (var - 1)) & 1u; }

    EfbBasisElement idempotent() const { return EfbBasisElement(n, bits, 0); }

    friend auto operator<=>(const AtomId&, const AtomId&) = default;

    // Variable 1 leftmost, matching the lambda and span spellings.
    std::string to_string() const {
        std::string s;
        for (int i = 1; i <= n; ++i) s += value(i) ? '1' : '0';
        return s;
    }
};

class AtomSet {
public:
    explicit AtomSet(int n) : n_(n), words_(word_count(n), 0) { check_dimension(n); }

    static AtomSet empty(int n) { return AtomSet(n); }

    static AtomSet full(int n) {
        AtomSet s(n);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    // The subcube of 2^{n-1} atoms whose variable `var` matches `polarity`;
    // the idempotent of the literal rho_var or its complement.
    static AtomSet literal(int var, bool polarity, int n) {
        AtomSet s(n);
        if (var < 1 || var > n)
            throw dimension_error("variable index " + std::to_string(var) + " out of range 1.." +
                                  std::to_string(n));
        const int b = var - 1;
        if (b < 6) {
            const std::uint64_t pat = pattern64(b, polarity);
            for (auto& w : s.words_) w = pat;
        } else {
            for (std::size_t w = 0; w < s.words_.size(); ++w)
                if (((w >> (b - 6)) & 1u) == static_cast<std::size_t>(polarity)) s.words_[w] = ~0ull;
        }
        s.trim();
        return s;
    }

    int dimension() const { return n_; }
    std::size_t capacity() const { return std::size_t{1} << n_; }

    bool test(std::uint32_t index) const { return (words_[index >> 6] >> (index & 63u)) & 1u; }
    bool test(const AtomId& a) const { return test(a.bits); }

    void set(std::uint32_t index, bool v = true) {
        const std::uint64_t bit = 1ull << (index & 63u);
        if (v)
            words_[index >> 6] |= bit;
        else
            words_[index >> 6] &= ~bit;
    }
    void set(const AtomId& a, bool v = true) {
        check_same_dimension(n_, a.n);
        set(a.bits, v);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool all() const { return count() == capacity(); }

    // Atoms in ascending index order.
    std::vector<AtomId> atoms() const {
        std::vector<AtomId> out;
        out.reserve(count());
        for_each([&](AtomId a) { out.push_back(a); });
        return out;
    }

    void for_each(const std::function<void(AtomId)>& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                fn(AtomId(n_, static_cast<std::uint32_t>((w << 6) | static_cast<unsigned>(b))));
            }
        }
    }

    // First member, or nullopt-style sentinel via found flag.
    bool first(AtomId& out) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) {
                out = AtomId(n_, static_cast<std::uint32_t>((w << 6) | std::countr_zero(words_[w])));
                return true;
            }
        return false;
    }

    // Image under the conjugation action of gamma_i / gamma_{i+n}: every atom
    // index has bit (witt-1) flipped.  An involution.
    AtomSet flip_variable(int var) const {
        if (var < 1 || var > n_) throw dimension_error("variable index out of range");
        AtomSet out(n_);
        const int b = var - 1;
        if (b < 6) {
            const int d = 1 << b;
            const std::uint64_t keep = pattern64(b, false);
            for (std::size_t w = 0; w < words_.size(); ++w) {
                const std::uint64_t x = words_[w];
                out.words_[w] = ((x >> d) & keep) | ((x & keep) << d);
            }
        } else {
            const std::size_t stride = std::size_t{1} << (b - 6);
            for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w ^ stride];
        }
        return out;
    }

    friend AtomSet operator&(const AtomSet& a, const AtomSet& b) {
        check_same_dimension(a.n_, b.n_);
        AtomSet out(a.n_);
        for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
        return out;
    }

    friend AtomSet operator|(const AtomSet& a, const AtomSet& b) {
        check_same_dimension(a.n_, b.n_);
        AtomSet out(a.n_);
        for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] | b.words_[i];
        return out;
    }

    friend AtomSet operator~(const AtomSet& a) {
        AtomSet out(a.n_);
        for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = ~a.words_[i];
        out.trim();
        return out;
    }

    friend bool operator==(const AtomSet& a, const AtomSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    static std::size_t word_count(int n) {
        return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
    }

    // 64-bit periodic mask of indices whose bit b equals `polarity` (b < 6).
    static std::uint64_t pattern64(int b, bool polarity) {
        static constexpr std::uint64_t lows[6] = {
            0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
            0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
        };
        return polarity ? ~lows[b] : lows[b];
    }

    void trim() {
        if (n_ < 6) words_[0] &= (1ull << (1u << n_)) - 1ull;
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

// The Boolean operations of the idempotent algebra, set-level.
inline AtomSet bool_and(const AtomSet& a, const AtomSet& b) { return a & b; }
inline AtomSet bool_or(const AtomSet& a, const AtomSet& b) { return a | b; }
inline AtomSet bool_not(const AtomSet& a) { return ~a; }

inline AtomSet var_idempotent(int var, bool polarity, int n) {
    return AtomSet::literal(var, polarity, n);
}

inline Multivector multivector_of_atoms(const AtomSet& s) {
    Multivector out(s.dimension());
    s.for_each([&](AtomId a) { out.add_term(a.idempotent(), 1); });
    return out;
}

inline AtomSet atoms_of_multivector(const Multivector& mv) {
    AtomSet out(mv.dimension());
    for (const auto& [k, c] : mv.terms()) {
        if (k >> 32)
            throw malformed_idempotent_error(
                "term " + EfbBasisElement::from_key(mv.dimension(), k).to_string() +
                " is not a primitive idempotent");
        if (c != 1)
            throw malformed_idempotent_error("coefficient " + c.str() + " outside {0,1}");
        out.set(static_cast<std::uint32_t>(k));
    }
    return out;
}

// Huntington's axiom through the Multivector algebra.
inline bool huntington_check_mv(const Multivector& s1, const Multivector& s2) {
    const Multivector id = Multivector::identity(s1.dimension());
    const Multivector lhs = ((id - (id - s1) * s2) * (id - (id - s1) * (id - s2)));
    return lhs == s1;
}

// Huntington's axiom (I - (I-s1) s2)(I - (I-s1)(I-s2)) = s1, evaluated in the
// set algebra and, when n is small enough for the exact route, in the
// Multivector algebra as well.
inline bool huntington_check(const AtomSet& s1, const AtomSet& s2) {
    check_same_dimension(s1.dimension(), s2.dimension());
    const AtomSet lhs = bool_not(bool_and(bool_not(s1), s2)) &
                        bool_not(bool_and(bool_not(s1), bool_not(s2)));
    bool ok = lhs == s1;
    if (s1.dimension() <= 4)
        ok = ok && huntington_check_mv(multivector_of_atoms(s1), multivector_of_atoms(s2));
    return ok;
}

}  // namespace clifsat
