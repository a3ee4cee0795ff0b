#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace clifsat {

// Structural ceiling: h/g signatures are packed into 32-bit words and atom
// sets into 2^n-bit vectors, so n can never exceed this.
inline constexpr int kHardMaxN = 30;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing elements of Cl(n,n) with different n.
struct dimension_error : error {
    using error::error;
};

// Operation would materialize a 2^n-sized object beyond the configured guard.
struct guard_error : error {
    using error::error;
};

// A multivector handed to the atom-set layer is not a 0/1 sum of primitive
// idempotents.
struct malformed_idempotent_error : error {
    using error::error;
};

// A stated hypothesis of an operation is violated (e.g. the symmetry test on
// a formula with an empty or tautological clause).
struct precondition_error : error {
    using error::error;
};

// Numeric input outside the declared tolerance (non-orthogonal matrix,
// singular or ill-conditioned form).
struct tolerance_error : error {
    using error::error;
};

namespace detail {

inline int initial_max_n() {
    if (const char* s = std::getenv("CLIFSAT_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 1 && v <= kHardMaxN) return static_cast<int>(v);
    }
    return 24;
}

inline int& max_n_slot() {
    static int v = initial_max_n();
    return v;
}

}  // namespace detail

// Guard on n for operations that allocate 2^n-sized state.  Default 24,
// overridable by the CLIFSAT_MAX_N environment variable or set_max_n.
inline int max_n() { return detail::max_n_slot(); }

inline void set_max_n(int n) {
    if (n < 1 || n > kHardMaxN)
        throw guard_error("max-n must be in 1.." + std::to_string(kHardMaxN) +
                          ", got " + std::to_string(n));
    detail::max_n_slot() = n;
}

inline void check_dimension(int n) {
    if (n < 1) throw dimension_error("dimension must be positive, got " + std::to_string(n));
    if (n > max_n())
        throw guard_error("dimension " + std::to_string(n) + " exceeds guard " +
                          std::to_string(max_n()) + " (raise CLIFSAT_MAX_N or --max-n)");
}

inline void check_same_dimension(int a, int b) {
    if (a != b)
        throw dimension_error("dimension mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b));
}

}  // namespace clifsat
