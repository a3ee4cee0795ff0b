#pragma once

// Dense 2^n x 2^n integer-matrix model of Cl(R^{n,n}), the validation oracle
// for the EFB kernel.  Witt vectors are built as Jordan-Wigner ladder
// operators: sign strings Z enforce anticommutation across indices while the
// 2x2 blocks realize the n = 1 EFB matrix
//
//        ( qp  q )
//        ( p   pq )
//
// with rows/columns ordered +,-.  Capped at n = 4: the oracle exists to
// validate, not to compute.

#include <cstdint>
#include <vector>

#include "clifsat/common.hpp"
#include "clifsat/efb.hpp"

namespace clifsat {

inline constexpr int kMaxOracleN = 4;

struct DenseMatrix {
    int size = 0;
    std::vector<Coeff> a;  // row-major

    DenseMatrix() = default;
    explicit DenseMatrix(int size_) : size(size_), a(static_cast<std::size_t>(size_) * size_) {}

    Coeff& at(int r, int c) { return a[static_cast<std::size_t>(r) * size + c]; }
    const Coeff& at(int r, int c) const { return a[static_cast<std::size_t>(r) * size + c]; }

    static DenseMatrix identity(int size) {
        DenseMatrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    friend DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix out(x.size);
        for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
        return out;
    }

    friend DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix out(x.size);
        for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
        return out;
    }

    friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix out(x.size);
        for (int i = 0; i < x.size; ++i)
            for (int k = 0; k < x.size; ++k) {
                const Coeff& v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < x.size; ++j) out.at(i, j) += v * y.at(k, j);
            }
        return out;
    }

    friend DenseMatrix operator*(const Coeff& s, const DenseMatrix& y) {
        DenseMatrix out(y.size);
        for (std::size_t i = 0; i < y.a.size(); ++i) out.a[i] = s * y.a[i];
        return out;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

class DenseOracle {
public:
    explicit DenseOracle(int n) : n_(n), dim_(1 << n) {
        if (n < 1 || n > kMaxOracleN)
            throw guard_error("dense oracle supports n in 1.." + std::to_string(kMaxOracleN) +
                              ", got " + std::to_string(n));
        p_.reserve(n);
        q_.reserve(n);
        for (int i = 1; i <= n; ++i) {
            p_.push_back(ladder(i, false));
            q_.push_back(ladder(i, true));
        }
    }

    int dimension() const { return n_; }
    int matrix_size() const { return dim_; }

    const DenseMatrix& p(int i) const { return p_.at(i - 1); }
    const DenseMatrix& q(int i) const { return q_.at(i - 1); }

    DenseMatrix gamma(GeneratorIndex g) const {
        g.check(n_);
        const int i = g.witt_index(n_);
        return g.spacelike(n_) ? p(i) + q(i) : p(i) - q(i);
    }

    DenseMatrix matrix_of(const EfbBasisElement& e) const {
        check_same_dimension(n_, e.n);
        DenseMatrix out = DenseMatrix::identity(dim_);
        for (int i = 1; i <= n_; ++i) {
            switch (e.factor(i)) {
                case FactorCode::qp: out = out * q(i) * p(i); break;
                case FactorCode::pq: out = out * p(i) * q(i); break;
                case FactorCode::p: out = out * p(i); break;
                case FactorCode::q: out = out * q(i); break;
            }
        }
        return out;
    }

    DenseMatrix matrix_of(const Multivector& mv) const {
        check_same_dimension(n_, mv.dimension());
        DenseMatrix out(dim_);
        for (const auto& [k, c] : mv.terms())
            out = out + c * matrix_of(EfbBasisElement::from_key(n_, k));
        return out;
    }

private:
    // q_i = Z^(i-1) (x) E01 (x) I,  p_i = Z^(i-1) (x) E10 (x) I.
    DenseMatrix ladder(int index, bool q_side) const {
        DenseMatrix m(dim_);
        const int before = index - 1;            // Z factors
        const int after = n_ - index;            // identity factors
        const int lo = 1 << after;               // stride of the E block
        for (int z = 0; z < (1 << before); ++z) {
            const bool neg = std::popcount(static_cast<unsigned>(z)) & 1;
            for (int t = 0; t < lo; ++t) {
                // E01 maps row (z,0,t) -> col (z,1,t); E10 the transpose.
                const int row0 = (z << (after + 1)) | t;
                const int row1 = row0 | lo;
                if (q_side)
                    m.at(row0, row1) = neg ? -1 : 1;
                else
                    m.at(row1, row0) = neg ? -1 : 1;
            }
        }
        return m;
    }

    int n_;
    int dim_;
    std::vector<DenseMatrix> p_;
    std::vector<DenseMatrix> q_;
};

}  // namespace clifsat
