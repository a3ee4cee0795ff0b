#pragma once

// The continuous layer: maximal totally null subspaces of R^{n,n} as pairs of
// n x n matrices.  Writing R^{n,n} as R^n x R^n with (x,y)^2 = x^2 - y^2, an
// n-dimensional subspace is the column span of a stacked (u; s) block, and
// (I, t) is totally null exactly when t is orthogonal.  The discrete family
// sits inside as (I, lambda) with lambda diagonal +-1, and clause-induced
// subsets of O(1)^n widen to unions of equivalence classes C_lambda of O(n).
//
// Everything here is floating point with a declared tolerance; the class
// assignment is deliberately partial (symmetric involutions only), since the
// general 2^n-class split of O(n) is not pinned down here.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/common.hpp"
#include "clifsat/nullspaces.hpp"

namespace clifsat {

inline constexpr double kDefaultTolerance = 1e-9;

using Matrix = Eigen::MatrixXd;

inline double orthogonality_residual(const Matrix& t) {
    return (t.transpose() * t - Matrix::Identity(t.cols(), t.cols())).norm();
}

// An element of O(n): t^T t = I within tolerance.
struct OrthogonalMatrix {
    Matrix t;

    int size() const { return static_cast<int>(t.rows()); }

    static OrthogonalMatrix checked(Matrix m, double eps = kDefaultTolerance) {
        if (m.rows() != m.cols()) throw tolerance_error("orthogonal matrix must be square");
        const double r = orthogonality_residual(m);
        if (!(r < eps))
            throw tolerance_error("orthogonality residual " + std::to_string(r) +
                                  " exceeds tolerance");
        return OrthogonalMatrix{std::move(m)};
    }
};

// A subspace of R^{n,n} as the column span of the stacked 2n x n block
// (first; second); the (u, s) of the text.
struct SubspaceForm {
    Matrix first;
    Matrix second;

    int size() const { return static_cast<int>(first.cols()); }

    Matrix stacked() const {
        Matrix w(first.rows() + second.rows(), first.cols());
        w << first, second;
        return w;
    }
};

inline SubspaceForm reference_p(int n) {
    return {Matrix::Identity(n, n), Matrix::Identity(n, n)};
}
inline SubspaceForm reference_q(int n) {
    return {Matrix::Identity(n, n), -Matrix::Identity(n, n)};
}

inline SubspaceForm form_of_lambda(const SignatureLambda& l) {
    Matrix d = Matrix::Identity(l.n, l.n);
    for (int i = 1; i <= l.n; ++i) d(i - 1, i - 1) = l.sign(i);
    return {Matrix::Identity(l.n, l.n), std::move(d)};
}

// Largest principal angle proxy: residual of projecting the columns of a
// onto the column span of b, and vice versa, relative to the column norms.
inline double span_residual(const Matrix& a, const Matrix& b) {
    const auto qa = Eigen::HouseholderQR<Matrix>(a);
    const auto qb = Eigen::HouseholderQR<Matrix>(b);
    const Matrix ua = qa.householderQ() * Matrix::Identity(a.rows(), a.cols());
    const Matrix ub = qb.householderQ() * Matrix::Identity(b.rows(), b.cols());
    const double ra = (ua - ub * (ub.transpose() * ua)).norm();
    const double rb = (ub - ua * (ua.transpose() * ub)).norm();
    return std::max(ra, rb);
}

// Gram matrix of the columns under the neutral metric; identically zero on a
// totally null subspace.
inline Matrix neutral_gram(const SubspaceForm& f) {
    return f.first.transpose() * f.first - f.second.transpose() * f.second;
}

inline bool is_totally_null(const SubspaceForm& f, double eps = kDefaultTolerance) {
    return neutral_gram(f).norm() < eps;
}

// (u, s) ~ (I, s u^{-1}): the two forms span the same subspace whenever u is
// invertible.  Ill-conditioned u is refused rather than silently normalized.
inline SubspaceForm normalize_form(const SubspaceForm& f, double eps = kDefaultTolerance,
                                   double max_condition = 1e8) {
    if (f.first.rows() != f.first.cols() || f.second.rows() != f.second.cols())
        throw tolerance_error("form blocks must be square");
    const int n = static_cast<int>(f.first.rows());
    Eigen::JacobiSVD<Matrix> svd(f.first, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues()(n - 1);
    const double smax = svd.singularValues()(0);
    if (!(smin > 0) || smax / smin > max_condition)
        throw tolerance_error("form has singular or ill-conditioned first block");

    SubspaceForm out{Matrix::Identity(n, n), f.second * f.first.inverse()};
    const double r = span_residual(f.stacked(), out.stacked());
    if (!(r < eps))
        throw tolerance_error("normalized form span residual " + std::to_string(r) +
                              " exceeds tolerance");
    return out;
}

// The two-subspace normal form: in the orthogonal basis with block columns
// (u, 0; 0, t1 u) the pair (I, t1), (I, t2) becomes (I, I), (I, u^T t1^T t2 u).
// P = (I, I) stays fixed for every orthogonal u.
inline std::pair<SubspaceForm, SubspaceForm> basis_change(const OrthogonalMatrix& t1,
                                                          const OrthogonalMatrix& t2,
                                                          const OrthogonalMatrix& u,
                                                          double eps = kDefaultTolerance) {
    const int n = t1.size();
    const Matrix t = u.t.transpose() * t1.t.transpose() * t2.t * u.t;
    const SubspaceForm out1{Matrix::Identity(n, n), Matrix::Identity(n, n)};
    const SubspaceForm out2{Matrix::Identity(n, n), t};

    // The change of basis maps the normal forms back onto the original spans.
    Matrix back1(2 * n, n), back2(2 * n, n), orig1(2 * n, n), orig2(2 * n, n);
    back1 << u.t, t1.t * u.t;
    back2 << u.t, t1.t * u.t * t;
    orig1 << Matrix::Identity(n, n), t1.t;
    orig2 << Matrix::Identity(n, n), t2.t;
    const double r = std::max(span_residual(back1, orig1), span_residual(back2, orig2));
    if (!(r < eps))
        throw tolerance_error("basis change span residual " + std::to_string(r) +
                              " exceeds tolerance");
    return {out1, out2};
}

// --- Classification ---------------------------------------------------------

enum class ClassStatus { classified, indeterminate, unclassified };

struct ClassLabel {
    ClassStatus status = ClassStatus::unclassified;
    std::optional<SignatureLambda> lambda;
    double involution_residual = 0.0;

    // Sign-placement convention for non-diagonal involutions, recorded so
    // label-level comparisons are reproducible.
    static constexpr const char* kConvention = "descending-eigenvalue, max-|component| axis";

    bool classified() const { return status == ClassStatus::classified; }
};

// Partial classifier: symmetric involutions only.  Eigendecompose; each
// eigenvector, taken in descending eigenvalue order, claims the free axis
// where its component is largest and stamps that axis with the eigenvalue's
// sign.  diag(lambda) round-trips exactly; anything that is not a symmetric
// involution within tolerance is UNCLASSIFIED (borderline residuals are
// flagged indeterminate instead).
inline ClassLabel classify(const OrthogonalMatrix& om, double eps = kDefaultTolerance) {
    const Matrix& t = om.t;
    const int n = static_cast<int>(t.rows());
    ClassLabel out;
    const double residual = std::max((t - t.transpose()).norm(),
                                     (t * t - Matrix::Identity(n, n)).norm());
    out.involution_residual = residual;
    if (residual >= eps) {
        out.status = residual < 1e3 * eps ? ClassStatus::indeterminate : ClassStatus::unclassified;
        return out;
    }

    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (t + t.transpose()));
    std::uint32_t neg = 0;
    std::vector<bool> claimed(static_cast<std::size_t>(n), false);
    for (int k = n - 1; k >= 0; --k) {  // descending eigenvalue order
        const auto vec = eig.eigenvectors().col(k);
        int axis = -1;
        double best = -1.0;
        for (int i = 0; i < n; ++i)
            if (!claimed[static_cast<std::size_t>(i)] && std::abs(vec(i)) > best) {
                best = std::abs(vec(i));
                axis = i;
            }
        claimed[static_cast<std::size_t>(axis)] = true;
        if (eig.eigenvalues()(k) < 0) neg |= 1u << axis;
    }
    out.status = ClassStatus::classified;
    out.lambda = SignatureLambda(n, neg);
    return out;
}

// --- Samplers ---------------------------------------------------------------

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the R
// diagonal signs folded into Q.
inline OrthogonalMatrix haar_sample(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return OrthogonalMatrix{std::move(q)};
}

inline OrthogonalMatrix haar_sample(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_sample(n, rng);
}

// Product of the n(n-1)/2 plane rotations G(i,j,theta) in lexicographic pair
// order.
inline OrthogonalMatrix givens_compose(int n, const std::vector<double>& angles) {
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (angles.size() != expected)
        throw dimension_error("expected " + std::to_string(expected) + " angles, got " +
                              std::to_string(angles.size()));
    Matrix t = Matrix::Identity(n, n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            const double c = std::cos(angles[k]);
            const double s = std::sin(angles[k]);
            Matrix g = Matrix::Identity(n, n);
            g(i, i) = c;
            g(j, j) = c;
            g(i, j) = -s;
            g(j, i) = s;
            t = t * g;
        }
    return OrthogonalMatrix{std::move(t)};
}

// --- Cover search over O(n) -------------------------------------------------

struct CoverConfig {
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    int givens_steps = 16;             // grid resolution per angle
    double involution_fraction = 0.4;  // share of involution-biased draws
    double givens_fraction = 0.3;      // share of Givens-grid draws; rest Haar
    double eps = kDefaultTolerance;
};

struct CoverSearchReport {
    std::size_t samples = 0;
    std::size_t classified = 0;
    std::size_t indeterminate = 0;
    std::size_t covered_hits = 0;
    std::map<std::uint32_t, std::size_t> class_hits;  // lambda mask -> classified draws
    std::vector<SignatureLambda> uncovered;           // distinct, each a verified witness
    bool consistent_with_o1n = true;
    SolveStatus o1n_status = SolveStatus::UNSAT;

    double unclassified_fraction() const {
        return samples == 0 ? 0.0
                            : static_cast<double>(samples - classified) /
                                  static_cast<double>(samples);
    }
};

// Sample O(n), classify, and test the classified mass against the clause
// cover: a classified draw is covered iff its lambda lies in the union of the
// clause T' sets.  Uncovered lambdas are solution candidates and are verified
// against the formula before being reported.
inline CoverSearchReport cover_search(const CnfFormula& f, const CoverConfig& cfg = {}) {
    const int n = f.n;
    const TPrimeSet covered = tprime_union(f);
    const CoverVerdict o1n = o1n_cover_test(f);

    CoverSearchReport report;
    report.o1n_status = o1n.status;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> mask_draw(0, (1u << n) - 1u);
    std::uniform_int_distribution<int> step_draw(0, std::max(1, cfg.givens_steps) - 1);
    const std::size_t angle_count = static_cast<std::size_t>(n) * (n - 1) / 2;

    AtomSet seen_uncovered(n);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        OrthogonalMatrix t{Matrix::Identity(n, n)};
        const double kind = coin(rng);
        if (kind < cfg.involution_fraction) {
            // Involution-biased draw: a random lambda, half the time dressed
            // into a non-diagonal form by orthogonal conjugation.
            Matrix d = form_of_lambda(SignatureLambda(n, mask_draw(rng))).second;
            if (coin(rng) < 0.5) {
                const Matrix u = haar_sample(n, rng).t;
                d = u.transpose() * d * u;
            }
            t = OrthogonalMatrix{std::move(d)};
        } else if (kind < cfg.involution_fraction + cfg.givens_fraction) {
            std::vector<double> angles(angle_count);
            for (auto& a : angles)
                a = step_draw(rng) * (2.0 * std::numbers::pi / std::max(1, cfg.givens_steps));
            t = givens_compose(n, angles);
        } else {
            t = haar_sample(n, rng);
        }

        ++report.samples;
        const ClassLabel label = classify(t, cfg.eps);
        if (label.status == ClassStatus::indeterminate) ++report.indeterminate;
        if (!label.classified()) continue;
        ++report.classified;
        ++report.class_hits[label.lambda->neg_mask];

        if (covered.contains(*label.lambda)) {
            ++report.covered_hits;
        } else {
            const AtomId atom = atom_of_lambda(*label.lambda);
            if (!f.satisfied_by(atom))
                throw error("internal: uncovered sample fails direct evaluation");
            if (!seen_uncovered.test(atom)) {
                seen_uncovered.set(atom);
                report.uncovered.push_back(*label.lambda);
            }
        }
    }

    // An UNSAT problem covers all of O(1)^n, so no classified draw may fall
    // outside the cover.
    report.consistent_with_o1n =
        (o1n.status == SolveStatus::SAT) || report.uncovered.empty();
    return report;
}

}  // namespace clifsat
