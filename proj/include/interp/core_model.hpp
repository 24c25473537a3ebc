#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "interp/errors.hpp"
#include "interp/rng.hpp"

namespace interp {

using Index = Eigen::Index;
using cplx = std::complex<double>;
template <class S> using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S> using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Matrix = Mat<double>;
using Vector = Vec<double>;
using CMatrix = Mat<cplx>;
using CVector = Vec<cplx>;
using IndexSet = std::vector<Index>;

inline constexpr double kDefaultRankTol = 1e-10;

// Ground truth of the sparse linear model. alpha_star vanishes off support.
struct SparseLinearInstance {
    Vector alpha_star;
    double sigma2 = 0.0;
    Index k = 0;
    IndexSet support;

    Index dim() const { return alpha_star.size(); }
};

// Builds an instance from its support and values; validates the invariants.
SparseLinearInstance make_instance(Index d, IndexSet support, const Vector& values, double sigma2);

// Instance with value 1 on the given support.
SparseLinearInstance make_unit_instance(Index d, IndexSet support, double sigma2);

// Y = A * alpha_star + W, with W kept for oracle diagnostics.
template <class S>
struct TrainingSet {
    Mat<S> A;
    Vec<S> Y;
    Vector W;

    Index n() const { return A.rows(); }
    Index d() const { return A.cols(); }
};

// B = A * sigma_sqrt_inv. An empty sigma_sqrt_inv denotes the identity.
template <class S>
struct WhitenedView {
    Mat<S> B;
    std::optional<Matrix> sigma_sqrt_inv;

    bool is_identity() const { return !sigma_sqrt_inv.has_value(); }
};

Vector sample_noise(Rng& rng, Index n, double sigma2);

template <class S>
TrainingSet<S> make_training_set(Mat<S> A, const SparseLinearInstance& inst, Rng& rng);

// Same, with a caller-provided noise realization.
template <class S>
TrainingSet<S> make_training_set(Mat<S> A, const SparseLinearInstance& inst, Vector W);

// Factorization of a wide matrix M (n <= d) for repeated minimum-norm solves.
// Internally M^T = QR, then R^T = U diag(s) V^T, so M = U diag(s) (QV)^T.
class MinNormSolver {
public:
    explicit MinNormSolver(const Matrix& M, double rank_tol = kDefaultRankTol);

    Vector solve(const Vector& y) const;
    Index rows() const { return n_; }
    Index cols() const { return d_; }
    double sigma_min() const { return singular_.minCoeff(); }
    double sigma_max() const { return singular_.maxCoeff(); }
    const Vector& singular_values() const { return singular_; }

private:
    Index n_, d_;
    Eigen::HouseholderQR<Matrix> qr_;
    Matrix u_, v_;
    Vector singular_;
};

// x = M^T (M M^T)^{-1} y. Throws RankDeficient when sigma_min <= rank_tol * sigma_max.
Vector min_norm_solve(const Matrix& M, const Vector& y, double rank_tol = kDefaultRankTol);

// Complex systems are solved through the equivalent real system [Re -Im; Im Re].
CVector min_norm_solve(const CMatrix& M, const CVector& y, double rank_tol = kDefaultRankTol);

// Unique least-squares solution for tall full-column-rank M (n >= d).
Vector least_squares_solve(const Matrix& M, const Vector& y, double rank_tol = kDefaultRankTol);
CVector least_squares_solve(const CMatrix& M, const CVector& y, double rank_tol = kDefaultRankTol);

// Dispatch on shape: min-norm interpolation if n <= d, least squares otherwise.
template <class S>
Vec<S> pseudo_solve(const Mat<S>& M, const Vec<S>& y, double rank_tol = kDefaultRankTol) {
    return M.rows() <= M.cols() ? min_norm_solve(M, y, rank_tol) : least_squares_solve(M, y, rank_tol);
}

Matrix realify(const CMatrix& M);
Vector realify(const CVector& y);
CVector complexify(const Vector& x);

// Symmetric square root and inverse square root by eigendecomposition.
// Throws NotPositiveDefinite if an eigenvalue falls below the absolute floor.
Matrix symmetric_sqrt(const Matrix& sigma, double floor = 1e-12);
Matrix symmetric_inverse_sqrt(const Matrix& sigma, double floor = 1e-12);

}  // namespace interp
