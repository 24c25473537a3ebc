#include "interp/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace interp {

SparseLinearInstance make_instance(Index d, IndexSet support, const Vector& values, double sigma2) {
    if (sigma2 < 0.0 || !std::isfinite(sigma2)) throw InvalidArgument("sigma2 must be finite and nonnegative");
    if (static_cast<Index>(support.size()) != values.size())
        throw DimensionMismatch("support and values differ in length");
    SparseLinearInstance inst;
    inst.alpha_star = Vector::Zero(d);
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0 || support[i] >= d) throw InvalidArgument("support index out of range");
        inst.alpha_star(support[i]) = values(static_cast<Index>(i));
    }
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
        throw InvalidArgument("support has repeated indices");
    inst.support = std::move(support);
    inst.k = static_cast<Index>(inst.support.size());
    inst.sigma2 = sigma2;
    return inst;
}

SparseLinearInstance make_unit_instance(Index d, IndexSet support, double sigma2) {
    const Vector ones = Vector::Ones(static_cast<Index>(support.size()));
    return make_instance(d, std::move(support), ones, sigma2);
}

Vector sample_noise(Rng& rng, Index n, double sigma2) {
    if (sigma2 < 0.0) throw InvalidArgument("sigma2 must be nonnegative");
    const double sd = std::sqrt(sigma2);
    Vector w(n);
    for (Index i = 0; i < n; ++i) w(i) = sd * rng.normal();
    return w;
}

template <class S>
TrainingSet<S> make_training_set(Mat<S> A, const SparseLinearInstance& inst, Vector W) {
    if (A.cols() != inst.dim()) throw DimensionMismatch("feature count differs from signal length");
    if (W.size() != A.rows()) throw DimensionMismatch("noise length differs from sample count");
    TrainingSet<S> ts;
    ts.Y = A * inst.alpha_star.template cast<S>() + W.template cast<S>();
    ts.A = std::move(A);
    ts.W = std::move(W);
    return ts;
}

template <class S>
TrainingSet<S> make_training_set(Mat<S> A, const SparseLinearInstance& inst, Rng& rng) {
    Vector W = sample_noise(rng, A.rows(), inst.sigma2);
    return make_training_set<S>(std::move(A), inst, std::move(W));
}

template TrainingSet<double> make_training_set<double>(Matrix, const SparseLinearInstance&, Vector);
template TrainingSet<cplx> make_training_set<cplx>(CMatrix, const SparseLinearInstance&, Vector);
template TrainingSet<double> make_training_set<double>(Matrix, const SparseLinearInstance&, Rng&);
template TrainingSet<cplx> make_training_set<cplx>(CMatrix, const SparseLinearInstance&, Rng&);

MinNormSolver::MinNormSolver(const Matrix& M, double rank_tol) : n_(M.rows()), d_(M.cols()) {
    if (n_ < 1 || n_ > d_)
        throw DimensionMismatch("min-norm solve needs 1 <= n <= d, got n=" + std::to_string(n_) +
                                ", d=" + std::to_string(d_));
    qr_.compute(M.transpose());
    const Matrix rt = qr_.matrixQR().topRows(n_).triangularView<Eigen::Upper>().transpose();
    Eigen::BDCSVD<Matrix> svd(rt, Eigen::ComputeFullU | Eigen::ComputeFullV);
    singular_ = svd.singularValues();
    const double smax = singular_.size() ? singular_(0) : 0.0;
    const double smin = singular_.size() ? singular_(singular_.size() - 1) : 0.0;
    if (!(smax > 0.0) || smin <= rank_tol * smax)
        throw RankDeficient("smallest singular value " + std::to_string(smin) + " <= tolerance " +
                            std::to_string(rank_tol * smax));
    u_ = svd.matrixU();
    v_ = svd.matrixV();
}

Vector MinNormSolver::solve(const Vector& y) const {
    if (y.size() != n_) throw DimensionMismatch("right-hand side length differs from row count");
    Vector x = Vector::Zero(d_);
    x.head(n_) = v_ * (u_.transpose() * y).cwiseQuotient(singular_);
    x.applyOnTheLeft(qr_.householderQ());
    return x;
}

Vector min_norm_solve(const Matrix& M, const Vector& y, double rank_tol) {
    if (M.rows() != y.size()) throw DimensionMismatch("right-hand side length differs from row count");
    return MinNormSolver(M, rank_tol).solve(y);
}

Matrix realify(const CMatrix& M) {
    const Index n = M.rows(), d = M.cols();
    Matrix R(2 * n, 2 * d);
    R.topLeftCorner(n, d) = M.real();
    R.topRightCorner(n, d) = -M.imag();
    R.bottomLeftCorner(n, d) = M.imag();
    R.bottomRightCorner(n, d) = M.real();
    return R;
}

Vector realify(const CVector& y) {
    Vector r(2 * y.size());
    r << y.real(), y.imag();
    return r;
}

CVector complexify(const Vector& x) {
    const Index d = x.size() / 2;
    CVector c(d);
    for (Index j = 0; j < d; ++j) c(j) = cplx(x(j), x(d + j));
    return c;
}

CVector min_norm_solve(const CMatrix& M, const CVector& y, double rank_tol) {
    if (M.rows() != y.size()) throw DimensionMismatch("right-hand side length differs from row count");
    return complexify(min_norm_solve(realify(M), realify(y), rank_tol));
}

Vector least_squares_solve(const Matrix& M, const Vector& y, double rank_tol) {
    if (M.rows() < M.cols() || M.cols() < 1) throw DimensionMismatch("least squares needs n >= d >= 1");
    if (M.rows() != y.size()) throw DimensionMismatch("right-hand side length differs from row count");
    // M = Q R; x = R^{-1} Q^T y, with conditioning checked on R's singular values.
    Eigen::HouseholderQR<Matrix> qr(M);
    const Index d = M.cols();
    const Matrix r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    Eigen::BDCSVD<Matrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vector s = svd.singularValues();
    if (!(s(0) > 0.0) || s(d - 1) <= rank_tol * s(0)) throw RankDeficient("design has deficient column rank");
    Vector qty = qr.householderQ().transpose() * y;
    return svd.matrixV() * (svd.matrixU().transpose() * qty.head(d)).cwiseQuotient(s);
}

CVector least_squares_solve(const CMatrix& M, const CVector& y, double rank_tol) {
    return complexify(least_squares_solve(realify(M), realify(y), rank_tol));
}

namespace {
Matrix spectral_power(const Matrix& sigma, double floor, double power) {
    if (sigma.rows() != sigma.cols()) throw DimensionMismatch("covariance must be square");
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, sigma.cwiseAbs().maxCoeff()))
        throw NotPositiveDefinite("covariance is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sigma);
    const Vector& lam = eig.eigenvalues();
    if (lam.minCoeff() < floor)
        throw NotPositiveDefinite("covariance eigenvalue " + std::to_string(lam.minCoeff()) + " below floor");
    const Vector scaled = lam.array().pow(power).matrix();
    return eig.eigenvectors() * scaled.asDiagonal() * eig.eigenvectors().transpose();
}
}  // namespace

Matrix symmetric_sqrt(const Matrix& sigma, double floor) { return spectral_power(sigma, floor, 0.5); }
Matrix symmetric_inverse_sqrt(const Matrix& sigma, double floor) { return spectral_power(sigma, floor, -0.5); }

}  // namespace interp
