#include "interp/interpolators.hpp"

#include <cmath>

namespace interp {

void validate_weights(const Vector& weights) {
    for (Index j = 0; j < weights.size(); ++j)
        if (!(weights(j) > 0.0) || !std::isfinite(weights(j)))
            throw NonPositiveWeight("feature weight " + std::to_string(j) + " is not a positive finite number");
}

template <class S>
InterpolatorResult<S> min_l2_interpolate(const TrainingSet<S>& ts, double rank_tol) {
    Vec<S> alpha = min_norm_solve(ts.A, ts.Y, rank_tol);
    const double obj = alpha.squaredNorm();
    return make_result<S>(ts.A, ts.Y, std::move(alpha), obj);
}

template <class S>
InterpolatorResult<S> weighted_min_l2_interpolate(const TrainingSet<S>& ts, const Vector& weights,
                                                  double rank_tol) {
    if (weights.size() != ts.d()) throw DimensionMismatch("weight vector length differs from d");
    validate_weights(weights);
    const Vec<S> w = weights.template cast<S>();
    const Mat<S> scaled = ts.A * w.asDiagonal();
    Vec<S> alpha = min_norm_solve(scaled, ts.Y, rank_tol).cwiseProduct(w);
    const double obj = alpha.cwiseAbs2().cwiseQuotient(weights.cwiseAbs2()).sum();
    return make_result<S>(ts.A, ts.Y, std::move(alpha), obj);
}

template InterpolatorResult<double> min_l2_interpolate<double>(const TrainingSet<double>&, double);
template InterpolatorResult<cplx> min_l2_interpolate<cplx>(const TrainingSet<cplx>&, double);
template InterpolatorResult<double> weighted_min_l2_interpolate<double>(const TrainingSet<double>&, const Vector&, double);
template InterpolatorResult<cplx> weighted_min_l2_interpolate<cplx>(const TrainingSet<cplx>&, const Vector&, double);

namespace {
void check_ridge_inputs(const TrainingSet<double>& ts, double lambda2, const Matrix& gamma) {
    if (!(lambda2 > 0.0)) throw InvalidArgument("lambda2 must be positive");
    if (gamma.rows() != ts.d() || gamma.cols() != ts.d()) throw DimensionMismatch("Gamma must be d x d");
}
}  // namespace

Vector ridge_solve(const TrainingSet<double>& ts, double lambda2, const Matrix& gamma) {
    check_ridge_inputs(ts, lambda2, gamma);
    Matrix normal = ts.A.transpose() * ts.A + lambda2 * gamma;
    Eigen::LDLT<Matrix> ldlt(normal);
    if (ldlt.info() != Eigen::Success) throw NotPositiveDefinite("ridge normal matrix is not positive definite");
    return ldlt.solve(ts.A.transpose() * ts.Y);
}

Vector ridge_as_augmented_interpolation(const TrainingSet<double>& ts, double lambda2, const Matrix& gamma) {
    check_ridge_inputs(ts, lambda2, gamma);
    const Index n = ts.n(), d = ts.d();
    const Matrix g_inv_half = symmetric_inverse_sqrt(gamma);
    Matrix aug(n, d + n);
    aug.leftCols(d) = ts.A * g_inv_half;
    aug.rightCols(n) = std::sqrt(lambda2) * Matrix::Identity(n, n);
    const Vector z = min_norm_solve(aug, ts.Y);
    return g_inv_half * z.head(d);
}

namespace oracle {

template <class S>
double ideal_mse(const Mat<S>& B, const Vector& W, double rank_tol) {
    return min_norm_solve(B, Vec<S>(W.template cast<S>()), rank_tol).squaredNorm();
}

template <class S>
IdealResult<S> ideal_interpolate(const TrainingSet<S>& ts, const WhitenedView<S>& wv,
                                 const SparseLinearInstance& inst, double rank_tol) {
    if (inst.dim() != ts.d() || wv.B.cols() != ts.d() || wv.B.rows() != ts.n())
        throw DimensionMismatch("instance, design and whitened view disagree in shape");
    const Vec<S> z = min_norm_solve(wv.B, Vec<S>(ts.W.template cast<S>()), rank_tol);
    Vec<S> alpha = inst.alpha_star.template cast<S>();
    if (wv.is_identity())
        alpha += z;
    else
        alpha += wv.sigma_sqrt_inv->template cast<S>() * z;
    IdealResult<S> out;
    out.ideal_mse = z.squaredNorm();
    out.result = make_result<S>(ts.A, ts.Y, std::move(alpha), out.ideal_mse);
    return out;
}

template double ideal_mse<double>(const Matrix&, const Vector&, double);
template double ideal_mse<cplx>(const CMatrix&, const Vector&, double);
template IdealResult<double> ideal_interpolate<double>(const TrainingSet<double>&, const WhitenedView<double>&,
                                                       const SparseLinearInstance&, double);
template IdealResult<cplx> ideal_interpolate<cplx>(const TrainingSet<cplx>&, const WhitenedView<cplx>&,
                                                   const SparseLinearInstance&, double);

}  // namespace oracle

}  // namespace interp
