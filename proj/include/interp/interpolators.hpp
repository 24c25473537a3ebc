#pragma once

#include <map>
#include <string>

#include "interp/core_model.hpp"

namespace interp {

template <class S>
struct InterpolatorResult {
    Vec<S> alpha_hat;
    double residual_norm = 0.0;  // ||A alpha_hat - Y||
    IndexSet support;            // |alpha_hat_j| > support_tol
    double objective = 0.0;
    std::map<std::string, double> diagnostics;

    Index support_size() const { return static_cast<Index>(support.size()); }
};

// Default support tolerance: 1e-8 * ||alpha||_inf.
template <class S>
IndexSet support_of(const Vec<S>& alpha, double rel_tol = 1e-8) {
    IndexSet s;
    if (alpha.size() == 0) return s;
    const double cut = rel_tol * alpha.cwiseAbs().maxCoeff();
    for (Index j = 0; j < alpha.size(); ++j)
        if (std::abs(alpha(j)) > cut) s.push_back(j);
    return s;
}

template <class S>
InterpolatorResult<S> make_result(const Mat<S>& A, const Vec<S>& Y, Vec<S> alpha, double objective) {
    InterpolatorResult<S> r;
    r.residual_norm = (A * alpha - Y).norm();
    r.support = support_of<S>(alpha);
    r.objective = objective;
    r.alpha_hat = std::move(alpha);
    return r;
}

// Minimum Euclidean norm interpolator A^T (A A^T)^{-1} Y.
template <class S>
InterpolatorResult<S> min_l2_interpolate(const TrainingSet<S>& ts, double rank_tol = kDefaultRankTol);

// argmin sum_k |alpha_k|^2 / w_k^2 subject to A alpha = Y, as diag(w) * min_norm(A diag(w), Y).
template <class S>
InterpolatorResult<S> weighted_min_l2_interpolate(const TrainingSet<S>& ts, const Vector& weights,
                                                  double rank_tol = kDefaultRankTol);

void validate_weights(const Vector& weights);

// Normal equations (A^T A + lambda2 Gamma) alpha = A^T Y.
Vector ridge_solve(const TrainingSet<double>& ts, double lambda2, const Matrix& gamma);

// Same estimator as the minimum-norm interpolator of [A Gamma^{-1/2}, sqrt(lambda2) I];
// the first d coordinates are mapped back through Gamma^{-1/2}.
Vector ridge_as_augmented_interpolation(const TrainingSet<double>& ts, double lambda2, const Matrix& gamma);

namespace oracle {

template <class S>
struct IdealResult {
    InterpolatorResult<S> result;
    double ideal_mse = 0.0;
};

// Reads alpha* and W. Sigma^{1/2}(alpha_hat - alpha*) = B^T (B B^T)^{-1} W.
template <class S>
IdealResult<S> ideal_interpolate(const TrainingSet<S>& ts, const WhitenedView<S>& wv,
                                 const SparseLinearInstance& inst, double rank_tol = kDefaultRankTol);

// W^T (B B^T)^{-1} W alone.
template <class S>
double ideal_mse(const Mat<S>& B, const Vector& W, double rank_tol = kDefaultRankTol);

}  // namespace oracle

}  // namespace interp
