#pragma once

#include <functional>
#include <variant>

#include "interp/core_model.hpp"
#include "interp/features.hpp"

namespace interp {

// ||Sigma^{1/2} (alpha_hat - alpha*)||^2. Without sigma_half the family is whitened (Sigma = I).
double test_mse_analytic(const Vector& alpha_hat, const Vector& alpha_star,
                         const std::optional<Matrix>& sigma_half = std::nullopt);
double test_mse_analytic(const CVector& alpha_hat, const Vector& alpha_star);

// (alpha_hat - alpha*)^T Sigma (alpha_hat - alpha*), for moment matrices too ill-conditioned to root.
double test_mse_quadratic(const Vector& alpha_hat, const Vector& alpha_star, const Matrix& sigma);

// Ground truth for fresh test draws: a linear signal in the family's features, or a constant.
struct LinearTarget {
    Vector alpha_star;
};
struct ConstantTarget {
    double value = 1.0;
};
using Target = std::variant<LinearTarget, ConstantTarget>;

struct EmpiricalMse {
    double mean = 0.0;
    double stderr_ = 0.0;
};

// Mean over n_test fresh draws of |Y - <a(X), alpha_hat>|^2 - sigma^2, with its standard error.
// Random covariates are used for Fourier and polynomial families.
template <class S>
EmpiricalMse test_mse_empirical(const Vec<S>& alpha_hat, const Target& target, double sigma2,
                                const FeatureFamily& family, Rng& rng, Index n_test);

// Keeps the n entries of largest magnitude; ties go to the lower index.
template <class S>
Vec<S> truncate_top_n(const Vec<S>& alpha, Index n);

using RealInterpolator = std::function<Vector(const Vector& Y)>;

// min over probes of ||A trunc_n(alpha_hat(Y))||^2 / ||Y||^2. Only certifies the probes used.
double parsimony_beta(const RealInterpolator& interpolator, const Matrix& A, const std::vector<Vector>& probes);

struct ErrorSplit {
    double estimation = 0.0;  // ||alpha_1 - alpha*||^2
    double prediction = 0.0;  // ||A (alpha_1 - alpha*)||^2 / n
};

ErrorSplit estimation_and_prediction_error(const Vector& alpha_1, const Vector& alpha_star, const Matrix& A);

// Sample quantile with linear interpolation between order statistics (type 7).
double quantile(std::vector<double> values, double q);
double median(std::vector<double> values);
double mean(const std::vector<double>& values);

}  // namespace interp
