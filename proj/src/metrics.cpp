#include "interp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace interp {

double test_mse_analytic(const Vector& alpha_hat, const Vector& alpha_star, const std::optional<Matrix>& sigma_half) {
    if (alpha_hat.size() != alpha_star.size()) throw DimensionMismatch("estimate and signal differ in length");
    const Vector diff = alpha_hat - alpha_star;
    if (!sigma_half) return diff.squaredNorm();
    if (sigma_half->rows() != diff.size() || sigma_half->cols() != diff.size())
        throw DimensionMismatch("Sigma^{1/2} has the wrong shape");
    return (*sigma_half * diff).squaredNorm();
}

double test_mse_analytic(const CVector& alpha_hat, const Vector& alpha_star) {
    if (alpha_hat.size() != alpha_star.size()) throw DimensionMismatch("estimate and signal differ in length");
    return (alpha_hat - alpha_star.cast<cplx>()).squaredNorm();
}

double test_mse_quadratic(const Vector& alpha_hat, const Vector& alpha_star, const Matrix& sigma) {
    if (alpha_hat.size() != alpha_star.size() || sigma.rows() != alpha_hat.size() || sigma.cols() != alpha_hat.size())
        throw DimensionMismatch("quadratic form operands disagree in shape");
    const Vector diff = alpha_hat - alpha_star;
    return std::max(0.0, diff.dot(sigma * diff));
}

namespace {

// Fresh feature rows of width `width` for the family.
template <class S>
Mat<S> fresh_rows(const FeatureFamily& family, Index rows, Index width, Rng& rng, const Matrix* sigma_half);

template <>
Matrix fresh_rows<double>(const FeatureFamily& family, Index rows, Index width, Rng& rng, const Matrix* sigma_half) {
    switch (family.kind) {
    case FamilyKind::GaussianIid:
        return gaussian_iid_features(rows, width, rng);
    case FamilyKind::GaussianCov:
        return gaussian_iid_features(rows, width, rng) * *sigma_half;
    case FamilyKind::GaussianShiftedMean:
        return (gaussian_iid_features(rows, width, rng) * std::sqrt(family.entry_variance)).array() +
               family.entry_mean;
    case FamilyKind::Vandermonde:
    case FamilyKind::Legendre: {
        FeatureFamily wide = family;
        wide.d = width;
        const Vector x = sample_covariates({Spacing::UniformRandom, Domain::Symmetric}, rows, rng);
        return evaluate_real_features(wide, x);
    }
    default:
        throw InvalidArgument("family " + to_string(family.kind) + " has complex features");
    }
}

template <>
CMatrix fresh_rows<cplx>(const FeatureFamily& family, Index rows, Index width, Rng& rng, const Matrix*) {
    if (!family.is_complex()) throw InvalidArgument("complex estimate needs the Fourier family");
    const Vector x = sample_covariates({Spacing::UniformRandom, Domain::UnitInterval}, rows, rng);
    return fourier_features(x, width);
}

}  // namespace

template <class S>
EmpiricalMse test_mse_empirical(const Vec<S>& alpha_hat, const Target& target, double sigma2,
                                const FeatureFamily& family, Rng& rng, Index n_test) {
    if (n_test < 1) throw InvalidArgument("n_test must be positive");
    Index width = alpha_hat.size();
    Vec<S> est = alpha_hat;
    Vec<S> truth;
    const bool linear = std::holds_alternative<LinearTarget>(target);
    if (linear) {
        const Vector& a = std::get<LinearTarget>(target).alpha_star;
        if (family.is_gaussian() && a.size() != width)
            throw DimensionMismatch("Gaussian families need the signal and estimate to share d");
        width = std::max(width, a.size());
        truth = Vec<S>::Zero(width);
        truth.head(a.size()) = a.template cast<S>();
        est.conservativeResize(width);
        est.tail(width - alpha_hat.size()).setZero();
    }
    std::optional<Matrix> sigma_half;
    if (family.kind == FamilyKind::GaussianCov) sigma_half = symmetric_sqrt(family.covariance);

    const double sd = std::sqrt(sigma2);
    const Index batch = 1024;
    double sum = 0.0, sum_sq = 0.0;
    for (Index start = 0; start < n_test; start += batch) {
        const Index rows = std::min(batch, n_test - start);
        const Mat<S> F = fresh_rows<S>(family, rows, width, rng, sigma_half ? &*sigma_half : nullptr);
        const Vec<S> pred = F * est;
        const Vec<S> clean = linear ? Vec<S>(F * truth)
                                    : Vec<S>::Constant(rows, S(std::get<ConstantTarget>(target).value));
        for (Index i = 0; i < rows; ++i) {
            const S y = clean(i) + S(sd * rng.normal());
            const double e = std::norm(y - pred(i)) - sigma2;
            sum += e;
            sum_sq += e * e;
        }
    }
    const double nt = static_cast<double>(n_test);
    EmpiricalMse out;
    out.mean = sum / nt;
    const double var = n_test > 1 ? std::max(0.0, (sum_sq - nt * out.mean * out.mean) / (nt - 1.0)) : 0.0;
    out.stderr_ = std::sqrt(var / nt);
    return out;
}

template EmpiricalMse test_mse_empirical<double>(const Vector&, const Target&, double, const FeatureFamily&, Rng&, Index);
template EmpiricalMse test_mse_empirical<cplx>(const CVector&, const Target&, double, const FeatureFamily&, Rng&, Index);

template <class S>
Vec<S> truncate_top_n(const Vec<S>& alpha, Index n) {
    if (n >= alpha.size()) return alpha;
    IndexSet idx(static_cast<std::size_t>(alpha.size()));
    std::iota(idx.begin(), idx.end(), Index{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Index a, Index b) { return std::abs(alpha(a)) > std::abs(alpha(b)); });
    Vec<S> out = Vec<S>::Zero(alpha.size());
    for (Index i = 0; i < n; ++i) out(idx[static_cast<std::size_t>(i)]) = alpha(idx[static_cast<std::size_t>(i)]);
    return out;
}

template Vector truncate_top_n<double>(const Vector&, Index);
template CVector truncate_top_n<cplx>(const CVector&, Index);

double parsimony_beta(const RealInterpolator& interpolator, const Matrix& A, const std::vector<Vector>& probes) {
    if (probes.empty()) throw InvalidArgument("parsimony estimate needs at least one probe");
    double beta = std::numeric_limits<double>::infinity();
    for (const Vector& y : probes) {
        const double energy = y.squaredNorm();
        if (energy == 0.0) throw InvalidArgument("probe outputs must be nonzero");
        const Vector kept = truncate_top_n<double>(interpolator(y), A.rows());
        beta = std::min(beta, (A * kept).squaredNorm() / energy);
    }
    return beta;
}

ErrorSplit estimation_and_prediction_error(const Vector& alpha_1, const Vector& alpha_star, const Matrix& A) {
    if (alpha_1.size() != alpha_star.size() || A.cols() != alpha_1.size())
        throw DimensionMismatch("estimate, signal and design disagree in shape");
    const Vector diff = alpha_1 - alpha_star;
    return {diff.squaredNorm(), (A * diff).squaredNorm() / static_cast<double>(A.rows())};
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw InvalidArgument("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

double mean(const std::vector<double>& values) {
    if (values.empty()) throw InvalidArgument("mean of an empty sample");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

}  // namespace interp
