#pragma once

#include <string>
#include <variant>

#include "interp/core_model.hpp"

namespace interp {

enum class FamilyKind { GaussianIid, GaussianCov, GaussianShiftedMean, FourierComplex, Vandermonde, Legendre };

struct FeatureFamily {
    FamilyKind kind = FamilyKind::GaussianIid;
    Index d = 1;
    Matrix covariance;              // GaussianCov only; symmetric positive definite d x d
    double entry_mean = 1.0;        // GaussianShiftedMean only
    double entry_variance = 0.01;   // GaussianShiftedMean only

    static FeatureFamily gaussian_iid(Index d) { return {FamilyKind::GaussianIid, d, {}, 1.0, 0.01}; }
    static FeatureFamily gaussian_cov(Matrix sigma);
    static FeatureFamily shifted_mean(Index d, double mean = 1.0, double variance = 0.01) {
        return {FamilyKind::GaussianShiftedMean, d, {}, mean, variance};
    }
    static FeatureFamily fourier(Index d) { return {FamilyKind::FourierComplex, d, {}, 1.0, 0.01}; }
    static FeatureFamily vandermonde(Index d) { return {FamilyKind::Vandermonde, d, {}, 1.0, 0.01}; }
    static FeatureFamily legendre(Index d) { return {FamilyKind::Legendre, d, {}, 1.0, 0.01}; }

    bool is_complex() const { return kind == FamilyKind::FourierComplex; }
    bool is_gaussian() const {
        return kind == FamilyKind::GaussianIid || kind == FamilyKind::GaussianCov ||
               kind == FamilyKind::GaussianShiftedMean;
    }
    bool is_polynomial() const { return kind == FamilyKind::Vandermonde || kind == FamilyKind::Legendre; }
};

// Covariate domains: [0,1) for Fourier, [-1,1] for polynomials, none for Gaussian rows.
enum class Domain { None, UnitInterval, Symmetric };
enum class Spacing { Regular, UniformRandom };

struct SamplingScheme {
    Spacing spacing = Spacing::UniformRandom;
    Domain domain = Domain::None;
};

Domain natural_domain(const FeatureFamily& family);
SamplingScheme natural_scheme(const FeatureFamily& family, Spacing spacing);

// Covariates x_1..x_n. Regular: (j-1)/n on [0,1), -1 + 2(j-1)/n on [-1,1].
Vector sample_covariates(const SamplingScheme& scheme, Index n, Rng& rng);

// Row j is (1, e^{2 pi i x_j}, ..., e^{2 pi i (d-1) x_j}). Requires x in [0,1).
CMatrix fourier_features(const Vector& x, Index d);
// Monomials x^0..x^{d-1}. Requires x in [-1,1].
Matrix vandermonde_features(const Vector& x, Index d);
// sqrt(2k+1) P_k(x), orthonormal for the uniform law on [-1,1]. Requires x in [-1,1].
Matrix legendre_features(const Vector& x, Index d);

// n x d Gaussian rows; entries filled column-major so the first d' columns of a
// wider draw from the same stream coincide with a narrower draw.
Matrix gaussian_iid_features(Index n, Index d, Rng& rng);

// E[a a^*] for the family: identity, the given covariance, the shifted-mean
// moment matrix v I + m^2 11^T, or the Hankel moment matrix for monomials.
Matrix second_moment(const FeatureFamily& family);
bool has_identity_moment(const FeatureFamily& family);

template <class S>
struct Design {
    Mat<S> A;
    Vector x;  // covariates; empty for Gaussian families
    FeatureFamily family;
};

using AnyDesign = std::variant<Design<double>, Design<cplx>>;

// Draws covariates (or Gaussian rows) and evaluates the family on them.
// Throws InvalidDomain if the scheme's domain does not match the family.
AnyDesign build_design(const FeatureFamily& family, const SamplingScheme& scheme, Index n, Rng& rng);
Design<double> build_real_design(const FeatureFamily& family, const SamplingScheme& scheme, Index n, Rng& rng);
Design<cplx> build_fourier_design(Index d, const SamplingScheme& scheme, Index n, Rng& rng);

// Evaluates the family's feature map on given covariates (non-Gaussian families).
Matrix evaluate_real_features(const FeatureFamily& family, const Vector& x);

// B = A Sigma^{-1/2} using the family's analytic second moment.
template <class S>
WhitenedView<S> whiten(const Mat<S>& A, const FeatureFamily& family);

template <class S>
WhitenedView<S> whiten(const Design<S>& design) { return whiten<S>(design.A, design.family); }

// {k*+n, k*+2n, ..., k*+Mn} for d = (M+1)n.
IndexSet alias_index_set(Index k_star, Index n, Index d);

std::string to_string(FamilyKind kind);
FamilyKind parse_family(const std::string& name);

}  // namespace interp
