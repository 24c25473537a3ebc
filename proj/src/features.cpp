#include "interp/features.hpp"

#include <cmath>
#include <numbers>

namespace interp {

FeatureFamily FeatureFamily::gaussian_cov(Matrix sigma) {
    if (sigma.rows() != sigma.cols() || sigma.rows() < 1) throw DimensionMismatch("covariance must be square");
    FeatureFamily f;
    f.kind = FamilyKind::GaussianCov;
    f.d = sigma.rows();
    f.covariance = std::move(sigma);
    return f;
}

Domain natural_domain(const FeatureFamily& family) {
    if (family.is_gaussian()) return Domain::None;
    return family.is_complex() ? Domain::UnitInterval : Domain::Symmetric;
}

SamplingScheme natural_scheme(const FeatureFamily& family, Spacing spacing) {
    return {spacing, natural_domain(family)};
}

Vector sample_covariates(const SamplingScheme& scheme, Index n, Rng& rng) {
    Vector x(n);
    const double nd = static_cast<double>(n);
    switch (scheme.domain) {
    case Domain::None:
        throw InvalidDomain("Gaussian families have no scalar covariate");
    case Domain::UnitInterval:
        for (Index j = 0; j < n; ++j)
            x(j) = scheme.spacing == Spacing::Regular ? static_cast<double>(j) / nd : rng.uniform();
        break;
    case Domain::Symmetric:
        for (Index j = 0; j < n; ++j)
            x(j) = scheme.spacing == Spacing::Regular ? -1.0 + 2.0 * static_cast<double>(j) / nd
                                                       : rng.uniform(-1.0, 1.0);
        break;
    }
    return x;
}

namespace {
void require_range(const Vector& x, double lo, double hi, bool open_hi) {
    for (Index j = 0; j < x.size(); ++j) {
        const bool ok = x(j) >= lo && (open_hi ? x(j) < hi : x(j) <= hi);
        if (!ok) throw InvalidDomain("covariate " + std::to_string(x(j)) + " outside the family domain");
    }
}
}  // namespace

CMatrix fourier_features(const Vector& x, Index d) {
    require_range(x, 0.0, 1.0, true);
    CMatrix A(x.size(), d);
    for (Index k = 0; k < d; ++k) {
        for (Index j = 0; j < x.size(); ++j) {
            // Reduce the phase to [0,1) before scaling so large k keeps full precision.
            double phase = static_cast<double>(k) * x(j);
            phase -= std::floor(phase);
            A(j, k) = std::polar(1.0, 2.0 * std::numbers::pi * phase);
        }
    }
    return A;
}

Matrix vandermonde_features(const Vector& x, Index d) {
    require_range(x, -1.0, 1.0, false);
    Matrix A(x.size(), d);
    if (d == 0) return A;
    A.col(0).setOnes();
    for (Index k = 1; k < d; ++k) A.col(k) = A.col(k - 1).cwiseProduct(x);
    return A;
}

Matrix legendre_features(const Vector& x, Index d) {
    require_range(x, -1.0, 1.0, false);
    Matrix P(x.size(), d);
    if (d == 0) return P;
    // Bonnet: (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
    P.col(0).setOnes();
    if (d > 1) P.col(1) = x;
    for (Index k = 1; k + 1 < d; ++k) {
        const double kd = static_cast<double>(k);
        P.col(k + 1) = ((2.0 * kd + 1.0) * x.cwiseProduct(P.col(k)) - kd * P.col(k - 1)) / (kd + 1.0);
    }
    for (Index k = 0; k < d; ++k) P.col(k) *= std::sqrt(2.0 * static_cast<double>(k) + 1.0);
    return P;
}

Matrix gaussian_iid_features(Index n, Index d, Rng& rng) {
    Matrix A(n, d);
    for (Index k = 0; k < d; ++k)
        for (Index j = 0; j < n; ++j) A(j, k) = rng.normal();
    return A;
}

bool has_identity_moment(const FeatureFamily& family) {
    return family.kind == FamilyKind::GaussianIid || family.kind == FamilyKind::FourierComplex ||
           family.kind == FamilyKind::Legendre;
}

Matrix second_moment(const FeatureFamily& family) {
    const Index d = family.d;
    switch (family.kind) {
    case FamilyKind::GaussianCov:
        return family.covariance;
    case FamilyKind::GaussianShiftedMean:
        return family.entry_variance * Matrix::Identity(d, d) +
               family.entry_mean * family.entry_mean * Matrix::Ones(d, d);
    case FamilyKind::Vandermonde: {
        // E[X^m] = 1/(m+1) for even m, 0 for odd m, X ~ Unif[-1,1].
        Matrix s(d, d);
        for (Index a = 0; a < d; ++a)
            for (Index b = 0; b < d; ++b) {
                const Index m = a + b;
                s(a, b) = m % 2 == 0 ? 1.0 / static_cast<double>(m + 1) : 0.0;
            }
        return s;
    }
    default:
        return Matrix::Identity(d, d);
    }
}

Matrix evaluate_real_features(const FeatureFamily& family, const Vector& x) {
    switch (family.kind) {
    case FamilyKind::Vandermonde:
        return vandermonde_features(x, family.d);
    case FamilyKind::Legendre:
        return legendre_features(x, family.d);
    default:
        throw InvalidDomain("family " + to_string(family.kind) + " has no real scalar feature map");
    }
}

AnyDesign build_design(const FeatureFamily& family, const SamplingScheme& scheme, Index n, Rng& rng) {
    if (n < 1 || family.d < 1) throw InvalidArgument("n and d must be positive");
    if (scheme.domain != natural_domain(family))
        throw InvalidDomain("sampling domain does not match family " + to_string(family.kind));
    if (family.is_complex()) {
        Design<cplx> des;
        des.family = family;
        des.x = sample_covariates(scheme, n, rng);
        des.A = fourier_features(des.x, family.d);
        return des;
    }
    Design<double> des;
    des.family = family;
    switch (family.kind) {
    case FamilyKind::GaussianIid:
        des.A = gaussian_iid_features(n, family.d, rng);
        break;
    case FamilyKind::GaussianCov:
        des.A = gaussian_iid_features(n, family.d, rng) * symmetric_sqrt(family.covariance);
        break;
    case FamilyKind::GaussianShiftedMean:
        des.A = (gaussian_iid_features(n, family.d, rng) * std::sqrt(family.entry_variance)).array() +
                family.entry_mean;
        break;
    default:
        des.x = sample_covariates(scheme, n, rng);
        des.A = evaluate_real_features(family, des.x);
        break;
    }
    return des;
}

Design<double> build_real_design(const FeatureFamily& family, const SamplingScheme& scheme, Index n, Rng& rng) {
    if (family.is_complex()) throw InvalidArgument("Fourier features are complex-valued");
    return std::get<Design<double>>(build_design(family, scheme, n, rng));
}

Design<cplx> build_fourier_design(Index d, const SamplingScheme& scheme, Index n, Rng& rng) {
    return std::get<Design<cplx>>(build_design(FeatureFamily::fourier(d), scheme, n, rng));
}

template <class S>
WhitenedView<S> whiten(const Mat<S>& A, const FeatureFamily& family) {
    if (A.cols() != family.d) throw DimensionMismatch("design width differs from family dimension");
    WhitenedView<S> view;
    if (has_identity_moment(family)) {
        view.B = A;
        return view;
    }
    view.sigma_sqrt_inv = symmetric_inverse_sqrt(second_moment(family));
    view.B = A * view.sigma_sqrt_inv->template cast<S>();
    return view;
}

template WhitenedView<double> whiten<double>(const Matrix&, const FeatureFamily&);
template WhitenedView<cplx> whiten<cplx>(const CMatrix&, const FeatureFamily&);

IndexSet alias_index_set(Index k_star, Index n, Index d) {
    if (n < 1 || d < 1) throw InvalidArgument("n and d must be positive");
    if (d % n != 0) throw NotMultiple("d = " + std::to_string(d) + " is not a multiple of n = " + std::to_string(n));
    if (k_star < 0 || k_star >= n) throw InvalidArgument("k* must lie in [0, n)");
    IndexSet out;
    for (Index j = k_star + n; j < d; j += n) out.push_back(j);
    return out;
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::GaussianIid: return "gaussian";
    case FamilyKind::GaussianCov: return "gaussian_cov";
    case FamilyKind::GaussianShiftedMean: return "gaussian_shifted";
    case FamilyKind::FourierComplex: return "fourier";
    case FamilyKind::Vandermonde: return "vandermonde";
    case FamilyKind::Legendre: return "legendre";
    }
    return "unknown";
}

FamilyKind parse_family(const std::string& name) {
    for (auto k : {FamilyKind::GaussianIid, FamilyKind::GaussianCov, FamilyKind::GaussianShiftedMean,
                   FamilyKind::FourierComplex, FamilyKind::Vandermonde, FamilyKind::Legendre})
        if (to_string(k) == name) return k;
    throw ConfigError("unknown feature family '" + name + "'");
}

}  // namespace interp
