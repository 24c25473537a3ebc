#include "interp/fourier_theory.hpp"

#include <cmath>
#include <numbers>

#include "interp/features.hpp"
#include "interp/interpolators.hpp"

namespace interp::fourier {

AliasCohort alias_cohort(Index k_star, Index n, Index d, const Vector& w) {
    if (w.size() != d) throw DimensionMismatch("weight vector length differs from d");
    validate_weights(w);
    AliasCohort c;
    c.k_star = k_star;
    c.indices.push_back(k_star);
    for (Index j : alias_index_set(k_star, n, d)) c.indices.push_back(j);
    c.weights_restricted.resize(static_cast<Index>(c.indices.size()));
    for (std::size_t i = 0; i < c.indices.size(); ++i) c.weights_restricted(static_cast<Index>(i)) = w(c.indices[i]);
    c.V = c.weights_restricted.squaredNorm();
    return c;
}

Vector closed_form_weighted_solution(Index k_star, Index n, Index d, const Vector& w) {
    const AliasCohort c = alias_cohort(k_star, n, d, w);
    Vector alpha = Vector::Zero(d);
    for (std::size_t i = 0; i < c.indices.size(); ++i)
        alpha(c.indices[i]) = c.weights_restricted(static_cast<Index>(i)) * c.weights_restricted(static_cast<Index>(i)) / c.V;
    return alpha;
}

double survival(Index k_star, Index n, Index d, const Vector& w) {
    const AliasCohort c = alias_cohort(k_star, n, d, w);
    return w(k_star) * w(k_star) / c.V;
}

double survival_one_pole(Index k_star, Index n, Index d, const Vector& w) {
    const AliasCohort c = alias_cohort(k_star, n, d, w);
    const double base = w(k_star) * w(k_star);
    double ratio = 0.0;
    for (std::size_t i = 1; i < c.indices.size(); ++i) ratio += w(c.indices[i]) * w(c.indices[i]) / base;
    return 1.0 / (1.0 + ratio);
}

double contamination(Index k_star, Index n, Index d, const Vector& w) {
    const AliasCohort c = alias_cohort(k_star, n, d, w);
    double direct = 0.0;
    for (std::size_t i = 1; i < c.indices.size(); ++i) direct += w(c.indices[i]) * w(c.indices[i]);
    return std::sqrt(direct) / c.V;
}

FilterProfile filter_profile(Index n, Index d, const Vector& w) {
    FilterProfile p;
    p.survival.resize(n);
    p.contamination.resize(n);
    for (Index k = 0; k < n; ++k) {
        p.survival(k) = survival(k, n, d, w);
        p.contamination(k) = contamination(k, n, d, w);
    }
    return p;
}

Vector spiked_weights(Index d, Index s, double gamma) {
    if (s < 1 || s >= d) throw InvalidArgument("spiked weights need 1 <= s < d");
    if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidArgument("spiked weights need 0 < gamma < 1");
    const double dd = static_cast<double>(d), sd = static_cast<double>(s);
    Vector w(d);
    w.head(s).setConstant(std::sqrt(gamma * dd / sd));
    w.tail(d - s).setConstant(std::sqrt((1.0 - gamma) * dd / (dd - sd)));
    return w;
}

double spiked_survival_approx(Index n, Index s, double gamma) {
    return 1.0 / (1.0 + static_cast<double>(s) / static_cast<double>(n) * (1.0 / gamma - 1.0));
}

EmpiricalFilter empirical_survival_contamination(const CVector& alpha_hat, Index k_star, double true_coef) {
    if (k_star < 0 || k_star >= alpha_hat.size()) throw InvalidArgument("k* outside the coefficient range");
    EmpiricalFilter f;
    f.survival = std::abs(alpha_hat(k_star) / true_coef);
    f.contamination = std::sqrt(alpha_hat.squaredNorm() - std::norm(alpha_hat(k_star)));
    return f;
}

CVector evaluate_fourier_series(const CVector& alpha, const Vector& x) {
    CVector out = CVector::Zero(x.size());
    for (Index i = 0; i < x.size(); ++i) {
        cplx acc = 0.0;
        for (Index k = 0; k < alpha.size(); ++k) {
            double phase = static_cast<double>(k) * x(i);
            phase -= std::floor(phase);
            acc += alpha(k) * std::polar(1.0, 2.0 * std::numbers::pi * phase);
        }
        out(i) = acc;
    }
    return out;
}

CVector interpolation_kernel(const Vector& w, Index n, Index d, const Vector& grid) {
    if (d % n != 0) throw NotMultiple("kernel needs n | d");
    Rng unused(0);
    const Design<cplx> des = build_fourier_design(d, {Spacing::Regular, Domain::UnitInterval}, n, unused);
    TrainingSet<cplx> ts;
    ts.A = des.A;
    ts.Y = CVector::Zero(n);
    ts.Y(0) = 1.0;
    ts.W = Vector::Zero(n);
    const CVector alpha = weighted_min_l2_interpolate(ts, w).alpha_hat;
    Vector wrapped = grid;
    for (Index i = 0; i < wrapped.size(); ++i) wrapped(i) -= std::floor(wrapped(i));
    return evaluate_fourier_series(alpha, wrapped);
}

}  // namespace interp::fourier
