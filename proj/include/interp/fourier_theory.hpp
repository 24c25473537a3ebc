#pragma once

#include "interp/core_model.hpp"

// Closed forms for the weighted minimum-norm interpolator on regularly spaced
// Fourier features with d = (M+1) n. Frequencies k* and k* + l n coincide on the
// samples, so the fit of f_{k*} spreads over that cohort in proportion to w^2.
namespace interp::fourier {

struct AliasCohort {
    Index k_star = 0;
    IndexSet indices;           // {k*} followed by its aliases
    Vector weights_restricted;  // w on indices
    double V = 0.0;             // sum of squared weights on the cohort
};

AliasCohort alias_cohort(Index k_star, Index n, Index d, const Vector& w);

// alpha_j = w_j^2 / V on the cohort of k*, zero elsewhere.
Vector closed_form_weighted_solution(Index k_star, Index n, Index d, const Vector& w);

// w_{k*}^2 / V.
double survival(Index k_star, Index n, Index d, const Vector& w);
// 1 / (1 + sum_{l>=1} w_{k*+ln}^2 / w_{k*}^2); equal to survival() in exact arithmetic.
double survival_one_pole(Index k_star, Index n, Index d, const Vector& w);
// sqrt(sum over aliases of w^2) / V.
double contamination(Index k_star, Index n, Index d, const Vector& w);

struct FilterProfile {
    Vector survival;       // indexed by k* in [0, n)
    Vector contamination;
};

FilterProfile filter_profile(Index n, Index d, const Vector& w);

// Weights sqrt(gamma d / s) on the first s frequencies and sqrt((1-gamma) d / (d-s)) elsewhere.
Vector spiked_weights(Index d, Index s, double gamma);

// 1 / (1 + (s/n)(1/gamma - 1)), the large-d approximation for k* < s.
double spiked_survival_approx(Index n, Index s, double gamma);

struct EmpiricalFilter {
    double survival = 0.0;
    double contamination = 0.0;
};

// |alpha_{k*} / alpha*_{k*}| and the root energy on every other coefficient.
EmpiricalFilter empirical_survival_contamination(const CVector& alpha_hat, Index k_star, double true_coef = 1.0);

// Prediction function of the weighted minimum-norm fit of the impulse Y = e_1 on
// the regular grid, evaluated at the given points.
CVector interpolation_kernel(const Vector& w, Index n, Index d, const Vector& grid);

// sum_k alpha_k e^{2 pi i k x}.
CVector evaluate_fourier_series(const CVector& alpha, const Vector& x);

}  // namespace interp::fourier
