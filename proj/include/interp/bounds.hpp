#pragma once

#include <utility>

#include "interp/core_model.hpp"

// Reference curves for the excess test MSE of interpolators. Every value is the
// excess term only; the irreducible noise variance is never included.
namespace interp::bounds {

struct BoundParams {
    Index n = 1;
    Index d = 1;
    double sigma2 = 1.0;
    double delta = 0.5;
    // Unspecified universal constants; all default to 1.
    double C_K = 1.0;
    double c_K = 1.0;
    double C = 1.0;
};

void validate(const BoundParams& p);

// A curve value together with a flag for vacuous or weak regimes.
struct BoundValue {
    double value = 0.0;
    bool flagged = false;
};

// n sigma^2 (1 - delta) / (sqrt d + 2 sqrt n)^2.
double ideal_mse_lower_gaussian(const BoundParams& p);
// n sigma^2 (1 + delta) / (sqrt d - 2 sqrt n)^2; +inf and flagged when sqrt d <= 2 sqrt n.
BoundValue ideal_mse_upper_gaussian(const BoundParams& p);

// n (1 - delta) sigma^2 / (C_K sqrt d + sqrt n)^2.
double ideal_mse_lower_subgaussian(const BoundParams& p);
// 4 C_K^2 n (1 + delta) sigma^2 / (sqrt d - sqrt(n - 1))^2; flagged when the denominator vanishes.
BoundValue ideal_mse_upper_subgaussian(const BoundParams& p);
// n (1 - delta) sigma^2 / (C sqrt(d ln n) + sqrt n)^2.
double ideal_mse_lower_heavy_tailed(const BoundParams& p);

// beta sigma^2 (1 - delta) / (4 ln(d/n)); flagged (weak regime) when d <= e n.
BoundValue parsimonious_floor(const BoundParams& p, double beta);

struct SingularBand {
    double lo = 0.0;
    double hi = 0.0;
    double failure_probability = 1.0;
};

// (sqrt d - sqrt n - t, sqrt d + sqrt n + t), failing with probability at most e^{-t^2/2}.
SingularBand singular_value_band_gaussian(Index n, Index d, double t);

// n (1 - sqrt((d-n) / (n (d-1)))); d == n returns n, flagged.
BoundValue equiangular_frame_bound(Index n, Index d);

}  // namespace interp::bounds
