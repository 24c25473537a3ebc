#include "interp/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace interp::bounds {

namespace {
double dbl(Index x) { return static_cast<double>(x); }
}  // namespace

void validate(const BoundParams& p) {
    if (p.n < 1 || p.d < 1) throw InvalidArgument("bounds need n, d >= 1");
    if (!(p.delta > 0.0 && p.delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
    if (p.sigma2 < 0.0) throw InvalidArgument("sigma2 must be nonnegative");
}

double ideal_mse_lower_gaussian(const BoundParams& p) {
    validate(p);
    const double den = std::sqrt(dbl(p.d)) + 2.0 * std::sqrt(dbl(p.n));
    return dbl(p.n) * p.sigma2 * (1.0 - p.delta) / (den * den);
}

BoundValue ideal_mse_upper_gaussian(const BoundParams& p) {
    validate(p);
    const double gap = std::sqrt(dbl(p.d)) - 2.0 * std::sqrt(dbl(p.n));
    if (gap <= 0.0) return {std::numeric_limits<double>::infinity(), true};
    return {dbl(p.n) * p.sigma2 * (1.0 + p.delta) / (gap * gap), false};
}

double ideal_mse_lower_subgaussian(const BoundParams& p) {
    validate(p);
    const double den = p.C_K * std::sqrt(dbl(p.d)) + std::sqrt(dbl(p.n));
    return dbl(p.n) * (1.0 - p.delta) * p.sigma2 / (den * den);
}

BoundValue ideal_mse_upper_subgaussian(const BoundParams& p) {
    validate(p);
    const double gap = std::sqrt(dbl(p.d)) - std::sqrt(dbl(p.n - 1));
    if (gap <= 0.0) return {std::numeric_limits<double>::infinity(), true};
    return {4.0 * p.C_K * p.C_K * dbl(p.n) * (1.0 + p.delta) * p.sigma2 / (gap * gap), false};
}

double ideal_mse_lower_heavy_tailed(const BoundParams& p) {
    validate(p);
    const double den = p.C * std::sqrt(dbl(p.d) * std::log(dbl(p.n))) + std::sqrt(dbl(p.n));
    return dbl(p.n) * (1.0 - p.delta) * p.sigma2 / (den * den);
}

BoundValue parsimonious_floor(const BoundParams& p, double beta) {
    validate(p);
    if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("beta must lie in (0, 1]");
    if (p.d <= p.n) return {0.0, true};  // the floor is uninformative without overparameterization
    const double value = beta * p.sigma2 * (1.0 - p.delta) / (4.0 * std::log(dbl(p.d) / dbl(p.n)));
    return {value, dbl(p.d) <= std::numbers::e * dbl(p.n)};
}

SingularBand singular_value_band_gaussian(Index n, Index d, double t) {
    if (t < 0.0) throw InvalidArgument("band width t must be nonnegative");
    const double rn = std::sqrt(dbl(n)), rd = std::sqrt(dbl(d));
    return {rd - rn - t, rd + rn + t, std::exp(-t * t / 2.0)};
}

BoundValue equiangular_frame_bound(Index n, Index d) {
    if (n < 2 || d < n) throw InvalidArgument("frame bound needs d >= n >= 2");
    if (d == n) return {dbl(n), true};
    const double coherence = std::sqrt(dbl(d - n) / (dbl(n) * dbl(d - 1)));
    return {dbl(n) * (1.0 - coherence), false};
}

}  // namespace interp::bounds
