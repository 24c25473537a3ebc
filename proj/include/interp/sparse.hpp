#pragma once

#include <functional>
#include <optional>

#include "interp/interpolators.hpp"

namespace interp {

// ---------------------------------------------------------------- OMP

struct OmpConfig {
    enum class Stopping { ToCompletion, ResidualThreshold, FixedSteps };
    Stopping stopping = Stopping::ToCompletion;
    double sigma = 0.0;  // ResidualThreshold: stop once ||A^T r||_inf <= sigma sqrt(2 (1+eta) ln d)
    double eta = 0.5;
    Index steps = 1;     // FixedSteps: k0 >= 1

    static OmpConfig to_completion() { return {}; }
    static OmpConfig residual_threshold(double sigma, double eta) {
        return {Stopping::ResidualThreshold, sigma, eta, 1};
    }
    static OmpConfig fixed_steps(Index k0) { return {Stopping::FixedSteps, 0.0, 0.5, k0}; }
};

// Greedy selection argmax_j |<a_j, r>| (lowest index on ties), residual kept
// orthogonal to the selected span, coefficients by least squares on that span.
struct OmpResult {
    InterpolatorResult<double> fit;
    IndexSet selection_order;
};

OmpResult omp(const TrainingSet<double>& ts, const OmpConfig& cfg = {});

// ---------------------------------------------------------------- basis pursuit

struct LpSolution {
    Vector u, v;     // alpha = u - v, both nonnegative
    IndexSet basis;  // basic variables; j < d is u_j, j >= d is v_{j-d}
    double objective = 0.0;
    Index iterations = 0;
};

enum class PricingRule {
    Bland,              // lowest-index entering variable throughout
    DantzigWithBland    // most negative reduced cost; Bland after a run of degenerate pivots
};

// Starting basis: the first n columns when well conditioned, or the columns an
// n-step greedy pursuit selects. Either falls back to pivoted QR.
enum class CrashRule { LeadingColumns, Greedy };

struct SimplexOptions {
    PricingRule pricing = PricingRule::DantzigWithBland;
    CrashRule crash = CrashRule::Greedy;
    Index price_blocks = 32; // Dantzig pricing scans column blocks in turn; 1 prices everything
    double optimality_tol = 1e-10;
    double pivot_tol = 1e-11;
    Index refactor_every = 256;
    Index degenerate_run_limit = 30;
    Index max_iterations = 0;  // 0: 50 (n + 2d)
};

struct BasisPursuitResult {
    InterpolatorResult<double> fit;
    LpSolution lp;
};

// min ||alpha||_1 s.t. A alpha = Y via the split program
// min 1^T u + 1^T v s.t. [A, -A][u; v] = Y, u, v >= 0, solved by a revised simplex.
BasisPursuitResult basis_pursuit(const TrainingSet<double>& ts, const SimplexOptions& opts = {});

// ---------------------------------------------------------------- Lasso

struct LassoConfig {
    double lambda = 0.0;  // Lagrangian weight on ||alpha||_1 with (1/2n) loss scaling
    double gamma = 0.0;   // square-root Lasso weight
    Index max_iter = 100000;
    double kkt_tol = 1e-8;
    double sigma_tol = 1e-8;  // relative change of the noise estimate, square-root Lasso
    bool randomized_order = false;
    std::uint64_t order_seed = 0;
};

struct LassoResult {
    Vector alpha;
    bool converged = false;
    Index iterations = 0;
    double kkt_residual = 0.0;
};

// (1/2n) ||Y - A alpha||^2 + lambda ||alpha||_1 by cyclic coordinate descent.
// Returns the best iterate with converged = false if max_iter is reached.
LassoResult lasso_cd(const TrainingSet<double>& ts, const LassoConfig& cfg,
                     const std::optional<Vector>& warm_start = std::nullopt);

// max_j of the Lasso optimality violation at alpha.
double lasso_kkt_residual(const Matrix& A, const Vector& Y, const Vector& alpha, double lambda);

double lasso_objective(const Matrix& A, const Vector& Y, const Vector& alpha, double lambda);

struct SqrtLassoResult {
    Vector alpha;
    bool converged = false;
    bool fell_back_to_bp = false;  // residual vanished; the problem degenerates to basis pursuit
    Index outer_iterations = 0;
    double sigma_hat = 0.0;
    double kkt_residual = 0.0;
};

// ||Y - A alpha|| / sqrt(n) + gamma ||alpha||_1 by alternating the noise estimate
// sigma = ||Y - A alpha|| / sqrt(n) with a Lasso solve at lambda = gamma * sigma.
SqrtLassoResult sqrt_lasso(const TrainingSet<double>& ts, const LassoConfig& cfg);

double sqrt_lasso_kkt_residual(const Matrix& A, const Vector& Y, const Vector& alpha, double gamma);
double sqrt_lasso_objective(const Matrix& A, const Vector& Y, const Vector& alpha, double gamma);

// Default tuning: lambda = 2 sigma sqrt(2 ln d / n), gamma = 2 sqrt(2 ln d / n).
double default_lasso_lambda(double sigma, Index n, Index d);
double default_sqrt_lasso_gamma(Index n, Index d);

// ---------------------------------------------------------------- hybrid

using FirstStage = std::function<Vector(const TrainingSet<double>&)>;

// alpha_1 from the first stage, then the minimum-norm interpolator of the residual
// Y - A alpha_1 added on top. When alpha_star is given, its estimation error is recorded.
InterpolatorResult<double> hybrid_interpolate(const TrainingSet<double>& ts, const FirstStage& first_stage,
                                              const Vector* alpha_star = nullptr);

// ---------------------------------------------------------------- diagnostics

// max_{j != j'} |<a_j, a_j'>| / (||a_j|| ||a_j'||). Throws ZeroColumn.
double pairwise_incoherence(const Matrix& A);

// Monte Carlo estimate of the restricted eigenvalue on the cone
// { v : ||v_{S^c}||_1 <= 3 ||v_S||_1 }: the minimum of ||A v||^2 / (n ||v||^2) over samples.
double restricted_eigenvalue_estimate(const Matrix& A, const IndexSet& support, Rng& rng, Index samples = 2000);

}  // namespace interp
