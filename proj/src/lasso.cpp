#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "interp/sparse.hpp"

namespace interp {

namespace {

double soft_threshold(double z, double t) {
    if (z > t) return z - t;
    if (z < -t) return z + t;
    return 0.0;
}

double sign(double x) { return (x > 0.0) - (x < 0.0); }

// max over j of the subgradient-condition violation for gradient g and weight t.
double kkt_violation(const Vector& g, const Vector& alpha, double t) {
    double worst = 0.0;
    for (Index j = 0; j < alpha.size(); ++j) {
        const double v = alpha(j) != 0.0 ? std::abs(g(j) - t * sign(alpha(j))) : std::max(0.0, std::abs(g(j)) - t);
        worst = std::max(worst, v);
    }
    return worst;
}

}  // namespace

double lasso_kkt_residual(const Matrix& A, const Vector& Y, const Vector& alpha, double lambda) {
    const double n = static_cast<double>(A.rows());
    const Vector g = A.transpose() * (Y - A * alpha) / n;
    return kkt_violation(g, alpha, lambda);
}

double lasso_objective(const Matrix& A, const Vector& Y, const Vector& alpha, double lambda) {
    const double n = static_cast<double>(A.rows());
    return (Y - A * alpha).squaredNorm() / (2.0 * n) + lambda * alpha.lpNorm<1>();
}

LassoResult lasso_cd(const TrainingSet<double>& ts, const LassoConfig& cfg, const std::optional<Vector>& warm_start) {
    const Matrix& A = ts.A;
    const Vector& Y = ts.Y;
    const Index n = A.rows(), d = A.cols();
    if (!(cfg.lambda > 0.0)) throw InvalidArgument("lasso needs lambda > 0");
    if (Y.size() != n) throw DimensionMismatch("output length differs from row count");
    const double nd = static_cast<double>(n);
    const double lambda = cfg.lambda;
    const Vector col_sq = A.colwise().squaredNorm().transpose() / nd;

    Vector alpha = warm_start ? *warm_start : Vector::Zero(d);
    if (alpha.size() != d) throw DimensionMismatch("warm start length differs from d");
    Vector r = Y - A * alpha;

    IndexSet order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Index{0});
    Rng order_rng(cfg.order_seed);

    auto sweep = [&](const IndexSet& idx) {
        double max_step = 0.0;
        for (Index j : idx) {
            const double cj = col_sq(j);
            if (cj == 0.0) continue;
            const double old = alpha(j);
            const double z = A.col(j).dot(r) / nd + cj * old;
            const double fresh = soft_threshold(z, lambda) / cj;
            if (fresh != old) {
                r.noalias() -= (fresh - old) * A.col(j);
                alpha(j) = fresh;
                max_step = std::max(max_step, std::abs(fresh - old) * std::sqrt(cj));
            }
        }
        return max_step;
    };

    LassoResult best;
    best.alpha = alpha;
    best.kkt_residual = std::numeric_limits<double>::infinity();
    Index sweeps = 0;
    const double inner_tol = 0.1 * cfg.kkt_tol;
    while (sweeps < cfg.max_iter) {
        if (cfg.randomized_order)
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[static_cast<std::size_t>(order_rng.below(i))]);
        sweep(order);
        ++sweeps;
        // Iterate on the active set until it settles, then re-check every coordinate.
        IndexSet active;
        for (Index j = 0; j < d; ++j)
            if (alpha(j) != 0.0) active.push_back(j);
        while (sweeps < cfg.max_iter) {
            const double step = sweep(active);
            ++sweeps;
            if (step <= inner_tol) break;
        }
        r = Y - A * alpha;
        const double kkt = kkt_violation(A.transpose() * r / nd, alpha, lambda);
        if (kkt < best.kkt_residual) {
            best.kkt_residual = kkt;
            best.alpha = alpha;
        }
        if (kkt <= cfg.kkt_tol) {
            best.converged = true;
            break;
        }
    }
    best.iterations = sweeps;
    return best;
}

double sqrt_lasso_kkt_residual(const Matrix& A, const Vector& Y, const Vector& alpha, double gamma) {
    const Vector r = Y - A * alpha;
    const double rn = r.norm();
    if (rn == 0.0) return std::numeric_limits<double>::infinity();
    const Vector g = A.transpose() * r / (std::sqrt(static_cast<double>(A.rows())) * rn);
    return kkt_violation(g, alpha, gamma);
}

double sqrt_lasso_objective(const Matrix& A, const Vector& Y, const Vector& alpha, double gamma) {
    return (Y - A * alpha).norm() / std::sqrt(static_cast<double>(A.rows())) + gamma * alpha.lpNorm<1>();
}

SqrtLassoResult sqrt_lasso(const TrainingSet<double>& ts, const LassoConfig& cfg) {
    const Matrix& A = ts.A;
    const Vector& Y = ts.Y;
    const Index n = A.rows(), d = A.cols();
    if (!(cfg.gamma > 0.0)) throw InvalidArgument("square-root lasso needs gamma > 0");
    const double root_n = std::sqrt(static_cast<double>(n));
    const double y_norm = Y.norm();

    SqrtLassoResult out;
    out.alpha = Vector::Zero(d);
    out.sigma_hat = y_norm / root_n;
    if (y_norm == 0.0) {
        out.converged = true;
        return out;
    }
    // Zero is optimal once gamma dominates the normalized correlations.
    if (cfg.gamma >= (A.transpose() * Y).cwiseAbs().maxCoeff() / (root_n * y_norm)) {
        out.converged = true;
        out.kkt_residual = sqrt_lasso_kkt_residual(A, Y, out.alpha, cfg.gamma);
        return out;
    }

    double sigma = out.sigma_hat;
    LassoConfig inner = cfg;
    const Index max_outer = 10000;
    for (Index outer = 1; outer <= max_outer; ++outer) {
        inner.lambda = cfg.gamma * sigma;
        // The joint optimality residual is the Lasso residual divided by sigma.
        inner.kkt_tol = 0.05 * cfg.kkt_tol * sigma;
        const LassoResult step = lasso_cd(ts, inner, out.alpha);
        out.alpha = step.alpha;
        out.outer_iterations = outer;
        const double fresh = (Y - A * out.alpha).norm() / root_n;
        if (fresh <= 1e-10 * y_norm / root_n) {
            out.alpha = basis_pursuit(ts).fit.alpha_hat;
            out.fell_back_to_bp = true;
            out.sigma_hat = 0.0;
            out.converged = true;
            out.kkt_residual = std::numeric_limits<double>::infinity();
            return out;
        }
        const double change = std::abs(fresh - sigma) / sigma;
        sigma = fresh;
        out.sigma_hat = sigma;
        if (change <= cfg.sigma_tol) {
            out.kkt_residual = sqrt_lasso_kkt_residual(A, Y, out.alpha, cfg.gamma);
            if (out.kkt_residual <= cfg.kkt_tol && step.converged) {
                out.converged = true;
                break;
            }
        }
    }
    if (!out.converged) out.kkt_residual = sqrt_lasso_kkt_residual(A, Y, out.alpha, cfg.gamma);
    return out;
}

double default_lasso_lambda(double sigma, Index n, Index d) {
    return 2.0 * sigma * std::sqrt(2.0 * std::log(static_cast<double>(d)) / static_cast<double>(n));
}

double default_sqrt_lasso_gamma(Index n, Index d) {
    return 2.0 * std::sqrt(2.0 * std::log(static_cast<double>(d)) / static_cast<double>(n));
}

InterpolatorResult<double> hybrid_interpolate(const TrainingSet<double>& ts, const FirstStage& first_stage,
                                              const Vector* alpha_star) {
    const Vector alpha1 = first_stage(ts);
    if (alpha1.size() != ts.d()) throw DimensionMismatch("first stage returned a vector of the wrong length");
    const Vector residual = ts.Y - ts.A * alpha1;
    const Vector delta = min_norm_solve(ts.A, residual);
    InterpolatorResult<double> out = make_result<double>(ts.A, ts.Y, alpha1 + delta, delta.squaredNorm());
    out.diagnostics["delta_norm2"] = delta.squaredNorm();
    out.diagnostics["first_stage_residual_norm2"] = residual.squaredNorm();
    if (alpha_star) {
        const Vector err = alpha1 - *alpha_star;
        out.diagnostics["first_stage_est_error"] = err.squaredNorm();
        out.diagnostics["first_stage_pred_error"] = (ts.A * err).squaredNorm() / static_cast<double>(ts.n());
    }
    return out;
}

double pairwise_incoherence(const Matrix& A) {
    const Vector norms = A.colwise().norm().transpose();
    for (Index j = 0; j < norms.size(); ++j)
        if (norms(j) == 0.0) throw ZeroColumn("column " + std::to_string(j) + " is zero");
    const Matrix unit = A * norms.cwiseInverse().asDiagonal();
    Matrix gram = unit.transpose() * unit;
    gram.diagonal().setZero();
    return gram.size() ? gram.cwiseAbs().maxCoeff() : 0.0;
}

double restricted_eigenvalue_estimate(const Matrix& A, const IndexSet& support, Rng& rng, Index samples) {
    const Index d = A.cols();
    std::vector<char> in_support(static_cast<std::size_t>(d), 0);
    for (Index j : support) in_support[static_cast<std::size_t>(j)] = 1;
    const double nd = static_cast<double>(A.rows());
    double best = std::numeric_limits<double>::infinity();
    for (Index s = 0; s < samples; ++s) {
        Vector v = Vector::Zero(d), off = Vector::Zero(d);
        for (Index j = 0; j < d; ++j) (in_support[static_cast<std::size_t>(j)] ? v(j) : off(j)) = rng.normal();
        const double on_l1 = v.lpNorm<1>();
        const double off_l1 = off.lpNorm<1>();
        // Scale the off-support part so that its l1 mass is a random fraction of the cone limit.
        if (off_l1 > 0.0) v += off * (3.0 * on_l1 * rng.uniform() / off_l1);
        const double vn = v.squaredNorm();
        if (vn > 0.0) best = std::min(best, (A * v).squaredNorm() / (nd * vn));
    }
    return best;
}

}  // namespace interp
