#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "interp/errors.hpp"
#include "interp/features.hpp"
#include "interp/interpolators.hpp"
#include "interp/metrics.hpp"
#include "interp/sparse.hpp"
#include "oracles.hpp"

using namespace interp;

namespace {
TrainingSet<double> plain(Matrix A, Vector Y) {
    TrainingSet<double> ts;
    ts.A = std::move(A);
    ts.Y = std::move(Y);
    ts.W = Vector::Zero(ts.Y.size());
    return ts;
}
}  // namespace

TEST_CASE("OMP on an orthogonal design selects by magnitude") {
    const Vector Y = (Vector(3) << 0.1, -3, 2).finished();
    const auto r = omp(plain(Matrix::Identity(3, 3), Y));
    CHECK(r.selection_order == IndexSet{1, 2, 0});
    CHECK((r.fit.alpha_hat - Y).norm() < 1e-14);
}

TEST_CASE("OMP recovers a one-sparse noiseless signal in one step") {
    Rng rng(3);
    const Matrix A = gaussian_iid_features(20, 40, rng);
    const Vector Y = 5.0 * A.col(0);
    const auto r = omp(plain(A, Y), OmpConfig::fixed_steps(1));
    CHECK(r.selection_order.front() == 0);
    CHECK(r.fit.residual_norm < 1e-10 * Y.norm());
}

TEST_CASE("OMP to completion on pure noise matches a direct solve") {
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        const auto ts = plain(gaussian_iid_features(8, 32, rng), sample_noise(rng, 8, 1.0));
        const auto r = omp(ts);
        CHECK(r.selection_order.size() == 8u);
        IndexSet s = r.selection_order;
        Matrix sub(8, 8);
        for (Index i = 0; i < 8; ++i) sub.col(i) = ts.A.col(s[static_cast<std::size_t>(i)]);
        const Vector direct = sub.fullPivLu().solve(ts.Y);
        for (Index i = 0; i < 8; ++i)
            CHECK(std::abs(r.fit.alpha_hat(s[static_cast<std::size_t>(i)]) - direct(i)) < 1e-8);
        CHECK(r.fit.support.size() == 8u);
        CHECK(r.fit.residual_norm <= 1e-8 * ts.Y.norm());
    }
}

TEST_CASE("OMP residual threshold stops on the correlation test") {
    Rng rng(5);
    const Index n = 100, d = 400;
    const auto inst = make_unit_instance(d, {0, 1, 2}, 0.01);
    const auto ts = make_training_set<double>(gaussian_iid_features(n, d, rng), inst, rng);
    const auto r = omp(ts, OmpConfig::residual_threshold(0.1, 0.5));
    const Vector res = ts.Y - ts.A * r.fit.alpha_hat;
    CHECK((ts.A.transpose() * res).cwiseAbs().maxCoeff() <= 0.1 * std::sqrt(2.0 * 1.5 * std::log(400.0)));
    CHECK(r.selection_order.size() < static_cast<std::size_t>(n));
    CHECK_THROWS(omp(plain(Matrix::Zero(2, 3), Vector::Ones(2))));
}

TEST_CASE("basis pursuit small cases") {
    const Vector Y = (Vector(3) << 1, -2, 0.5).finished();
    const auto r = basis_pursuit(plain(Matrix::Identity(3, 3), Y));
    CHECK((r.fit.alpha_hat - Y).norm() < 1e-12);
    CHECK(r.lp.objective == doctest::Approx(3.5));
    Matrix A(1, 2);
    A << 2, 1;
    const auto s = basis_pursuit(plain(A, Vector::Constant(1, 2.0)));
    CHECK(s.fit.alpha_hat(0) == doctest::Approx(1.0));
    CHECK(s.fit.alpha_hat(1) == 0.0);
    CHECK(s.lp.objective == doctest::Approx(1.0));
}

TEST_CASE("basis pursuit matches the ADMM oracle and beats random feasible points") {
    Rng rng(6);
    for (int t = 0; t < 5; ++t) {
        const auto ts = plain(gaussian_iid_features(5, 15, rng), sample_noise(rng, 5, 1.0));
        const auto r = basis_pursuit(ts);
        const Vector admm = oracles::admm_basis_pursuit(ts.A, ts.Y);
        CHECK(r.lp.objective == doctest::Approx(admm.lpNorm<1>()).epsilon(1e-6));
        CHECK(r.fit.alpha_hat.lpNorm<1>() == doctest::Approx(r.lp.objective).epsilon(1e-8));
        CHECK(r.fit.support.size() <= 5u);
        for (Index j = 0; j < 15; ++j) CHECK(r.lp.u(j) * r.lp.v(j) == 0.0);
        const Matrix N = oracles::null_space(ts.A);
        for (int k = 0; k < 1000; ++k) {
            const Vector x = r.fit.alpha_hat + N * sample_noise(rng, N.cols(), 1.0);
            CHECK(r.fit.alpha_hat.lpNorm<1>() <= x.lpNorm<1>() + 1e-10);
        }
    }
}

TEST_CASE("Bland and Dantzig pricing reach the same optimum") {
    Rng rng(7);
    const auto ts = plain(gaussian_iid_features(10, 40, rng), sample_noise(rng, 10, 1.0));
    SimplexOptions bland;
    bland.pricing = PricingRule::Bland;
    bland.crash = CrashRule::LeadingColumns;
    const auto a = basis_pursuit(ts, bland);
    const auto b = basis_pursuit(ts);
    CHECK(a.lp.objective == doctest::Approx(b.lp.objective).epsilon(1e-10));
}

TEST_CASE("basis pursuit rejects rank-deficient systems") {
    Matrix A(2, 4);
    A << 1, 1, 1, 1, 2, 2, 2, 2;
    CHECK_THROWS_AS(basis_pursuit(plain(A, Vector::Ones(2))), Infeasible);
}

TEST_CASE("Lasso small cases") {
    LassoConfig cfg;
    cfg.lambda = 1.0;
    const auto r = lasso_cd(plain(Matrix::Constant(1, 1, 1.0), Vector::Constant(1, 3.0)), cfg);
    CHECK(r.alpha(0) == doctest::Approx(2.0));
    Rng rng(1);
    const auto ts = plain(gaussian_iid_features(10, 30, rng), sample_noise(rng, 10, 1.0));
    cfg.lambda = (ts.A.transpose() * ts.Y).cwiseAbs().maxCoeff() / 10.0;
    CHECK(lasso_cd(ts, cfg).alpha.isZero());
    cfg.lambda = 0.0;
    CHECK_THROWS_AS(lasso_cd(ts, cfg), InvalidArgument);
}

TEST_CASE("Lasso reaches the KKT tolerance and the proximal-gradient objective") {
    Rng rng(2);
    for (int t = 0; t < 5; ++t) {
        const auto inst = make_unit_instance(40, {0, 5}, 0.1);
        const auto ts = make_training_set<double>(gaussian_iid_features(20, 40, rng), inst, rng);
        LassoConfig cfg;
        cfg.lambda = 0.05;
        const auto r = lasso_cd(ts, cfg);
        CHECK(r.converged);
        CHECK(lasso_kkt_residual(ts.A, ts.Y, r.alpha, cfg.lambda) <= 1e-8);
        const Vector ref = oracles::fista_lasso(ts.A, ts.Y, cfg.lambda);
        CHECK(lasso_objective(ts.A, ts.Y, r.alpha, cfg.lambda) <= lasso_objective(ts.A, ts.Y, ref, cfg.lambda) + 1e-6);
        cfg.randomized_order = true;
        cfg.order_seed = 3;
        const auto rr = lasso_cd(ts, cfg);
        CHECK((rr.alpha - r.alpha).norm() < 1e-6);
    }
}

TEST_CASE("square-root Lasso: zero solution, equivariance and plug-in consistency") {
    Rng rng(3);
    const auto inst = make_unit_instance(60, {0, 1, 2}, 0.04);
    const auto ts = make_training_set<double>(gaussian_iid_features(30, 60, rng), inst, rng);
    LassoConfig cfg;
    cfg.gamma = 0.3;
    const auto r = sqrt_lasso(ts, cfg);
    CHECK(r.converged);
    CHECK(sqrt_lasso_kkt_residual(ts.A, ts.Y, r.alpha, cfg.gamma) <= 1e-8);
    auto scaled = ts;
    scaled.Y *= 7.0;
    const auto s = sqrt_lasso(scaled, cfg);
    CHECK((s.alpha - 7.0 * r.alpha).cwiseAbs().maxCoeff() <= 1e-6 * std::max(1.0, 7.0 * r.alpha.cwiseAbs().maxCoeff()));
    const double lambda = cfg.gamma * (ts.Y - ts.A * r.alpha).norm() / std::sqrt(30.0);
    CHECK(lasso_kkt_residual(ts.A, ts.Y, r.alpha, lambda) <= 1e-6);
    LassoConfig big;
    big.gamma = (ts.A.transpose() * ts.Y).cwiseAbs().maxCoeff() / (std::sqrt(30.0) * ts.Y.norm()) * 1.01;
    CHECK(sqrt_lasso(ts, big).alpha.isZero());
}

TEST_CASE("hybrid interpolator special cases") {
    Rng rng(4);
    const auto inst = make_unit_instance(30, {0, 1}, 0.01);
    const auto ts = make_training_set<double>(gaussian_iid_features(10, 30, rng), inst, rng);
    const auto zero = hybrid_interpolate(ts, [](const TrainingSet<double>& t) { return Vector(Vector::Zero(t.d())); });
    CHECK((zero.alpha_hat - min_l2_interpolate(ts).alpha_hat).norm() < 1e-12);
    const auto oracle_first = hybrid_interpolate(
        ts, [&](const TrainingSet<double>&) { return inst.alpha_star; }, &inst.alpha_star);
    const double err = test_mse_analytic(oracle_first.alpha_hat, inst.alpha_star);
    CHECK(err == doctest::Approx(oracle::ideal_mse<double>(ts.A, ts.W)).epsilon(1e-9));
    CHECK(oracle_first.diagnostics.at("delta_norm2") == doctest::Approx(err).epsilon(1e-9));
    CHECK(oracle_first.residual_norm < 1e-9);
}

TEST_CASE("hybrid Lasso meets the decomposition inequality") {
    Rng rng(5);
    const Index n = 200, d = 2000, k = 4;
    std::vector<double> errors;
    for (int t = 0; t < 5; ++t) {
        const auto inst = make_unit_instance(d, {0, 1, 2, 3}, 0.01);
        const auto ts = make_training_set<double>(gaussian_iid_features(n, d, rng), inst, rng);
        LassoConfig cfg;
        cfg.lambda = default_lasso_lambda(0.1, n, d);
        const auto h = hybrid_interpolate(ts, [&](const TrainingSet<double>& s) { return lasso_cd(s, cfg).alpha; },
                                          &inst.alpha_star);
        const double err = test_mse_analytic(h.alpha_hat, inst.alpha_star);
        const double lmin = std::pow(MinNormSolver(ts.A).sigma_min(), 2);
        const double e_est = h.diagnostics.at("first_stage_est_error");
        const double e_pred = h.diagnostics.at("first_stage_pred_error");
        CHECK(err <= e_est + (2.0 * ts.W.squaredNorm() + 2.0 * n * e_pred) / lmin + 1e-12);
        errors.push_back(err);
    }
    const double rate = 0.01 * k * std::log(static_cast<double>(d)) / n + 0.01 * static_cast<double>(n) / d;
    CHECK(median(errors) <= 40.0 * rate);
}

TEST_CASE("incoherence and restricted eigenvalue diagnostics") {
    CHECK(pairwise_incoherence(Matrix::Identity(3, 3)) == 0.0);
    Matrix A(2, 3);
    A << 1, 1, 0, 2, 2, 1;
    CHECK(pairwise_incoherence(A) == doctest::Approx(1.0));
    A.col(2).setZero();
    CHECK_THROWS_AS(pairwise_incoherence(A), ZeroColumn);
    Rng rng(6);
    const Matrix G = gaussian_iid_features(200, 50, rng);
    const double re = restricted_eigenvalue_estimate(G, {0, 1, 2}, rng, 500);
    CHECK(re > 0.0);
    CHECK(re <= 2.0);
}

TEST_CASE("gaussian design at n=1000, d=50 stays below 1/(2k-1) for k=5") {
    // Each of the 1225 pair correlations is about N(0, 1/n) and the threshold sits near 3.5 sd.
    Rng rng(6);
    int good = 0;
    for (int t = 0; t < 100; ++t)
        if (pairwise_incoherence(gaussian_iid_features(1000, 50, rng)) < 1.0 / 9.0) ++good;
    CHECK(good >= 90);
}
