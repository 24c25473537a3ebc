#include <doctest.h>

#include <cmath>

#include "interp/features.hpp"
#include "interp/interpolators.hpp"
#include "interp/metrics.hpp"
#include "interp/sparse.hpp"

using namespace interp;

TEST_CASE("analytic test error") {
    const Vector a = (Vector(3) << 1, 0, -2).finished();
    CHECK(test_mse_analytic(a, a) == 0.0);
    CHECK(test_mse_analytic(a, Vector::Zero(3)) == doctest::Approx(5.0));
    const Matrix half = (Vector(3) << 1, 2, 3).finished().asDiagonal();
    CHECK(test_mse_analytic(Vector(Vector::Zero(3)), a, half) == doctest::Approx(1 + 36));
    CHECK(test_mse_quadratic(Vector(Vector::Zero(3)), a, half * half) == doctest::Approx(1 + 36));
}

TEST_CASE("empirical test error agrees with the analytic one") {
    Rng rng(1);
    Matrix S(6, 6);
    const Matrix G = gaussian_iid_features(6, 6, rng);
    S = G * G.transpose() / 6.0 + 0.5 * Matrix::Identity(6, 6);
    const auto fam = FeatureFamily::gaussian_cov(S);
    const Vector truth = sample_noise(rng, 6, 1.0);
    const Vector est = truth + sample_noise(rng, 6, 0.1);
    const double analytic = test_mse_analytic(est, truth, symmetric_sqrt(S));
    Rng test_rng(2);
    const auto emp = test_mse_empirical<double>(est, LinearTarget{truth}, 0.25, fam, test_rng, 100000);
    CHECK(std::abs(emp.mean - analytic) <= 3.0 * emp.stderr_);
}

TEST_CASE("empirical error of the truth and of the null predictor") {
    const auto fam = FeatureFamily::legendre(5);
    const Vector truth = (Vector(5) << 0, 1, 0, 2, 0).finished();
    Rng a(3);
    CHECK(std::abs(test_mse_empirical<double>(truth, LinearTarget{truth}, 0.0, fam, a, 1000).mean) < 1e-20);
    Rng b(4);
    const auto null = test_mse_empirical<double>(Vector(Vector::Zero(5)), LinearTarget{truth}, 0.0, fam, b, 100000);
    CHECK(std::abs(null.mean - truth.squaredNorm()) <= 3.0 * null.stderr_);
}

TEST_CASE("empirical error on Fourier features matches the coefficient distance") {
    const auto fam = FeatureFamily::fourier(8);
    Vector truth = Vector::Zero(8);
    truth(2) = 1.0;
    CVector est = CVector::Zero(8);
    est(2) = 0.75;
    est(5) = cplx(0.1, -0.2);
    Rng rng(5);
    const auto emp = test_mse_empirical<cplx>(est, LinearTarget{truth}, 0.0, fam, rng, 100000);
    const double analytic = test_mse_analytic(est, truth);
    CHECK(std::abs(emp.mean - analytic) <= 3.0 * emp.stderr_ + 1e-12);
}

TEST_CASE("top-n truncation keeps the largest entries, ties to the lower index") {
    const Vector a = (Vector(5) << 1, -3, 3, 0.5, 2).finished();
    const Vector t = truncate_top_n<double>(a, 2);
    CHECK(t == (Vector(5) << 0, -3, 3, 0, 0).finished());
    const Vector u = truncate_top_n<double>(Vector::Ones(4), 2);
    CHECK(u == (Vector(4) << 1, 1, 0, 0).finished());
}

TEST_CASE("parsimony of OMP and basis pursuit, and the lack of it for min-l2") {
    Rng rng(6);
    const Matrix A = gaussian_iid_features(10, 40, rng);
    std::vector<Vector> probes;
    for (int t = 0; t < 5; ++t) probes.push_back(sample_noise(rng, 10, 1.0));
    auto wrap = [&](auto solver) {
        return [&, solver](const Vector& Y) {
            TrainingSet<double> ts;
            ts.A = A;
            ts.Y = Y;
            ts.W = Vector::Zero(Y.size());
            return Vector(solver(ts));
        };
    };
    const double omp_beta = parsimony_beta(wrap([](const TrainingSet<double>& ts) { return omp(ts).fit.alpha_hat; }), A, probes);
    const double bp_beta =
        parsimony_beta(wrap([](const TrainingSet<double>& ts) { return basis_pursuit(ts).fit.alpha_hat; }), A, probes);
    CHECK(omp_beta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bp_beta == doctest::Approx(1.0).epsilon(1e-12));

    Vector x(8);
    for (Index j = 0; j < 8; ++j) x(j) = static_cast<double>(j) / 8.0;
    const Matrix R = realify(fourier_features(x, 64));
    std::vector<Vector> noise;
    for (int t = 0; t < 5; ++t) noise.push_back(sample_noise(rng, R.rows(), 1.0));
    const double l2_beta = parsimony_beta([&](const Vector& Y) { return min_norm_solve(R, Y); }, R, noise);
    CHECK(l2_beta < 0.5);
}

TEST_CASE("estimation and prediction error") {
    Rng rng(7);
    const Matrix A = gaussian_iid_features(5000, 50, rng);
    const Vector truth = sample_noise(rng, 50, 1.0);
    const auto zero = estimation_and_prediction_error(truth, truth, A);
    CHECK(zero.estimation == 0.0);
    CHECK(zero.prediction == 0.0);
    const auto null = estimation_and_prediction_error(Vector::Zero(50), truth, A);
    CHECK(null.estimation == doctest::Approx(truth.squaredNorm()));
    CHECK(null.prediction == doctest::Approx((A * truth).squaredNorm() / 5000.0));
    const Vector est = truth + sample_noise(rng, 50, 0.5);
    const auto s = estimation_and_prediction_error(est, truth, A);
    CHECK(std::abs(s.prediction / s.estimation - 1.0) < 0.1);
}

TEST_CASE("quantiles interpolate between order statistics") {
    const std::vector<double> v = {4, 1, 3, 2};
    CHECK(quantile(v, 0.5) == doctest::Approx(2.5));
    CHECK(quantile(v, 0.075) == doctest::Approx(1.225));
    CHECK(quantile(v, 0.925) == doctest::Approx(3.775));
    CHECK(quantile(v, 0.0) == 1.0);
    CHECK(quantile(v, 1.0) == 4.0);
    CHECK(median({5.0}) == 5.0);
    CHECK(mean(v) == 2.5);
}
