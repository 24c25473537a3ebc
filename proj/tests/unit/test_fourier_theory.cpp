#include <doctest.h>

#include <cmath>
#include <numbers>

#include "interp/errors.hpp"
#include "interp/features.hpp"
#include "interp/fourier_theory.hpp"
#include "interp/interpolators.hpp"
#include "oracles.hpp"

using namespace interp;
namespace fr = interp::fourier;

namespace {
CMatrix regular_fourier(Index n, Index d) {
    Vector x(n);
    for (Index j = 0; j < n; ++j) x(j) = static_cast<double>(j) / static_cast<double>(n);
    return fourier_features(x, d);
}

CVector dense_fit(Index k_star, Index n, Index d, const Vector& w) {
    const CMatrix A = regular_fourier(n, d);
    return oracles::dense_weighted_solution(A, w, A.col(k_star));
}
}  // namespace

TEST_CASE("closed form matches the dense weighted solve over the grid") {
    Rng rng(12);
    for (Index n : {2, 4, 8, 16}) {
        for (Index m : {1, 2, 4, 8}) {
            const Index d = m * n;
            for (int t = 0; t < 20; ++t) {
                Vector w(d);
                for (Index j = 0; j < d; ++j) w(j) = 0.2 + 2.0 * rng.uniform();
                const CMatrix A = regular_fourier(n, d);
                TrainingSet<cplx> ts;
                ts.A = A;
                ts.W = Vector::Zero(n);
                for (Index k = 0; k < n; ++k) {
                    ts.Y = A.col(k);
                    const CVector solver = weighted_min_l2_interpolate(ts, w).alpha_hat;
                    const Vector closed = fr::closed_form_weighted_solution(k, n, d, w);
                    CHECK((solver - closed.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("uniform weights give survival n/d and contamination sqrt(n/d)") {
    for (Index n : {2, 5, 8})
        for (Index m : {1, 3, 4}) {
            const Index d = m * n;
            const Vector w = Vector::Ones(d);
            for (Index k = 0; k < n; ++k) {
                CHECK(fr::survival(k, n, d, w) == static_cast<double>(n) / static_cast<double>(d));
                CHECK(fr::contamination(k, n, d, w) ==
                      doctest::Approx(std::sqrt(static_cast<double>(n * (d - n))) / static_cast<double>(d)));
            }
        }
    CHECK(fr::contamination(0, 2, 4, Vector::Ones(4)) == doctest::Approx(0.5));
    CHECK(fr::survival(1, 5, 5, Vector::Ones(5)) == 1.0);
    CHECK(fr::contamination(1, 5, 5, Vector::Ones(5)) == 0.0);
}

TEST_CASE("closed form worked example and dominance limit") {
    const Vector w = (Vector(4) << 2, 1, 1, 1).finished();
    const Vector a = fr::closed_form_weighted_solution(0, 2, 4, w);
    CHECK(a(0) == doctest::Approx(0.8));
    CHECK(a(1) == 0.0);
    CHECK(a(2) == doctest::Approx(0.2));
    CHECK(a(3) == 0.0);
    CHECK((dense_fit(0, 2, 4, w) - a.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-12);
    Vector big = Vector::Ones(12);
    big(1) = 1e6;
    const Vector b = fr::closed_form_weighted_solution(1, 4, 12, big);
    CHECK(b(1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b(5) < 1e-11);
    CHECK_THROWS_AS(fr::closed_form_weighted_solution(0, 3, 7, Vector::Ones(7)), NotMultiple);
    CHECK_THROWS_AS(fr::survival(0, 3, 6, Vector::Ones(5)), DimensionMismatch);
}

TEST_CASE("survival agrees with its one-pole form and is monotone in the weights") {
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        const Index n = 4, d = 20;
        Vector w(d);
        for (Index j = 0; j < d; ++j) w(j) = 0.1 + rng.uniform();
        for (Index k = 0; k < n; ++k) {
            CHECK(std::abs(fr::survival(k, n, d, w) - fr::survival_one_pole(k, n, d, w)) < 1e-12);
            Vector up = w;
            up(k) *= 1.01;
            CHECK(fr::survival(k, n, d, up) > fr::survival(k, n, d, w));
            Vector alias_up = w;
            alias_up(k + n) *= 1.01;
            CHECK(fr::survival(k, n, d, alias_up) < fr::survival(k, n, d, w));
        }
    }
}

TEST_CASE("filter profile stays in range") {
    Rng rng(4);
    Vector w(24);
    for (Index j = 0; j < 24; ++j) w(j) = 0.1 + rng.uniform();
    const auto p = fr::filter_profile(6, 24, w);
    CHECK(p.survival.size() == 6);
    CHECK(p.survival.minCoeff() >= 0.0);
    CHECK(p.survival.maxCoeff() <= 1.0);
    CHECK(p.contamination.minCoeff() >= 0.0);
}

TEST_CASE("spiked weights: approximation for favored frequencies and the n/d branch") {
    const Index n = 50, s = 10;
    for (double gamma : {0.5, 0.9, 0.99}) {
        for (Index d : {1000, 2000, 5000}) {
            const Vector w = fr::spiked_weights(d, s, gamma);
            const double exact = fr::survival(1, n, d, w);
            const double approx = fr::spiked_survival_approx(n, s, gamma);
            CHECK(std::abs(exact - approx) <= 0.02 * exact);
            CHECK(fr::survival(s + 3, n, d, w) == doctest::Approx(static_cast<double>(n) / static_cast<double>(d)));
        }
    }
    const Vector strong = fr::spiked_weights(1100, 10, 0.99);
    CHECK(fr::survival(1, 50, 1100, strong) >= 0.9);
    CHECK(fr::contamination(1, 50, 1100, strong) <= 0.1);
}

TEST_CASE("empirical survival and contamination on a regular grid") {
    const Index n = 8, d = 32;
    const CVector a = dense_fit(3, n, d, Vector::Ones(d));
    const auto e = fr::empirical_survival_contamination(a, 3);
    CHECK(e.survival == doctest::Approx(0.25).epsilon(1e-10));
    // Exact alias energy is sqrt(n(d-n))/d; sqrt(n/d) = 0.5 is its large-d limit.
    CHECK(e.contamination == doctest::Approx(std::sqrt(8.0 * 24.0) / 32.0).epsilon(1e-10));
    CHECK(fr::contamination(3, n, d, Vector::Ones(d)) == doctest::Approx(e.contamination).epsilon(1e-12));
    Rng rng(5);
    Vector w(d);
    for (Index j = 0; j < d; ++j) w(j) = 0.3 + rng.uniform();
    for (Index k = 0; k < n; ++k) {
        const CVector b = dense_fit(k, n, d, w);
        const auto f = fr::empirical_survival_contamination(b, k);
        CHECK(std::abs(f.survival - fr::survival(k, n, d, w)) < 1e-8);
        // Alias coefficients scale with w_j^2, so their energy carries fourth powers.
        double fourth = 0.0, energy = 0.0;
        for (Index j = k % n; j < d; j += n) {
            energy += w(j) * w(j);
            if (j != k) fourth += std::pow(w(j), 4);
        }
        CHECK(std::abs(f.contamination - std::sqrt(fourth) / energy) < 1e-8);
        // Noiseless test error splits into the lost signal and the alias energy.
        Vector truth = Vector::Zero(d);
        truth(k) = 1.0;
        const double mse = (b - truth.cast<cplx>()).squaredNorm();
        CHECK(std::abs(mse - (std::pow(1.0 - f.survival, 2) + std::pow(f.contamination, 2))) < 1e-8);
    }
}

TEST_CASE("Parseval split of pure noise on the first n frequencies") {
    Rng rng(6);
    const Index n = 16;
    for (int t = 0; t < 10; ++t) {
        const Vector W = sample_noise(rng, n, 1.0);
        TrainingSet<cplx> ts;
        ts.A = regular_fourier(n, n);
        ts.Y = W.cast<cplx>();
        ts.W = W;
        const CVector a = min_l2_interpolate(ts).alpha_hat;
        CHECK(std::abs(a.squaredNorm() - W.squaredNorm() / n) < 1e-10);
    }
}

TEST_CASE("interpolation kernel passes through the training grid") {
    const Index n = 8, d = 32;
    Rng rng(7);
    Vector w(d);
    for (Index j = 0; j < d; ++j) w(j) = 0.3 + rng.uniform();
    Vector grid(n);
    for (Index j = 0; j < n; ++j) grid(j) = static_cast<double>(j) / n;
    const CVector at_train = fr::interpolation_kernel(w, n, d, grid);
    CHECK(std::abs(at_train(0) - 1.0) < 1e-8);
    for (Index j = 1; j < n; ++j) CHECK(std::abs(at_train(j)) < 1e-8);

    Vector mid(n);
    for (Index j = 0; j < n; ++j) mid(j) = (static_cast<double>(j) + 0.37) / n;
    for (Index dd : {n, d}) {
        const Vector ones = Vector::Ones(dd);
        const CMatrix A = regular_fourier(n, dd);
        CVector e1 = CVector::Zero(n);
        e1(0) = 1.0;
        const CVector coef = oracles::dense_weighted_solution(A, ones, e1);
        const CVector kern = fr::interpolation_kernel(ones, n, dd, mid);
        for (Index j = 0; j < n; ++j) {
            cplx direct = 0.0;
            for (Index k = 0; k < dd; ++k)
                direct += coef(k) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) * mid(j));
            CHECK(std::abs(kern(j) - direct) < 1e-10);
        }
    }
}
