#include <doctest.h>

#include <cmath>

#include "interp/core_model.hpp"
#include "interp/errors.hpp"
#include "interp/features.hpp"
#include "oracles.hpp"

using namespace interp;

TEST_CASE("min_norm_solve on the identity returns y") {
    const Vector y = (Vector(3) << 1, 2, 3).finished();
    CHECK((min_norm_solve(Matrix::Identity(3, 3), y) - y).norm() < 1e-14);
}

TEST_CASE("min_norm_solve splits a single row evenly") {
    Matrix M(1, 2);
    M << 1, 1;
    const Vector x = min_norm_solve(M, Vector::Ones(1));
    CHECK(x(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(x(1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("min_norm_solve matches the full-SVD pseudoinverse and the saddle-point system") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix M = gaussian_iid_features(4, 8, rng);
        const Vector y = sample_noise(rng, 4, 1.0);
        const Vector x = min_norm_solve(M, y);
        CHECK((x - oracles::pinv_solve(M, y)).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((x - oracles::kkt_min_norm(M, y)).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((M * x - y).norm() <= 1e-8 * y.norm());
    }
}

TEST_CASE("min_norm_solve projects onto the row space") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix M = gaussian_iid_features(5, 10, rng);
        const Vector x0 = sample_noise(rng, 10, 1.0);
        const Vector x = min_norm_solve(M, M * x0);
        CHECK((x - oracles::project_row_space(M, x0)).norm() < 1e-10 * x0.norm());
    }
}

TEST_CASE("min_norm_solve rejects rank deficiency and bad shapes") {
    Matrix M(2, 3);
    M << 1, 2, 3, 2, 4, 6;
    CHECK_THROWS_AS(min_norm_solve(M, Vector(Vector::Ones(2))), RankDeficient);
    CHECK_THROWS_AS(min_norm_solve(M, Vector(Vector::Ones(3))), DimensionMismatch);
    CHECK_THROWS_AS(min_norm_solve(Matrix(Matrix::Ones(3, 2)), Vector(Vector::Ones(3))), DimensionMismatch);
}

TEST_CASE("complex min_norm_solve agrees with the complex pseudoinverse") {
    Rng rng(3);
    CMatrix M(3, 7);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 7; ++j) M(i, j) = cplx(rng.normal(), rng.normal());
    CVector y(3);
    for (Index i = 0; i < 3; ++i) y(i) = cplx(rng.normal(), rng.normal());
    const CVector x = min_norm_solve(M, y);
    CHECK((x - oracles::pinv_solve(M, y)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("least_squares_solve recovers an exact tall system") {
    Rng rng(5);
    const Matrix M = gaussian_iid_features(12, 4, rng);
    const Vector x0 = sample_noise(rng, 4, 1.0);
    CHECK((least_squares_solve(M, M * x0) - x0).norm() < 1e-10);
}

TEST_CASE("sample_noise: zero variance, moments and determinism") {
    Rng a(42), b(42);
    CHECK(sample_noise(a, 5, 0.0).isZero());
    Rng c(1), d(1);
    CHECK(sample_noise(c, 100, 2.0) == sample_noise(d, 100, 2.0));
    Rng big(2019);
    const Vector w = sample_noise(big, 100000, 1.0);
    const double m = w.mean();
    const double var = (w.array() - m).square().sum() / (w.size() - 1);
    CHECK(std::abs(m) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.05);
    CHECK_THROWS_AS(sample_noise(a, 3, -1.0), InvalidArgument);
}

TEST_CASE("rng stream is pinned") {
    Rng r(20190708);
    const std::uint64_t first = r.next_u64();
    Rng again(20190708);
    CHECK(again.next_u64() == first);
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    Rng u(9);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK((x >= 0.0 && x < 1.0));
        CHECK(u.below(7) < 7u);
    }
}

TEST_CASE("training set satisfies Y = A alpha* + W exactly") {
    Rng rng(8);
    const auto inst = make_unit_instance(20, {1, 4}, 0.5);
    const auto ts = make_training_set<double>(gaussian_iid_features(6, 20, rng), inst, rng);
    CHECK(ts.Y == ts.A * inst.alpha_star + ts.W);
    CHECK(inst.alpha_star.sum() == 2.0);
    CHECK_THROWS(make_instance(5, {1, 7}, Vector::Ones(2), 1.0));
}

TEST_CASE("symmetric square roots") {
    Matrix S(2, 2);
    S << 2, 1, 1, 2;
    const Matrix R = symmetric_sqrt(S);
    CHECK((R * R - S).norm() < 1e-12);
    CHECK((symmetric_inverse_sqrt(S) * R - Matrix::Identity(2, 2)).norm() < 1e-12);
    Matrix bad(2, 2);
    bad << 1, 2, 2, 1;
    CHECK_THROWS_AS(symmetric_inverse_sqrt(bad), NotPositiveDefinite);
}
