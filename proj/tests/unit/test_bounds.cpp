#include <doctest.h>

#include <cmath>

#include "interp/bounds.hpp"
#include "interp/errors.hpp"
#include "interp/features.hpp"
#include "interp/interpolators.hpp"

using namespace interp;
namespace bd = interp::bounds;

namespace {
bd::BoundParams params(Index n, Index d, double sigma2, double delta) {
    bd::BoundParams p;
    p.n = n;
    p.d = d;
    p.sigma2 = sigma2;
    p.delta = delta;
    return p;
}
}  // namespace

TEST_CASE("Gaussian lower and upper curves at a worked point") {
    CHECK(bd::ideal_mse_lower_gaussian(params(100, 10000, 1.0, 0.1)) == doctest::Approx(0.00625));
    const auto up = bd::ideal_mse_upper_gaussian(params(100, 10000, 1.0, 0.1));
    CHECK(!up.flagged);
    CHECK(up.value == doctest::Approx(110.0 / 6400.0));
    CHECK(bd::ideal_mse_lower_gaussian(params(100, 10000, 1.0, 0.999999)) < 1e-7);
    const auto vac = bd::ideal_mse_upper_gaussian(params(100, 400, 1.0, 0.5));
    CHECK(vac.flagged);
    CHECK(std::isinf(vac.value));
}

TEST_CASE("lower curve halves when d doubles far above n") {
    const double a = bd::ideal_mse_lower_gaussian(params(10, 1000000, 1.0, 0.5));
    const double b = bd::ideal_mse_lower_gaussian(params(10, 2000000, 1.0, 0.5));
    CHECK(b / a == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("upper curve dominates the lower one on a grid") {
    for (Index n : {5, 20, 100})
        for (Index m : {5, 10, 50, 200})
            for (double delta : {0.1, 0.5, 0.9}) {
                const auto p = params(n, m * n, 2.0, delta);
                CHECK(bd::ideal_mse_upper_gaussian(p).value >= bd::ideal_mse_lower_gaussian(p));
                CHECK(bd::ideal_mse_upper_subgaussian(p).value >= bd::ideal_mse_lower_subgaussian(p));
            }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(bd::validate(params(10, 100, 1.0, 1.0)), InvalidArgument);
    CHECK_THROWS_AS(bd::validate(params(10, 100, -1.0, 0.5)), InvalidArgument);
    CHECK_NOTHROW(bd::validate(params(10, 100, 1.0, 0.5)));
}

TEST_CASE("parsimonious floor") {
    const auto f = bd::parsimonious_floor(params(100, 6400, 1.0, 0.5), 1.0);
    CHECK(f.value == doctest::Approx(0.5 / (4.0 * std::log(64.0))));
    CHECK(f.value == doctest::Approx(0.03005).epsilon(1e-3));
    CHECK(!f.flagged);
    CHECK(bd::parsimonious_floor(params(100, 200, 1.0, 0.5), 1.0).flagged);
    CHECK(bd::parsimonious_floor(params(100, 6400, 1.0, 0.5), 1e-9).value < 1e-9);
    // Against d = n^2 the floor decays like 1/ln n, the ideal upper curve like 1/n.
    double previous_ratio = 0.0;
    for (Index n : {100, 1000}) {
        const auto p = params(n, n * n, 1.0, 0.5);
        const double ratio = bd::parsimonious_floor(p, 1.0).value / bd::ideal_mse_upper_gaussian(p).value;
        CHECK(ratio > 1.0);
        CHECK(ratio > previous_ratio);
        previous_ratio = ratio;
    }
}

TEST_CASE("heavy-tailed lower curve sits below the Gaussian one") {
    // With C = 1 the comparison needs sqrt(d) (sqrt(ln n) - 1) >= sqrt(n).
    for (Index n : {10, 50, 100, 1000})
        for (Index m : {10, 100, 1000}) {
            const auto p = params(n, m * n, 1.0, 0.5);
            CHECK(bd::ideal_mse_lower_heavy_tailed(p) <= bd::ideal_mse_lower_gaussian(p));
        }
}

TEST_CASE("singular value band") {
    const auto b0 = bd::singular_value_band_gaussian(50, 50, 0.0);
    CHECK(b0.lo == 0.0);
    const auto b = bd::singular_value_band_gaussian(100, 1000, 3.0);
    CHECK(b.hi - b.lo == doctest::Approx(2.0 * (10.0 + 3.0)));
    CHECK(b.failure_probability == doctest::Approx(std::exp(-4.5)));
    Rng rng(99);
    const auto band = bd::singular_value_band_gaussian(100, 1000, 10.0);
    int inside = 0;
    for (int t = 0; t < 500; ++t) {
        const MinNormSolver s(gaussian_iid_features(100, 1000, rng));
        if (s.sigma_min() >= band.lo && s.sigma_max() <= band.hi) ++inside;
    }
    CHECK(inside >= 495);
}

TEST_CASE("equiangular frame bound") {
    const auto b = bd::equiangular_frame_bound(4, 13);
    CHECK(b.value == doctest::Approx(4.0 * (1.0 - std::sqrt(9.0 / 48.0))));
    CHECK(b.value == doctest::Approx(2.268).epsilon(1e-3));
    const auto flat = bd::equiangular_frame_bound(5, 5);
    CHECK(flat.flagged);
    CHECK(flat.value == 5.0);
    // Boundary where (d - n) / (n (d - 1)) = 1 / n, i.e. the coherence is 1/sqrt(n): d -> infinity.
    const auto far = bd::equiangular_frame_bound(9, 100000000);
    CHECK(far.value == doctest::Approx(9.0 * (1.0 - 1.0 / 3.0)).epsilon(1e-6));
}

TEST_CASE("band coverage of the ideal noise-fit cost") {
    Rng rng(2024);
    const auto p = params(100, 3200, 1.0, 0.5);
    const double lo = bd::ideal_mse_lower_gaussian(p), hi = bd::ideal_mse_upper_gaussian(p).value;
    int inside = 0;
    for (int t = 0; t < 200; ++t) {
        const Vector W = sample_noise(rng, 100, 1.0);
        const double v = oracle::ideal_mse<double>(gaussian_iid_features(100, 3200, rng), W);
        if (v >= lo && v <= hi) ++inside;
    }
    CHECK(inside >= 190);
}

TEST_CASE("Rademacher designs follow the n/d scaling") {
    Rng rng(31);
    auto rademacher = [&](Index n, Index d) {
        Matrix A(n, d);
        for (Index j = 0; j < d; ++j)
            for (Index i = 0; i < n; ++i) A(i, j) = (rng.next_u64() >> 63) ? 1.0 : -1.0;
        return A;
    };
    double small = 0.0, large = 0.0;
    for (int t = 0; t < 200; ++t) {
        const Vector W = sample_noise(rng, 50, 1.0);
        small += oracle::ideal_mse<double>(rademacher(50, 400), W);
        large += oracle::ideal_mse<double>(rademacher(50, 1600), W);
    }
    const double ratio = large / small;
    CHECK(ratio >= 0.2);
    CHECK(ratio <= 0.35);
}
