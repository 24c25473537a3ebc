#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace interp {

// Deterministic stream: identical output for a given seed on every conforming
// platform. The engine is fully specified by the standard; the transforms to
// uniform and normal variates are implemented here for the same reason.
class Rng {
public:
    static constexpr std::string_view algorithm_id = "mt19937_64/polar-53";

    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via the Marsaglia polar method; the second variate of
    // each accepted pair is cached.
    double normal();

    // Uniform integer in [0, bound) by rejection, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// splitmix64 finalizer; used to derive independent per-cell seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace interp
