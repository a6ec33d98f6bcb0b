#pragma once

#include <cstdint>

namespace causalbench {

// 64-bit avalanche mix (SplitMix64 finalizer). Every seed derivation in the
// pipeline goes through this function so that results are bit-identical
// across platforms and compilers; std::uniform_* distributions are not
// portable and are never used.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Independent stream seed for (master, stream) pairs, e.g. one stream per
// dataset instance or per pipeline stage. stream may be any 64-bit value.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return mix64(master + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

// SplitMix64 sequence generator.
class Rng {
  public:
    explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform integer in [0, bound). bound must be > 0. Uses the
    // multiply-shift reduction; the bias is below 2^-64 per call.
    std::uint64_t below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) noexcept { return real01() < p; }

    // Fork a child generator for a named sub-stream without disturbing
    // this generator's own sequence.
    Rng fork(std::uint64_t stream) const noexcept { return Rng(derive_seed(state_, stream)); }

  private:
    std::uint64_t state_;
};

}  // namespace causalbench
