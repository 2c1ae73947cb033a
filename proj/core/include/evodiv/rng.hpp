#pragma once

#include <array>
#include <cstdint>

#include "evodiv/error.hpp"

namespace evodiv {

/// Deterministic 64-bit generator: xoshiro256** seeded through splitmix64.
///
/// Streams are bit-identical across platforms and standard libraries, which
/// std::uniform_*_distribution does not guarantee. Every piece of randomness
/// in a run must flow through the run's single instance; independent runs own
/// independent instances.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_)
            word = splitmix64(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) {
        EVODIV_REQUIRE(lo <= hi, "uniform_real needs lo <= hi");
        return lo + uniform01() * (hi - lo);
    }

    /// Uniform integer in [0, n). Unbiased via rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        EVODIV_REQUIRE(n > 0, "uniform_below needs n > 0");
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        std::uint64_t x = next_u64();
        while (x < threshold)
            x = next_u64();
        return x % n;
    }

    /// Uniform integer in [lo, hi], both ends included.
    int uniform_int(int lo, int hi) {
        EVODIV_REQUIRE(lo <= hi, "uniform_int needs lo <= hi");
        const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return static_cast<int>(static_cast<std::int64_t>(lo) +
                                static_cast<std::int64_t>(uniform_below(span)));
    }

    std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(uniform_below(n)); }

    bool bernoulli(double p) { return uniform01() < p; }

    bool operator==(const Rng&) const = default;

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& s) {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace evodiv
