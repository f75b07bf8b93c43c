#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mcqsim {

// Counter-style 64-bit generator (splitmix64). Chosen over the std engines
// because std::*_distribution output is implementation-defined and scenes
// must replay bit-identically from a stored seed on any platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, 2*pi).
    double angle() { return uniform01() * 2.0 * std::numbers::pi; }

    // Standard normal via Box-Muller; consumes exactly two draws per call
    // so the stream position is a pure function of the call count.
    double normal() {
        double u1 = 1.0 - uniform01(); // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::uint64_t state_;
};

// Derives run seed i from a base seed. Identity at i = 0 so a one-member
// ensemble reproduces the plain single run; members i > 0 go through the
// splitmix64 finalizer and are statistically independent of each other.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t i) {
    if (i == 0) return base;
    return SplitMix64(base + 0x9e3779b97f4a7c15ULL * i).next_u64();
}

} // namespace mcqsim
