#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace fsolink {

// PCG32 (O'Neill). Chosen over std:: engines because the reproducibility
// contract is (seed, stream_id) -> identical draws on any platform, and
// std:: distributions are not bit-stable across standard libraries.
// Period 2^64 per stream; odd increments give 2^63 independent streams.
class Pcg32 {
  public:
    Pcg32(std::uint64_t seed, std::uint64_t stream_id) {
        inc_ = (stream_id << 1u) | 1u;
        state_ = 0u;
        next();
        state_ += seed;
        next();
    }

    std::uint32_t next() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // 53-bit uniform in (0, 1]; safe as a log() argument
    double uniform01() {
        const std::uint64_t hi = static_cast<std::uint64_t>(next()) >> 5;   // 27 bits
        const std::uint64_t lo = static_cast<std::uint64_t>(next()) >> 6;   // 26 bits
        const std::uint64_t mantissa = (hi << 26) | lo;
        return (static_cast<double>(mantissa) + 1.0) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 1;
};

struct NormalPair {
    double z0;
    double z1;
};

// Box-Muller, consuming exactly two uniforms; deterministic draw order
inline NormalPair normal_pair(Pcg32& rng) {
    const double u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(ang), r * std::sin(ang)};
}

}  // namespace fsolink
