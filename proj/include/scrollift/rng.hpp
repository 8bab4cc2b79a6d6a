#pragma once

#include <cstdint>

#include "rational.hpp"

namespace scrollift {

// Seed used by every randomized routine when the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0x5EEDCAFEF00D1234ULL;

// splitmix64: tiny, fully deterministic across platforms, which keeps the
// randomized test batteries reproducible bit for bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; the slight modulo bias is irrelevant
    // for fixture generation.
    long long int_in(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    Rat small_rat(long long lo, long long hi) { return Rat(int_in(lo, hi)); }

private:
    std::uint64_t state_;
};

} // namespace scrollift
