#pragma once

#include <cstdint>

namespace qslab {

/// SplitMix64. The exact update is part of the library's reproducibility
/// contract: workload generators and probe pickers are defined in terms of
/// this sequence, so golden files can be regenerated in any language.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit constexpr SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    constexpr std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound) by modulo. The small bias is accepted
    /// in exchange for being trivial to reproduce elsewhere.
    constexpr std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

/// Stable mix for deriving per-call seeds from a base seed plus salt values.
constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
    SplitMix64 g(a ^ (b * 0x9E3779B97F4A7C15ULL) ^ (c * 0xC2B2AE3D27D4EB4FULL));
    return g.next();
}

}  // namespace qslab
