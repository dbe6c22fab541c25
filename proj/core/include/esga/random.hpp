#pragma once

#include <cstdint>
#include <random>

namespace esga {

/// The single generator threaded through every stochastic choice; a fixed
/// seed makes a full run reproducible.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound).
inline int uniform_index(Rng& rng, int bound) {
    return std::uniform_int_distribution<int>(0, bound - 1)(rng);
}

inline bool coin_flip(Rng& rng) {
    return (rng() >> 63) != 0;
}

} // namespace esga
