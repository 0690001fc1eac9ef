#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace chainorder {

// All sampling uses std::mt19937_64 driven as below. The engine's output
// sequence is pinned by the C++ standard, so samples are bit-identical
// across platforms for the same seed.

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_double(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Index draw by cumulative scan; consumes exactly one engine draw. Never
// returns an index with zero probability.
inline std::size_t categorical(std::mt19937_64& g, const std::vector<double>& probs) {
    const double u = unit_double(g);
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return i;
    }
    // acc can land a hair under 1.0; fall back to the last supported index.
    for (std::size_t i = probs.size(); i-- > 0;)
        if (probs[i] > 0.0) return i;
    return 0;
}

}  // namespace chainorder
