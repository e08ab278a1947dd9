#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace bipramsey {

/// Seeded generator with a fixed algorithm; all sampling in the toolkit goes
/// through the helpers below so outputs are identical across standard libraries.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Fisher-Yates with the portable draw above.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

/// Uniform k-subset of {0..n-1}, returned sorted.
std::vector<int> random_subset(Rng& rng, int n, int k);

}  // namespace bipramsey
