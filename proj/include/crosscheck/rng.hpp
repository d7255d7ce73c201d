#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace crosscheck {

// All randomized code in this library draws through these helpers instead of
// <random> distributions, whose output is implementation-defined. mt19937_64
// itself is fully specified, so identical seeds give identical streams on any
// conforming standard library.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// splitmix64 finalizer; used to derive independent stream seeds from
// (seed, stream_index) pairs.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double rand_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n). n must be positive. The modulo bias is negligible
// for the sizes used here and the result is identical everywhere.
inline std::size_t rand_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = rand_index(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace crosscheck
