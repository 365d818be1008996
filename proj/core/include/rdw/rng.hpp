#pragma once

#include <cstdint>
#include <random>

namespace rdw {

using Rng = std::mt19937_64;

// splitmix64 finalizer, used to whiten substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seed for substream `index` of a master seed. Every randomized component
// (trial responders, bootstrap replicates, shuffle sequences) derives its
// stream this way, so results never depend on the order in which substreams
// are consumed. The base is whitened before the index is added; otherwise
// adjacent master seeds would share almost all of their substreams
// (base+1 substream i == base substream i+1).
inline std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) + index);
}

// Uniform double in [0, 1) with 53-bit resolution. Hand-rolled because the
// standard distributions are implementation-defined and outputs here must be
// reproducible bit-for-bit.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased draw from {0, ..., n-1} by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

// Binomial(n, p) as n Bernoulli trials. O(n), fine at the per-level counts
// used in this project.
inline long binomial(Rng& rng, long n, double p) {
    long k = 0;
    for (long i = 0; i < n; ++i) {
        if (uniform01(rng) < p) ++k;
    }
    return k;
}

}  // namespace rdw
