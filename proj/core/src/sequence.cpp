#include "rdw/sequence.hpp"

#include <stdexcept>

#include "rdw/rng.hpp"

namespace rdw {

std::vector<double> default_gain_levels() {
    std::vector<double> levels;
    levels.reserve(11);
    for (int i = 5; i <= 15; ++i) levels.push_back(i / 10.0);
    return levels;
}

std::vector<double> shuffle_gains(std::uint64_t seed, const std::vector<double>& gains,
                                  int reps) {
    if (gains.empty()) throw std::invalid_argument("shuffle_gains: gains must be non-empty");
    if (reps < 1) throw std::invalid_argument("shuffle_gains: reps must be >= 1");

    std::vector<double> sequence;
    sequence.reserve(gains.size() * static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        sequence.insert(sequence.end(), gains.begin(), gains.end());
    }

    Rng rng(seed);
    for (std::size_t i = sequence.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i + 1));
        std::swap(sequence[i], sequence[j]);
    }
    return sequence;
}

std::uint64_t sequence_seed(std::uint64_t master_seed, int index) {
    // Domain-separated from the per-participant responder streams.
    return substream_seed(master_seed ^ 0xc3a5c85c97cb3127ull,
                          static_cast<std::uint64_t>(index));
}

}  // namespace rdw
