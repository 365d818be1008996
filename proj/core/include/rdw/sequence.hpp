#pragma once

#include <cstdint>
#include <vector>

namespace rdw {

// The standard stimulus ladder: 0.5 to 1.5 in 0.1 steps.
std::vector<double> default_gain_levels();

// Fisher-Yates permutation of the multiset gains x reps. The same seed always
// yields the same order, so one sequence can be replayed across groups.
std::vector<double> shuffle_gains(std::uint64_t seed, const std::vector<double>& gains,
                                  int reps);

// Seed of the i-th stored sequence for a master seed. A fixed pool of
// kSequencePoolSize sequences is generated per configuration; participant p
// replays sequence p mod kSequencePoolSize.
inline constexpr int kSequencePoolSize = 5;
std::uint64_t sequence_seed(std::uint64_t master_seed, int index);

}  // namespace rdw
