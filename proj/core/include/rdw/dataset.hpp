#pragma once

#include <string>
#include <vector>

namespace rdw {

// Aggregated responses at one stimulus level: gain presented n times,
// answered "greater" k times.
struct ResponseLevel {
    double gain = 0.0;
    long n = 0;
    long k = 0;
};

struct ResponseDataset {
    std::vector<ResponseLevel> levels;  // sorted by gain, gains distinct

    // Sorts by gain, merges duplicate levels, checks 0 <= k <= n, n >= 1.
    // Throws IoError on structural problems.
    void normalize();

    // Count of levels with 0 < k < n. The fit needs at least two.
    int interior_levels() const;

    long total_n() const;

    // CSV with header gain,n,k.
    static ResponseDataset from_csv(const std::string& path);
    void to_csv(const std::string& path) const;
};

}  // namespace rdw
