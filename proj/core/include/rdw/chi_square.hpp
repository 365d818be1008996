#pragma once

#include <array>

namespace rdw {

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 1;
    long total = 0;
};

// Pearson chi-square for a 2x2 contingency table, no continuity correction:
//   X^2 = N (ad - bc)^2 / ((a+b)(c+d)(a+c)(b+d))
// table[i][j]: row i, column j.  Throws AnalysisError when any marginal is zero
// and std::invalid_argument on negative cells.
ChiSquareResult chi_square_2x2(const std::array<std::array<long, 2>, 2>& table);

}  // namespace rdw
