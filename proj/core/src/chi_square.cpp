#include "rdw/chi_square.hpp"

#include <stdexcept>

#include "rdw/errors.hpp"

namespace rdw {

ChiSquareResult chi_square_2x2(const std::array<std::array<long, 2>, 2>& table) {
    const long a = table[0][0];
    const long b = table[0][1];
    const long c = table[1][0];
    const long d = table[1][1];
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("chi_square_2x2: negative cell count");

    const double r0 = static_cast<double>(a + b);
    const double r1 = static_cast<double>(c + d);
    const double c0 = static_cast<double>(a + c);
    const double c1 = static_cast<double>(b + d);
    if (r0 == 0.0 || r1 == 0.0 || c0 == 0.0 || c1 == 0.0)
        throw AnalysisError("chi_square_2x2: zero marginal total");

    const double n = r0 + r1;
    const double det = static_cast<double>(a) * static_cast<double>(d) -
                       static_cast<double>(b) * static_cast<double>(c);
    ChiSquareResult result;
    result.statistic = n * det * det / (r0 * r1 * c0 * c1);
    result.df = 1;
    result.total = a + b + c + d;
    return result;
}

}  // namespace rdw
