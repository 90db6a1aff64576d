#pragma once

#include <cstdint>
#include <span>

namespace paramrls {

struct Interval {
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion at 95% confidence.
Interval wilson95(std::uint64_t successes, std::uint64_t trials);

/// Pearson chi-square statistic of observed counts against a uniform
/// distribution over the given number of cells.
double chi_square_uniform_stat(std::span<const std::uint64_t> observed);

/// Upper-tail p-value of the chi-square distribution.
double chi_square_p_value(double stat, unsigned dof);

} // namespace paramrls
