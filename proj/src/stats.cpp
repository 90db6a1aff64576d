#include "paramrls/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace paramrls {

Interval wilson95(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson95: trials must be >= 1");
    if (successes > trials) throw std::invalid_argument("wilson95: successes > trials");
    constexpr double z = 1.959963984540054; // two-sided 95% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // at the boundaries the limits are exactly the point estimate, but the
    // radical leaves ~1 ulp of noise; pin them so lo <= p <= hi always holds
    const double lo = successes == 0 ? 0.0 : center - half;
    const double hi = successes == trials ? 1.0 : center + half;
    return {p, lo, hi};
}

double chi_square_uniform_stat(std::span<const std::uint64_t> observed) {
    if (observed.size() < 2)
        throw std::invalid_argument("chi_square_uniform_stat: need at least 2 cells");
    std::uint64_t total = 0;
    for (auto c : observed) total += c;
    if (total == 0) throw std::invalid_argument("chi_square_uniform_stat: empty sample");
    const double expected = static_cast<double>(total) / static_cast<double>(observed.size());
    double stat = 0.0;
    for (auto c : observed) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

double chi_square_p_value(double stat, unsigned dof) {
    if (dof == 0) throw std::invalid_argument("chi_square_p_value: dof must be >= 1");
    if (stat <= 0.0) return 1.0;
    boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

} // namespace paramrls
