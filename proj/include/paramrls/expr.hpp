#pragma once

#include <cstdint>
#include <string_view>

namespace paramrls {

/**
 * Evaluate a size expression over the problem dimension n.
 *
 * Grammar: integers and decimals, the variable n, + - * /, unary minus,
 * parentheses, and the functions floor(), ln(), sqrt(). Examples: "4*n",
 * "floor(0.03*n)", "n*n/2", "floor(n*ln(n)/2)".
 */
double eval_expr(std::string_view expr, double n);

/**
 * eval_expr for quantities that must be non-negative integers (cutoffs,
 * run counts, ...). Fractional results are floored; negative or
 * non-finite results raise std::invalid_argument.
 */
std::uint64_t eval_size_expr(std::string_view expr, std::uint64_t n);

} // namespace paramrls
