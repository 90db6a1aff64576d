#include "paramrls/problem.hpp"

#include <bit>
#include <stdexcept>

namespace paramrls {

Problem::Problem(ProblemKind kind, std::size_t n, BitString shift)
    : kind_(kind), n_(n), shift_(std::move(shift)) {
    if (n_ == 0) throw std::invalid_argument("Problem: n must be >= 1");
    if (shift_.size() != n_) throw std::invalid_argument("Problem: shift length must equal n");
    if (kind_ == ProblemKind::one_max) one_max_optimum_ = shift_.complement();
}

Problem Problem::one_max(std::size_t n) { return {ProblemKind::one_max, n, BitString::zeros(n)}; }
Problem Problem::one_max(std::size_t n, BitString shift) {
    return {ProblemKind::one_max, n, std::move(shift)};
}
Problem Problem::ridge_star(std::size_t n) {
    return {ProblemKind::ridge_star, n, BitString::zeros(n)};
}
Problem Problem::ridge_star(std::size_t n, BitString shift) {
    return {ProblemKind::ridge_star, n, std::move(shift)};
}

const BitString& Problem::one_max_optimum() const {
    if (kind_ != ProblemKind::one_max)
        throw std::logic_error("one_max_optimum: not a OneMax instance");
    return one_max_optimum_;
}

long long Problem::fitness(const BitString& x) const {
    if (x.size() != n_) throw std::invalid_argument("fitness: solution length must equal n");
    if (kind_ == ProblemKind::one_max) {
        return static_cast<long long>(n_) -
               static_cast<long long>(hamming_distance(x, one_max_optimum_));
    }
    // Ridge*: y = x XOR a must be 1^i 0^(n-i); count leading ones word-wise
    // and verify the rest is all zeros.
    const auto xw = x.words();
    const auto aw = shift_.words();
    std::size_t i = 0;
    std::size_t w = 0;
    for (; w < xw.size(); ++w) {
        const std::uint64_t y = xw[w] ^ aw[w];
        if (y == ~std::uint64_t{0}) {
            i += 64;
            continue;
        }
        const auto ones = static_cast<std::size_t>(std::countr_one(y));
        i += ones;
        // everything above the leading-ones run must be zero in this word...
        if ((y >> ones) != 0 && ones < 64) return -1;
        ++w;
        break;
    }
    // ...and all later words must be zero.
    for (; w < xw.size(); ++w)
        if ((xw[w] ^ aw[w]) != 0) return -1;
    if (i > n_) i = n_; // full-ones tail word padding cannot occur; guard anyway
    return static_cast<long long>(i);
}

BitString Problem::initial_solution(RngStream& rng) const {
    if (kind_ == ProblemKind::ridge_star) return shift_;
    return BitString::random(n_, rng);
}

long long Problem::reachable_optimum(std::size_t k) const {
    if (k < 1 || k > n_)
        throw std::invalid_argument("reachable_optimum: k must satisfy 1 <= k <= n");
    if (kind_ == ProblemKind::one_max) return static_cast<long long>(n_);
    return static_cast<long long>((n_ / k) * k);
}

bool Problem::is_optimal(const BitString& x, std::size_t k) const {
    return fitness(x) == reachable_optimum(k);
}

} // namespace paramrls
