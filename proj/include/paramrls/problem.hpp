#pragma once

#include <cstdint>

#include "paramrls/bitstring.hpp"
#include "paramrls/rng.hpp"

namespace paramrls {

enum class ProblemKind { one_max, ridge_star };

/**
 * A benchmark instance: OneMax or Ridge* of length n, optionally composed
 * with an XOR shift a, i.e. f_a(x) = f(x XOR a).
 *
 * Ridge*(y) = i when y = 1^i 0^(n-i) (the all-zeros string scores 0) and -1
 * for every string off that path. OneMax_a(x) counts the positions agreeing
 * with the instance optimum z = complement(a).
 */
class Problem {
public:
    static Problem one_max(std::size_t n);
    static Problem one_max(std::size_t n, BitString shift);
    static Problem ridge_star(std::size_t n);
    static Problem ridge_star(std::size_t n, BitString shift);

    ProblemKind kind() const { return kind_; }
    std::size_t n() const { return n_; }
    const BitString& shift() const { return shift_; }

    /// Optimum of a OneMax instance (complement of the shift).
    const BitString& one_max_optimum() const;

    /// Throws std::invalid_argument if x has the wrong length.
    long long fitness(const BitString& x) const;

    /// Ridge*: the shifted path origin. OneMax: a fresh uniform string.
    BitString initial_solution(RngStream& rng) const;

    /**
     * Best fitness RLS_k can reach: floor(n/k)*k on Ridge* (the deepest path
     * point reachable in k-steps from the origin), n on OneMax. Throws
     * std::invalid_argument unless 1 <= k <= n.
     */
    long long reachable_optimum(std::size_t k) const;

    /// Exact test fitness(x) == reachable_optimum(k).
    bool is_optimal(const BitString& x, std::size_t k) const;

private:
    Problem(ProblemKind kind, std::size_t n, BitString shift);

    ProblemKind kind_;
    std::size_t n_;
    BitString shift_;
    BitString one_max_optimum_; // only populated for OneMax
};

} // namespace paramrls
