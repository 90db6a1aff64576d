#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paramrls/rng.hpp"

namespace paramrls {

/**
 * Fixed-length bit string packed into 64-bit words. The length is set at
 * construction and never changes; individual bits are mutable.
 */
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitString zeros(std::size_t n) { return BitString(n); }
    static BitString ones(std::size_t n);
    static BitString random(std::size_t n, RngStream& rng);

    /// Parse from a "0101..." literal.
    static BitString from_string(std::string_view bits);

    /**
     * Parse from hex. The encoding reads the bit string as binary text,
     * zero-padded on the right to a multiple of four, one hex digit per
     * group, most significant bit first ("1010" -> "a"). The hex string
     * must have exactly ceil(n/4) digits.
     */
    static BitString from_hex(std::string_view hex, std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::uint64_t count_ones() const;

    BitString xor_with(const BitString& other) const;
    BitString complement() const;

    std::string to_string() const;
    std::string to_hex() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    void clear_tail();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Hamming distance; throws std::invalid_argument on length mismatch.
std::size_t hamming_distance(const BitString& x, const BitString& y);

/**
 * Return a copy of x with exactly k distinct positions flipped, the set of
 * positions uniform over all k-subsets of {0..n-1}. Throws
 * std::invalid_argument unless 1 <= k <= n.
 */
BitString flip_k_distinct(const BitString& x, std::size_t k, RngStream& rng);

/// Flip an explicit list of positions (used to make mutation testable).
BitString flip_positions(const BitString& x, std::span<const std::size_t> positions);

/**
 * Reusable uniform k-subset sampler over {0..n-1} via partial Fisher-Yates;
 * O(k) per draw after O(n) setup. The returned span is valid until the next
 * draw. Also reports min and max of the drawn subset, which lets callers
 * test whether the subset is exactly a contiguous window.
 */
class KSubsetSampler {
public:
    explicit KSubsetSampler(std::size_t n);

    std::span<const std::uint32_t> draw(std::size_t k, RngStream& rng);

    std::uint32_t last_min() const { return last_min_; }
    std::uint32_t last_max() const { return last_max_; }

private:
    std::vector<std::uint32_t> idx_;
    std::uint32_t last_min_ = 0;
    std::uint32_t last_max_ = 0;
};

} // namespace paramrls
