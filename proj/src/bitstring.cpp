#include "paramrls/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace paramrls {

void BitString::clear_tail() {
    if (n_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
}

BitString BitString::ones(std::size_t n) {
    BitString b(n);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.clear_tail();
    return b;
}

BitString BitString::random(std::size_t n, RngStream& rng) {
    BitString b(n);
    for (auto& w : b.words_) w = rng.next_u64();
    b.clear_tail();
    return b;
}

BitString BitString::from_string(std::string_view bits) {
    BitString b(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') b.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("BitString::from_string: expected only 0/1");
    }
    return b;
}

BitString BitString::from_hex(std::string_view hex, std::size_t n) {
    const std::size_t want = (n + 3) / 4;
    if (hex.size() != want) {
        throw std::invalid_argument("BitString::from_hex: expected " + std::to_string(want) +
                                    " hex digits for length " + std::to_string(n));
    }
    BitString b(n);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        int v = 0;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = 10 + (c - 'a');
        else if (c >= 'A' && c <= 'F') v = 10 + (c - 'A');
        else throw std::invalid_argument("BitString::from_hex: invalid hex digit");
        for (int j = 0; j < 4; ++j) {
            const std::size_t pos = 4 * d + j;
            const bool bit = (v >> (3 - j)) & 1;
            if (pos < n) {
                if (bit) b.set(pos, true);
            } else if (bit) {
                throw std::invalid_argument("BitString::from_hex: nonzero padding bits");
            }
        }
    }
    return b;
}

void BitString::set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= mask;
    else words_[i >> 6] &= ~mask;
}

std::uint64_t BitString::count_ones() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

BitString BitString::xor_with(const BitString& other) const {
    if (n_ != other.n_) throw std::invalid_argument("BitString::xor_with: length mismatch");
    BitString out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] ^ other.words_[i];
    return out;
}

BitString BitString::complement() const {
    BitString out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.clear_tail();
    return out;
}

std::string BitString::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::size_t nd = (n_ + 3) / 4;
    std::string s(nd, '0');
    for (std::size_t d = 0; d < nd; ++d) {
        int v = 0;
        for (int j = 0; j < 4; ++j) {
            const std::size_t pos = 4 * d + j;
            if (pos < n_ && bit(pos)) v |= 1 << (3 - j);
        }
        s[d] = digits[v];
    }
    return s;
}

std::size_t hamming_distance(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t c = 0;
    const auto xw = x.words();
    const auto yw = y.words();
    for (std::size_t i = 0; i < xw.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(xw[i] ^ yw[i]));
    return c;
}

BitString flip_k_distinct(const BitString& x, std::size_t k, RngStream& rng) {
    if (k < 1 || k > x.size())
        throw std::invalid_argument("flip_k_distinct: k must satisfy 1 <= k <= n");
    KSubsetSampler sampler(x.size());
    BitString out = x;
    for (auto p : sampler.draw(k, rng)) out.flip(p);
    return out;
}

BitString flip_positions(const BitString& x, std::span<const std::size_t> positions) {
    BitString out = x;
    for (auto p : positions) {
        if (p >= x.size()) throw std::invalid_argument("flip_positions: position out of range");
        out.flip(p);
    }
    return out;
}

KSubsetSampler::KSubsetSampler(std::size_t n) : idx_(n) {
    for (std::size_t i = 0; i < n; ++i) idx_[i] = static_cast<std::uint32_t>(i);
}

std::span<const std::uint32_t> KSubsetSampler::draw(std::size_t k, RngStream& rng) {
    const std::size_t n = idx_.size();
    if (k < 1 || k > n) throw std::invalid_argument("KSubsetSampler::draw: k out of range");
    // Partial Fisher-Yates. idx_ stays a permutation of {0..n-1} across
    // draws, so each draw's first k entries are a uniform k-subset.
    std::uint32_t mn = ~std::uint32_t{0}, mx = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t r = j + static_cast<std::size_t>(rng.uniform_below(n - j));
        std::swap(idx_[j], idx_[r]);
        mn = std::min(mn, idx_[j]);
        mx = std::max(mx, idx_[j]);
    }
    last_min_ = mn;
    last_max_ = mx;
    return {idx_.data(), k};
}

} // namespace paramrls
