#include "paramrls/rng.hpp"

#include <stdexcept>

namespace paramrls {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

// splitmix64 finalizer; bijective avalanche mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t splitmix_next(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    return mix64(x);
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id) {
    // Both inputs go through independent bijective mixes before being
    // combined, so for a fixed master seed every stream_id yields a distinct
    // generator state.
    std::uint64_t a = mix64(master_seed + 0x9E3779B97F4A7C15ULL);
    std::uint64_t b = mix64(stream_id + 0xD1B54A32D192ED03ULL);
    std::uint64_t x = a ^ rotl(b, 32);
    identity_ = mix64(x + 0x8CB92BA72F3D8DD7ULL);
    for (auto& w : s_) w = splitmix_next(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1; // xoshiro needs nonzero state
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be >= 1");
    // Lemire's nearly-divisionless rejection method.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (lo < threshold) {
            m = static_cast<unsigned __int128>(next_u64()) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

long long RngStream::uniform_int(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: lo must be <= hi");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<long long>(uniform_below(span));
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RngStream RngStream::fork(std::uint64_t child_id) const {
    return RngStream(identity_, child_id);
}

} // namespace paramrls
