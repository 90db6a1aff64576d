#pragma once

#include <cstdint>

namespace paramrls {

/**
 * Deterministic per-task random stream.
 *
 * A stream is identified by (master_seed, stream_id). Identical pairs always
 * reproduce the identical byte stream; distinct stream_ids give independent
 * streams. Replicated experiments key their stream on the replicate index,
 * which makes results independent of scheduling and worker count.
 *
 * Generator: xoshiro256** seeded through splitmix64 mixing of the pair.
 */
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Unbiased draw from [0, bound); bound must be >= 1.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform integer in [lo, hi] inclusive; requires lo <= hi.
    long long uniform_int(long long lo, long long hi);

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit();

    /// Fair coin.
    bool coin() { return (next_u64() >> 63) != 0; }

    /**
     * Child stream derived from this stream's identity and child_id.
     * Independent of how much the parent has been consumed, so forked
     * substreams are stable regardless of draw order.
     */
    RngStream fork(std::uint64_t child_id) const;

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::uint64_t identity_;
    std::uint64_t s_[4];
};

} // namespace paramrls
