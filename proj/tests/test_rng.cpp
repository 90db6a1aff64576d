#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "paramrls/rng.hpp"
#include "paramrls/stats.hpp"

using paramrls::RngStream;

TEST_CASE("identical (seed, stream) pairs replay the identical sequence") {
    RngStream a(123456789u, 42u);
    RngStream b(123456789u, 42u);
    for (int i = 0; i < 64; ++i) CHECK_EQ(a.next_u64(), b.next_u64());
}

TEST_CASE("distinct stream ids and distinct seeds give distinct sequences") {
    RngStream base(7u, 0u);
    RngStream other_stream(7u, 1u);
    RngStream other_seed(8u, 0u);
    RngStream swapped(0u, 7u); // (seed, stream) must not be commutative
    int diff_stream = 0, diff_seed = 0, diff_swap = 0;
    RngStream b0(7u, 0u), b1(7u, 0u), b2(7u, 0u);
    for (int i = 0; i < 16; ++i) {
        diff_stream += b0.next_u64() != other_stream.next_u64();
        diff_seed += b1.next_u64() != other_seed.next_u64();
        diff_swap += b2.next_u64() != swapped.next_u64();
    }
    CHECK(diff_stream > 12);
    CHECK(diff_seed > 12);
    CHECK(diff_swap > 12);
    (void)base;
}

TEST_CASE("forked child streams do not depend on parent draw position") {
    RngStream parent(99u, 5u);
    RngStream child_before = parent.fork(3u);
    for (int i = 0; i < 1000; ++i) parent.next_u64();
    RngStream child_after = parent.fork(3u);
    for (int i = 0; i < 32; ++i) CHECK_EQ(child_before.next_u64(), child_after.next_u64());

    // different child ids diverge
    RngStream c0 = parent.fork(0u);
    RngStream c1 = parent.fork(1u);
    int diff = 0;
    for (int i = 0; i < 16; ++i) diff += c0.next_u64() != c1.next_u64();
    CHECK(diff > 12);
}

TEST_CASE("uniform_below stays in range and covers every residue") {
    RngStream rng(2024u, 0u);
    for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 100ull}) {
        std::set<std::uint64_t> seen;
        for (int i = 0; i < 5000; ++i) {
            const std::uint64_t v = rng.uniform_below(bound);
            CHECK(v < bound);
            seen.insert(v);
        }
        CHECK_EQ(seen.size(), bound <= 5000 ? bound : 5000);
    }
    for (int i = 0; i < 100; ++i) CHECK_EQ(rng.uniform_below(1), 0u);
}

TEST_CASE("uniform_below(10) is uniform by chi-square") {
    RngStream rng(31337u, 7u);
    std::vector<std::uint64_t> counts(10, 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[rng.uniform_below(10)];
    const double stat = paramrls::chi_square_uniform_stat(counts);
    const double p = paramrls::chi_square_p_value(stat, 9);
    CHECK(p > 1e-4);
}

TEST_CASE("uniform_int covers the inclusive range") {
    RngStream rng(555u, 1u);
    std::set<long long> seen;
    double sum = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        const long long v = rng.uniform_int(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        seen.insert(v);
        sum += static_cast<double>(v);
    }
    CHECK_EQ(seen.size(), 7u);
    CHECK(std::abs(sum / draws) < 0.06); // sd = 2, so 4 sigma of the mean
}

TEST_CASE("next_unit lies in [0,1) with the right mean") {
    RngStream rng(8080u, 2u);
    double sum = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / draws - 0.5) < 0.005);
}

TEST_CASE("coin is fair") {
    RngStream rng(4242u, 3u);
    int heads = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) heads += rng.coin();
    CHECK(std::abs(heads / static_cast<double>(draws) - 0.5) < 0.02);
}

TEST_CASE("streams echo their identifiers") {
    RngStream rng(11u, 22u);
    CHECK_EQ(rng.master_seed(), 11u);
    CHECK_EQ(rng.stream_id(), 22u);
}
