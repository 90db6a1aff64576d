#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "paramrls/theory.hpp"

using paramrls::theory::RecurrenceTable;

TEST_CASE("period 0 row is one half everywhere") {
    const RecurrenceTable t = paramrls::theory::recurrence_table(0);
    REQUIRE_EQ(t.rows.size(), 1u);
    CHECK_EQ(t.rows[0].cl1, 0.5);
    CHECK_EQ(t.rows[0].cu1, 0.5);
    CHECK_EQ(t.rows[0].cl3, 0.5);
    CHECK_EQ(t.rows[0].cu3, 0.5);
    CHECK_EQ(t.rows[0].cl5, 0.5);
    CHECK_EQ(t.rows[0].cu5, 0.5);
    CHECK_THROWS_AS(paramrls::theory::recurrence_table(-1), std::invalid_argument);
}

TEST_CASE("first two periods match hand evaluation of the recurrences") {
    const RecurrenceTable t = paramrls::theory::recurrence_table(2);
    REQUIRE_EQ(t.rows.size(), 3u);
    // period 1: lower first (from 1/2), then upper using that lower value
    CHECK_EQ(t.rows[1].cl1, 0.475);
    CHECK_EQ(t.rows[1].cu1, 0.47625);
    CHECK_EQ(t.rows[1].cl3, 0.4625);
    CHECK_EQ(t.rows[1].cu3, 0.4679140625);
    CHECK_EQ(t.rows[1].cl5, 0.4375);
    CHECK_EQ(t.rows[1].cu5, 0.4581298828125);
    // period 2 (decimal hand values; the double iteration may differ by ulps)
    CHECK_EQ(t.rows[2].cl1, doctest::Approx(0.45125).epsilon(1e-14));
    CHECK_EQ(t.rows[2].cu1, doctest::Approx(0.4536875).epsilon(1e-14));
    CHECK_EQ(t.rows[2].cl3, doctest::Approx(0.4304140625).epsilon(1e-14));
    CHECK_EQ(t.rows[2].cu3, doctest::Approx(0.44012562272033691).epsilon(1e-14));
    CHECK_EQ(t.rows[2].cl5, doctest::Approx(0.3956298828125).epsilon(1e-14));
    CHECK_EQ(t.rows[2].cu5, doctest::Approx(0.42716729391304398).epsilon(1e-14));
}

TEST_CASE("the k=1 lower column is the closed form (19/20)^i / 2") {
    const RecurrenceTable t = paramrls::theory::recurrence_table(80);
    for (int i = 0; i <= 80; ++i) {
        const double closed = 0.5 * std::pow(0.95, i);
        CHECK_EQ(t.rows[static_cast<std::size_t>(i)].cl1,
                 doctest::Approx(closed).epsilon(1e-13));
    }
}

TEST_CASE("constants decrease, stay positive, and keep lower <= upper") {
    const RecurrenceTable t = paramrls::theory::recurrence_table(80);
    REQUIRE_EQ(t.rows.size(), 81u);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        CHECK(r.cl1 > 0.0);
        CHECK(r.cl3 > 0.0);
        CHECK(r.cl5 > 0.0);
        CHECK(r.cl1 <= r.cu1);
        CHECK(r.cl3 <= r.cu3);
        CHECK(r.cl5 <= r.cu5);
        if (i > 0) {
            const auto& prev = t.rows[i - 1];
            CHECK(r.cl1 < prev.cl1);
            CHECK(r.cu1 < prev.cu1);
            CHECK(r.cl3 < prev.cl3);
            CHECK(r.cu3 < prev.cu3);
            CHECK(r.cl5 < prev.cl5);
            CHECK(r.cu5 < prev.cu5);
        }
    }
}

TEST_CASE("after 80 periods the three parameter bands are disjoint") {
    const RecurrenceTable t = paramrls::theory::recurrence_table(80);
    const auto& r = t.rows[80];
    // band order at period 80: k=1 lowest, then k=3, then k=5
    CHECK(r.cu1 < r.cl3);
    CHECK(r.cu3 < r.cl5);
    CHECK(r.cl3 - r.cu1 > 0.03);
    CHECK(r.cl5 - r.cu3 > 0.0008);
}

TEST_CASE("the double iteration tracks the exact rational recurrence") {
    const auto exact = paramrls::theory::recurrence_table_rational(12);
    const RecurrenceTable t = paramrls::theory::recurrence_table(12);
    REQUIRE_EQ(exact.size(), 13u);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const auto& e = exact[i];
        const auto& d = t.rows[i];
        CHECK_EQ(d.cl1, doctest::Approx(e.cl1.convert_to<double>()).epsilon(1e-13));
        CHECK_EQ(d.cu1, doctest::Approx(e.cu1.convert_to<double>()).epsilon(1e-13));
        CHECK_EQ(d.cl3, doctest::Approx(e.cl3.convert_to<double>()).epsilon(1e-13));
        CHECK_EQ(d.cu3, doctest::Approx(e.cu3.convert_to<double>()).epsilon(1e-13));
        CHECK_EQ(d.cl5, doctest::Approx(e.cl5.convert_to<double>()).epsilon(1e-13));
        CHECK_EQ(d.cu5, doctest::Approx(e.cu5.convert_to<double>()).epsilon(1e-13));
    }
    CHECK_THROWS_AS(paramrls::theory::recurrence_table_rational(17), std::length_error);
    CHECK_THROWS_AS(paramrls::theory::recurrence_table_rational(-1), std::invalid_argument);
}
