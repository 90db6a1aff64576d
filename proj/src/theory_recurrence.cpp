#include "paramrls/theory.hpp"

#include <stdexcept>

namespace paramrls::theory {

RecurrenceTable recurrence_table(int periods) {
    if (periods < 0) throw std::invalid_argument("recurrence_table: periods must be >= 0");
    RecurrenceTable t;
    t.periods = periods;
    t.rows.reserve(static_cast<std::size_t>(periods) + 1);
    RecurrenceTable::Row row{0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
    t.rows.push_back(row);
    for (int i = 1; i <= periods; ++i) {
        row.cl1 = row.cl1 - row.cl1 / 20.0;
        row.cl3 = row.cl3 - 3.0 * row.cl3 * row.cl3 / 20.0;
        row.cl5 = row.cl5 - 10.0 * row.cl5 * row.cl5 * row.cl5 / 20.0;
        // upper constants consume the current period's lower value
        row.cu1 = row.cu1 - row.cl1 / 20.0;
        row.cu3 = row.cu3 - 3.0 * row.cl3 * row.cl3 / 20.0;
        row.cu5 = row.cu5 - 10.0 * row.cl5 * row.cl5 * row.cl5 / 20.0;
        t.rows.push_back(row);
    }
    return t;
}

std::vector<RationalRecurrenceRow> recurrence_table_rational(int periods) {
    if (periods < 0) throw std::invalid_argument("recurrence_table_rational: periods must be >= 0");
    if (periods > 16)
        throw std::length_error(
            "recurrence_table_rational: rational operands grow geometrically; limited to 16 periods");
    std::vector<RationalRecurrenceRow> rows;
    rows.reserve(static_cast<std::size_t>(periods) + 1);
    const Rational half(1, 2);
    RationalRecurrenceRow row{half, half, half, half, half, half};
    rows.push_back(row);
    for (int i = 1; i <= periods; ++i) {
        row.cl1 -= row.cl1 / 20;
        row.cl3 -= 3 * row.cl3 * row.cl3 / 20;
        row.cl5 -= 10 * row.cl5 * row.cl5 * row.cl5 / 20;
        row.cu1 -= row.cl1 / 20;
        row.cu3 -= 3 * row.cl3 * row.cl3 / 20;
        row.cu5 -= 10 * row.cl5 * row.cl5 * row.cl5 / 20;
        rows.push_back(row);
    }
    return rows;
}

} // namespace paramrls::theory
