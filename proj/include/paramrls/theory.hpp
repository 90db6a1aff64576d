#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace paramrls::theory {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

/// Query for the one-step fitness drift of RLS_k on OneMax at distance s.
struct DriftQuery {
    long long n = 0; // problem size, >= 1
    long long k = 0; // bits flipped per step, 1 <= k <= n
    long long s = 0; // current distance to the optimum, 0 <= s <= n
};

/**
 * Exact drift from the hypergeometric sum
 *   sum_{i=floor(k/2)+1}^{k} (2i-k) C(s,i) C(n-s,k-i) / C(n,k),
 * i.e. the expected accepted fitness gain of one RLS_k step.
 */
Rational drift_exact(const DriftQuery& q);

/**
 * Closed forms for k <= 5, valid for s >= k (and s = 0, where the drift is
 * zero). Throws std::invalid_argument for k > 5 and std::domain_error for
 * 0 < s < k, where no closed form is claimed.
 */
Rational drift_closed(const DriftQuery& q);

/**
 * Interval constants for the distance of RLS_k (k = 1, 3, 5) to the OneMax
 * optimum after i periods of n/20 iterations, starting from n/2: each period
 * updates a lower and an upper constant
 *   lower: c <- c - D_k(c)/20        (D_1(c)=c, D_3(c)=3c^2, D_5(c)=10c^3)
 *   upper: c <- c - D_k(lower_c)/20  using the current period's lower value.
 * Doubles throughout, matching the published 17-digit provenance.
 */
struct RecurrenceTable {
    struct Row {
        double cl1, cu1, cl3, cu3, cl5, cu5;
    };
    int periods = 0;
    std::vector<Row> rows; // rows[i] = constants after i periods; rows[0] = 1/2 everywhere
};

RecurrenceTable recurrence_table(int periods);

/// Same recurrences in exact rational arithmetic, for cross-checking the
/// double iteration. The k=3 and k=5 numerators double/triple in size per
/// period, so this is only tractable for small period counts.
struct RationalRecurrenceRow {
    Rational cl1, cu1, cl3, cu3, cl5, cu5;
};
std::vector<RationalRecurrenceRow> recurrence_table_rational(int periods);

/**
 * Race between two processes A and B over t steps: in each step exactly one
 * of them advances (A by alpha with probability p_a(1-p_b), B by beta with
 * probability p_b(1-p_a)) or neither does. q is the per-step probability
 * that someone advances, and q_a, q_b split it between the two.
 * Requires p_b <= p_a.
 */
struct RaceModel {
    double p_a = 0.0;
    double p_b = 0.0;
    double alpha = 1.0;
    double beta = 1.0;
    std::uint64_t t = 0;

    double q() const { return p_a * (1.0 - p_b) + (1.0 - p_a) * p_b; }
    double q_a() const;
    double q_b() const;
};

/**
 * Upper bound on P(B's total progress >= A's):
 *   exp(-q t (1 - 2 q_b^{alpha/(alpha+beta)} q_a^{beta/(alpha+beta)})).
 * May exceed 1, in which case it is vacuous.
 */
double race_bound(const RaceModel& m);

/**
 * Exact P(B's total progress >= A's) under the race model:
 *   sum_l P(Bin(t,q)=l) P(Bin(l,q_b) >= ceil(l alpha/(alpha+beta))),
 * evaluated with log-domain terms and compensated summation (relative error
 * well below 1e-12 for t <= 10^4). Throws std::length_error for t > 10^4.
 */
double race_exact(const RaceModel& m);

/// race_exact for every horizon 0..t_max in one pass (shared tail table).
std::vector<double> race_exact_curve(const RaceModel& m, std::uint64_t t_max);

/**
 * Expected optimisation time of RLS_k on Ridge*: floor(n/k) * C(n,k),
 * exact. Throws std::domain_error when k > n/2.
 */
BigInt expected_opt_time_ridge(long long n, long long k);

/**
 * Expected first hitting time of state 1 for the lazy random walk on
 * {1..phi} that moves +-1 with probability 1/4 each and otherwise stays
 * (boundary-blocked moves become self-loops). Solves the linear system in
 * exact rationals. Bounded above by 2 phi^2.
 */
Rational lazy_walk_hitting_time(int phi, int start);

} // namespace paramrls::theory
