#include "paramrls/theory.hpp"

#include <stdexcept>

namespace paramrls::theory {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

namespace {

void check_query(const DriftQuery& q) {
    if (q.n < 1) throw std::invalid_argument("drift: n must be >= 1");
    if (q.k < 1 || q.k > q.n) throw std::invalid_argument("drift: k must satisfy 1 <= k <= n");
    if (q.s < 0 || q.s > q.n) throw std::invalid_argument("drift: s must satisfy 0 <= s <= n");
}

} // namespace

Rational drift_exact(const DriftQuery& q) {
    check_query(q);
    BigInt num = 0;
    for (long long i = q.k / 2 + 1; i <= q.k; ++i) {
        num += BigInt(2 * i - q.k) * binomial(q.s, i) * binomial(q.n - q.s, q.k - i);
    }
    return Rational(num, binomial(q.n, q.k));
}

Rational drift_closed(const DriftQuery& q) {
    check_query(q);
    if (q.k > 5) throw std::invalid_argument("drift_closed: no closed form for k > 5");
    if (q.s == 0) return 0;
    if (q.s < q.k)
        throw std::domain_error("drift_closed: closed forms require s >= k (use drift_exact)");
    const Rational n = q.n, s = q.s;
    switch (q.k) {
        case 1:
            return s / n;
        case 2:
            return 2 * s * (s - 1) / (n * (n - 1));
        case 3:
            return 3 * s * (s - 1) / (n * (n - 1));
        case 4:
            // 8 s(s-1)(s-2)(n - s/2 - 3/2) / (n..(n-3)) with the last factor cleared
            return 4 * s * (s - 1) * (s - 2) * (2 * n - s - 3) /
                   (n * (n - 1) * (n - 2) * (n - 3));
        default:
            return 5 * s * (s - 1) * (s - 2) * (2 * n - s - 3) /
                   (n * (n - 1) * (n - 2) * (n - 3));
    }
}

BigInt expected_opt_time_ridge(long long n, long long k) {
    if (n < 1) throw std::invalid_argument("expected_opt_time_ridge: n must be >= 1");
    if (k < 1) throw std::invalid_argument("expected_opt_time_ridge: k must be >= 1");
    if (2 * k > n)
        throw std::domain_error("expected_opt_time_ridge: requires k <= n/2");
    return BigInt(n / k) * binomial(n, k);
}

} // namespace paramrls::theory
