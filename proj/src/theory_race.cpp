#include "paramrls/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace paramrls::theory {

namespace {

constexpr std::uint64_t kMaxHorizon = 10000;

void check_model(const RaceModel& m) {
    if (!(m.p_a >= 0.0 && m.p_a <= 1.0) || !(m.p_b >= 0.0 && m.p_b <= 1.0))
        throw std::invalid_argument("race: p_a and p_b must lie in [0, 1]");
    if (m.p_b > m.p_a) throw std::domain_error("race: requires p_b <= p_a");
    if (!(m.alpha >= 0.0) || !(m.beta >= 0.0) || m.alpha + m.beta <= 0.0)
        throw std::invalid_argument("race: step sizes must be >= 0 and not both zero");
}

// Kahan-compensated accumulator.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Threshold ceil(l * alpha / (alpha + beta)), computed exactly for integral
// step sizes and in long double otherwise.
std::uint64_t win_threshold(std::uint64_t l, double alpha, double beta) {
    const auto ai = static_cast<std::uint64_t>(alpha);
    const auto bi = static_cast<std::uint64_t>(beta);
    if (static_cast<double>(ai) == alpha && static_cast<double>(bi) == beta) {
        return (l * ai + (ai + bi) - 1) / (ai + bi);
    }
    const long double r = static_cast<long double>(l) * alpha / (alpha + beta);
    return static_cast<std::uint64_t>(std::ceil(r));
}

} // namespace

double RaceModel::q_a() const {
    const double qq = q();
    return qq == 0.0 ? 0.0 : p_a * (1.0 - p_b) / qq;
}

double RaceModel::q_b() const {
    const double qq = q();
    return qq == 0.0 ? 0.0 : p_b * (1.0 - p_a) / qq;
}

double race_bound(const RaceModel& m) {
    check_model(m);
    const double qq = m.q();
    const double ea = m.alpha / (m.alpha + m.beta);
    const double eb = m.beta / (m.alpha + m.beta);
    // pow(0, 0) == 1 covers the degenerate exponents
    const double g = 2.0 * std::pow(m.q_b(), ea) * std::pow(m.q_a(), eb);
    return std::exp(-qq * static_cast<double>(m.t) * (1.0 - g));
}

std::vector<double> race_exact_curve(const RaceModel& m, std::uint64_t t_max) {
    check_model(m);
    if (t_max > kMaxHorizon)
        throw std::length_error("race_exact: horizon limited to t <= 10^4");

    std::vector<double> out(t_max + 1, 1.0);
    const double qq = m.q();
    if (qq == 0.0) return out; // nobody ever advances: B trivially keeps up

    const double qb = m.q_b();
    const double qa = m.q_a();

    // log-factorials up to t_max
    std::vector<double> lfact(t_max + 1, 0.0);
    for (std::uint64_t i = 1; i <= t_max; ++i)
        lfact[i] = lfact[i - 1] + std::log(static_cast<double>(i));
    const auto lchoose = [&](std::uint64_t n, std::uint64_t k) {
        return lfact[n] - lfact[k] - lfact[n - k];
    };

    // tail[l] = P(Bin(l, q_b) >= ceil(l alpha/(alpha+beta)))
    std::vector<double> tail(t_max + 1, 1.0);
    if (qb == 0.0) {
        for (std::uint64_t l = 0; l <= t_max; ++l)
            tail[l] = win_threshold(l, m.alpha, m.beta) == 0 ? 1.0 : 0.0;
    } else {
        const double lqb = std::log(qb);
        const double lqa = std::log(qa); // q > 0 implies q_a > 0
        for (std::uint64_t l = 1; l <= t_max; ++l) {
            const std::uint64_t lo = win_threshold(l, m.alpha, m.beta);
            Kahan acc;
            for (std::uint64_t i = lo; i <= l; ++i) {
                acc.add(std::exp(lchoose(l, i) + static_cast<double>(i) * lqb +
                                 static_cast<double>(l - i) * lqa));
            }
            tail[l] = std::min(acc.sum, 1.0);
        }
    }

    // mix over the number of advancing steps for each horizon
    const double lq = std::log(qq);
    const double l1q = qq == 1.0 ? -INFINITY : std::log1p(-qq);
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        Kahan acc;
        for (std::uint64_t l = 0; l <= t; ++l) {
            double lp;
            if (qq == 1.0) {
                if (l != t) continue;
                lp = 0.0;
            } else {
                lp = lchoose(t, l) + static_cast<double>(l) * lq +
                     static_cast<double>(t - l) * l1q;
            }
            acc.add(std::exp(lp) * tail[l]);
        }
        out[t] = std::min(acc.sum, 1.0);
    }
    return out;
}

double race_exact(const RaceModel& m) {
    return race_exact_curve(m, m.t).back();
}

} // namespace paramrls::theory
