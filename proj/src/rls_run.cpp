#include "paramrls/rls_run.hpp"

#include <stdexcept>

namespace paramrls {

namespace {

// Ridge* runs started on the path never leave it: from 1^i 0^(n-i) the only
// acceptable offspring is the one flipping exactly the window of the next k
// path positions (any other k-flip scores -1 or retracts, both rejected).
// The state therefore reduces to the path position.
RunRecord run_ridge(const Problem& p, std::size_t k, std::uint64_t kappa, RngStream& rng,
                    const RunOptions& opts, long long start_fitness) {
    RunRecord rec;
    const long long reachable = p.reachable_optimum(k);
    long long pos = start_fitness;
    rec.final_fitness = pos;
    if (opts.record_trajectory) rec.trajectory.emplace_back(0, pos);
    if (pos == reachable) {
        rec.optimum_hit_iter = 0;
        return rec;
    }

    KSubsetSampler sampler(p.n());
    for (std::uint64_t iter = 1; iter <= kappa; ++iter) {
        rec.iterations_executed = iter;
        sampler.draw(k, rng);
        // k distinct positions lie in a window of width k iff they are
        // exactly that window.
        if (sampler.last_min() == static_cast<std::uint32_t>(pos) &&
            sampler.last_max() == static_cast<std::uint32_t>(pos) + k - 1) {
            pos += static_cast<long long>(k);
            rec.last_improvement_iter = iter;
            if (opts.record_trajectory) rec.trajectory.emplace_back(iter, pos);
            if (pos == reachable) {
                rec.optimum_hit_iter = iter;
                break;
            }
        }
    }
    rec.final_fitness = pos;
    return rec;
}

RunRecord run_one_max(const Problem& p, std::size_t k, std::uint64_t kappa, RngStream& rng,
                      const RunOptions& opts, const BitString& initial) {
    RunRecord rec;
    const auto n = static_cast<long long>(p.n());
    // Track the disagreement mask d = x XOR z; fitness = n - |d| and a flip
    // at position q changes fitness by +1 iff d has a one at q.
    BitString d = initial.xor_with(p.one_max_optimum());
    long long dist = static_cast<long long>(d.count_ones());
    long long fitness = n - dist;
    rec.final_fitness = fitness;
    if (opts.record_trajectory) rec.trajectory.emplace_back(0, fitness);
    if (dist == 0) {
        rec.optimum_hit_iter = 0;
        return rec;
    }

    KSubsetSampler sampler(p.n());
    for (std::uint64_t iter = 1; iter <= kappa; ++iter) {
        rec.iterations_executed = iter;
        const auto picks = sampler.draw(k, rng);
        long long delta = 0;
        for (auto q : picks) delta += d.bit(q) ? 1 : -1;
        if (delta < 0) continue; // offspring strictly worse, rejected
        for (auto q : picks) d.flip(q);
        if (delta > 0) {
            fitness += delta;
            dist -= delta;
            rec.last_improvement_iter = iter;
            if (opts.record_trajectory) rec.trajectory.emplace_back(iter, fitness);
            if (dist == 0) {
                rec.optimum_hit_iter = iter;
                break;
            }
        }
    }
    rec.final_fitness = fitness;
    return rec;
}

} // namespace

RunRecord run_rlsk(const Problem& p, std::size_t k, std::uint64_t kappa, RngStream& rng,
                   const RunOptions& opts) {
    if (k < 1 || k > p.n()) throw std::invalid_argument("run_rlsk: k must satisfy 1 <= k <= n");
    if (opts.initial && opts.initial->size() != p.n())
        throw std::invalid_argument("run_rlsk: initial solution length must equal n");

    if (p.kind() == ProblemKind::ridge_star) {
        const long long start =
            opts.initial ? p.fitness(*opts.initial) : p.fitness(p.initial_solution(rng));
        if (start < 0)
            throw std::invalid_argument("run_rlsk: Ridge* runs must start on the path");
        return run_ridge(p, k, kappa, rng, opts, start);
    }
    const BitString initial = opts.initial ? *opts.initial : p.initial_solution(rng);
    return run_one_max(p, k, kappa, rng, opts, initial);
}

double capped_opt_time(const RunRecord& rec, std::uint64_t kappa, double penalty) {
    if (penalty < 1.0) throw std::invalid_argument("capped_opt_time: penalty must be >= 1");
    if (rec.optimum_hit_iter) return static_cast<double>(*rec.optimum_hit_iter);
    return penalty * static_cast<double>(kappa);
}

} // namespace paramrls
