#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "paramrls/problem.hpp"
#include "paramrls/rng.hpp"

namespace paramrls {

/**
 * Outcome of a single capped RLS_k run.
 *
 * Iterations are 1-based. last_improvement_iter records the most recent
 * strict fitness increase; 0 means the initial fitness was never beaten
 * (and compares as earliest possible in tie-breaks). optimum_hit_iter is
 * set when the run reaches the reachable optimum; it is 0 in the corner
 * case that the initial solution already sits there.
 */
struct RunRecord {
    long long final_fitness = 0;
    std::uint64_t last_improvement_iter = 0;
    std::optional<std::uint64_t> optimum_hit_iter;
    std::uint64_t iterations_executed = 0;
    /// (iteration, fitness) at iteration 0 and after each strict improvement.
    std::vector<std::pair<std::uint64_t, long long>> trajectory;
};

struct RunOptions {
    bool record_trajectory = false;
    /// Override the initial solution (defaults to Problem::initial_solution).
    std::optional<BitString> initial;
};

/**
 * Run RLS_k on p for at most kappa iterations: each iteration flips a
 * uniform k-subset of positions and accepts the offspring iff its fitness
 * is >= the parent's. Stops early once the reachable optimum for this k is
 * hit. kappa = 0 just evaluates the initial solution.
 */
RunRecord run_rlsk(const Problem& p, std::size_t k, std::uint64_t kappa, RngStream& rng,
                   const RunOptions& opts = {});

/**
 * Penalised optimisation time of a run: the hitting iteration when the run
 * reached the optimum, otherwise penalty * kappa. penalty must be >= 1
 * (10 reproduces the usual PAR10 convention).
 */
double capped_opt_time(const RunRecord& rec, std::uint64_t kappa, double penalty);

} // namespace paramrls
