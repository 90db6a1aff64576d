#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "paramrls/problem.hpp"
#include "paramrls/rls_run.hpp"
#include "paramrls/rng.hpp"

namespace paramrls {

struct ParamSpace {
    int phi = 1; // parameter range {1..phi}
};

enum class LocalSearchOp { pm1, pm12 };
enum class Metric { fitness, time };

struct TunerConfig {
    ParamSpace space;
    LocalSearchOp op = LocalSearchOp::pm1;
    Metric metric = Metric::fitness;
    std::uint64_t kappa = 0; // run cutoff
    int runs = 1;            // r: paired runs per evaluation
    int evals = 0;           // T: mutation steps of the tuner
    double penalty = 10.0;   // timeout multiplier for the time metric
    Problem problem = Problem::one_max(1);
};

struct TunerStep {
    int proposed = 0;     // theta + delta, possibly out of range
    bool feasible = false;
    int winner = 0;       // active parameter after the step
};

struct TunerTrace {
    int initial_theta = 0;
    std::vector<TunerStep> steps;
    int returned_theta = 0;
    int evaluations_used = 0; // feasible steps, i.e. steps that ran an evaluation
};

/// Raw local-search proposal theta + delta (delta uniform over the operator's set).
int propose(int theta, LocalSearchOp op, RngStream& rng);

/**
 * One mutation of the active parameter: uniform delta from {-1,+1} (pm1) or
 * {-2,-1,+1,+2} (pm12). Returns the new value, or nullopt when the proposal
 * oversteps [1, phi] (the interval metric treats that as an infeasible
 * no-op). Throws std::invalid_argument if theta itself is out of range.
 */
std::optional<int> mutate(int theta, LocalSearchOp op, ParamSpace space, RngStream& rng);

/// Per-run summary used by the fitness-based comparison.
struct FitnessOutcome {
    long long fitness = 0;
    std::uint64_t last_improvement = 0;
};

/**
 * Fitness-metric decision over r paired run outcomes. A run is won on
 * strictly higher final fitness; equal fitness falls back to strictly
 * smaller last-improvement iteration; equal on both counts no win. The side
 * with more run wins takes the evaluation, a tie is broken by a fair coin.
 */
int decide_eval_f(std::span<const FitnessOutcome> a, std::span<const FitnessOutcome> b,
                  int theta, int theta2, RngStream& coin);

/// Time-metric decision: strictly smaller penalised-time sum wins, tie -> coin.
int decide_eval_t(double time_a, double time_b, int theta, int theta2, RngStream& coin);

/**
 * Run r paired runs of RLS_theta and RLS_theta2 (each run on its own forked
 * substream, no common random numbers) and pick the winner by final fitness.
 */
int eval_f(int theta, int theta2, const TunerConfig& cfg, RngStream& rng);

/// Same pairing, but the winner has the strictly smaller penalised-time sum.
int eval_t(int theta, int theta2, const TunerConfig& cfg, RngStream& rng);

using EvalFn = std::function<int(int theta, int theta2, RngStream& rng)>;

/**
 * ParamRLS with an injected evaluator: start uniform on [1, phi], then do
 * `evals` mutation steps. Infeasible proposals are recorded but consume no
 * evaluation. Returns the full trace; returned_theta is the final active
 * parameter.
 */
TunerTrace param_rls_with(ParamSpace space, LocalSearchOp op, int evals, const EvalFn& eval,
                          RngStream& rng);

/// ParamRLS bound to eval_f or eval_t per cfg.metric.
TunerTrace param_rls(const TunerConfig& cfg, RngStream& rng);

} // namespace paramrls
