#include "paramrls/tuner.hpp"

#include <stdexcept>

namespace paramrls {

int propose(int theta, LocalSearchOp op, RngStream& rng) {
    if (op == LocalSearchOp::pm1) return theta + (rng.coin() ? 1 : -1);
    static constexpr int deltas[4] = {-2, -1, 1, 2};
    return theta + deltas[rng.uniform_below(4)];
}

std::optional<int> mutate(int theta, LocalSearchOp op, ParamSpace space, RngStream& rng) {
    if (space.phi < 1) throw std::invalid_argument("mutate: phi must be >= 1");
    if (theta < 1 || theta > space.phi)
        throw std::invalid_argument("mutate: theta out of [1, phi]");
    const int cand = propose(theta, op, rng);
    if (cand < 1 || cand > space.phi) return std::nullopt;
    return cand;
}

int decide_eval_f(std::span<const FitnessOutcome> a, std::span<const FitnessOutcome> b,
                  int theta, int theta2, RngStream& coin) {
    if (a.size() != b.size()) throw std::invalid_argument("decide_eval_f: unpaired runs");
    int wins_a = 0, wins_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].fitness > b[i].fitness) ++wins_a;
        else if (b[i].fitness > a[i].fitness) ++wins_b;
        else if (a[i].last_improvement < b[i].last_improvement) ++wins_a;
        else if (b[i].last_improvement < a[i].last_improvement) ++wins_b;
        // equal fitness and equal improvement time: no win either way
    }
    if (wins_a > wins_b) return theta;
    if (wins_b > wins_a) return theta2;
    return coin.coin() ? theta : theta2;
}

int decide_eval_t(double time_a, double time_b, int theta, int theta2, RngStream& coin) {
    if (time_a < time_b) return theta;
    if (time_b < time_a) return theta2;
    return coin.coin() ? theta : theta2;
}

namespace {

void run_pair(int theta, int theta2, const TunerConfig& cfg, RngStream& rng, int run_index,
              RunRecord& out_a, RunRecord& out_b) {
    RngStream ra = rng.fork(static_cast<std::uint64_t>(2 * run_index));
    RngStream rb = rng.fork(static_cast<std::uint64_t>(2 * run_index + 1));
    out_a = run_rlsk(cfg.problem, static_cast<std::size_t>(theta), cfg.kappa, ra);
    out_b = run_rlsk(cfg.problem, static_cast<std::size_t>(theta2), cfg.kappa, rb);
}

} // namespace

int eval_f(int theta, int theta2, const TunerConfig& cfg, RngStream& rng) {
    if (cfg.runs < 1) throw std::invalid_argument("eval_f: runs must be >= 1");
    std::vector<FitnessOutcome> a(cfg.runs), b(cfg.runs);
    RunRecord ra, rb;
    for (int i = 0; i < cfg.runs; ++i) {
        run_pair(theta, theta2, cfg, rng, i, ra, rb);
        a[i] = {ra.final_fitness, ra.last_improvement_iter};
        b[i] = {rb.final_fitness, rb.last_improvement_iter};
    }
    return decide_eval_f(a, b, theta, theta2, rng);
}

int eval_t(int theta, int theta2, const TunerConfig& cfg, RngStream& rng) {
    if (cfg.runs < 1) throw std::invalid_argument("eval_t: runs must be >= 1");
    double sum_a = 0.0, sum_b = 0.0;
    RunRecord ra, rb;
    for (int i = 0; i < cfg.runs; ++i) {
        run_pair(theta, theta2, cfg, rng, i, ra, rb);
        sum_a += capped_opt_time(ra, cfg.kappa, cfg.penalty);
        sum_b += capped_opt_time(rb, cfg.kappa, cfg.penalty);
    }
    return decide_eval_t(sum_a, sum_b, theta, theta2, rng);
}

TunerTrace param_rls_with(ParamSpace space, LocalSearchOp op, int evals, const EvalFn& eval,
                          RngStream& rng) {
    if (space.phi < 1) throw std::invalid_argument("param_rls: phi must be >= 1");
    if (evals < 0) throw std::invalid_argument("param_rls: evals must be >= 0");

    TunerTrace trace;
    trace.steps.reserve(static_cast<std::size_t>(evals));
    int theta = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(space.phi)));
    trace.initial_theta = theta;

    for (int step = 1; step <= evals; ++step) {
        const int cand = propose(theta, op, rng);
        if (cand < 1 || cand > space.phi) {
            // infeasible: counts as a tuner step but costs no target runs
            trace.steps.push_back({cand, false, theta});
            continue;
        }
        RngStream eval_stream = rng.fork(static_cast<std::uint64_t>(step));
        theta = eval(theta, cand, eval_stream);
        trace.steps.push_back({cand, true, theta});
        ++trace.evaluations_used;
    }
    trace.returned_theta = theta;
    return trace;
}

TunerTrace param_rls(const TunerConfig& cfg, RngStream& rng) {
    const EvalFn eval = (cfg.metric == Metric::fitness)
        ? EvalFn([&cfg](int t, int t2, RngStream& r) { return eval_f(t, t2, cfg, r); })
        : EvalFn([&cfg](int t, int t2, RngStream& r) { return eval_t(t, t2, cfg, r); });
    return param_rls_with(cfg.space, cfg.op, cfg.evals, eval, rng);
}

} // namespace paramrls
