#include "paramrls/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "paramrls/expr.hpp"
#include "paramrls/rls_run.hpp"
#include "paramrls/stats.hpp"
#include "paramrls/theory.hpp"

namespace paramrls {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

nlohmann::ordered_json problem_params(const Scenario& sc) {
    nlohmann::ordered_json p;
    p["kind"] = sc.problem->kind == ProblemKind::one_max ? "one_max" : "ridge_star";
    p["n"] = sc.problem->n;
    p["shift"] = sc.problem->shift;
    return p;
}

void add_histogram_proportions(Report& rep) {
    for (const auto& [key, count] : rep.counts) {
        const Interval w = wilson95(count, rep.replicates);
        rep.proportions.push_back({key, count, rep.replicates, w.point, w.lo, w.hi});
    }
}

void maybe_write_trace(const Scenario& sc, const TunerTrace& trace) {
    if (!sc.trace_path) return;
    std::ofstream out(*sc.trace_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open trace file: " + *sc.trace_path);
    const bool json = sc.trace_path->size() >= 5 &&
                      sc.trace_path->compare(sc.trace_path->size() - 5, 5, ".json") == 0;
    out << (json ? tuner_trace_to_json(trace) : tuner_trace_to_csv(trace));
}

} // namespace

void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& f) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto body = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || failed.load(std::memory_order_relaxed)) return;
            try {
                f(i);
            } catch (...) {
                std::scoped_lock lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

Report run_tune(const Scenario& sc, unsigned workers) {
    const auto t0 = Clock::now();
    if (sc.mode != Mode::tune) throw ScenarioError("scenario.mode", "expected tune");
    TunerConfig cfg = make_tuner_config(sc);
    const int phi = cfg.space.phi;
    const std::uint64_t reps = sc.replicates;

    struct Slot {
        int returned = 0;
        std::uint64_t first_hit = 0; // first eval index with active theta == 1, censored at T
        bool hit = false;
    };
    std::vector<Slot> slots(reps);
    TunerTrace trace0;

    parallel_for(reps, workers, [&](std::uint64_t i) {
        RngStream rng(sc.master_seed, i);
        const TunerTrace trace = param_rls(cfg, rng);
        Slot s;
        s.returned = trace.returned_theta;
        if (trace.initial_theta == 1) {
            s.hit = true;
            s.first_hit = 0;
        } else {
            std::uint64_t step = 0;
            for (const auto& st : trace.steps) {
                ++step;
                if (st.winner == 1) {
                    s.hit = true;
                    s.first_hit = step;
                    break;
                }
            }
            if (!s.hit) s.first_hit = static_cast<std::uint64_t>(cfg.evals);
        }
        slots[i] = s;
        if (i == 0) trace0 = trace;
    });

    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(phi), 0);
    double first_hit_sum = 0.0;
    std::uint64_t hits = 0;
    for (const auto& s : slots) {
        ++histogram[static_cast<std::size_t>(s.returned - 1)];
        first_hit_sum += static_cast<double>(s.first_hit);
        if (s.hit) ++hits;
    }

    Report rep;
    rep.scenario = sc.name;
    rep.mode = "tune";
    rep.master_seed = sc.master_seed;
    rep.replicates = reps;
    rep.params = problem_params(sc);
    rep.params["phi"] = phi;
    rep.params["operator"] = cfg.op == LocalSearchOp::pm1 ? "pm1" : "pm12";
    rep.params["metric"] = cfg.metric == Metric::fitness ? "f" : "t";
    rep.params["kappa"] = cfg.kappa;
    rep.params["runs"] = cfg.runs;
    rep.params["evals"] = cfg.evals;
    rep.params["penalty"] = cfg.penalty;
    for (int k = 1; k <= phi; ++k)
        rep.counts.emplace_back(std::to_string(k), histogram[static_cast<std::size_t>(k - 1)]);
    add_histogram_proportions(rep);
    const double stat = phi > 1 ? chi_square_uniform_stat(histogram) : 0.0;
    rep.metrics.emplace_back("chi_square_stat", stat);
    rep.metrics.emplace_back("chi_square_p",
                             phi > 1 ? chi_square_p_value(stat, static_cast<unsigned>(phi - 1))
                                     : 1.0);
    // first-hit evaluations of theta=1, censored at T for replicates that never got there
    rep.metrics.emplace_back("mean_first_hit_eval_theta1",
                             first_hit_sum / static_cast<double>(reps));
    rep.metrics.emplace_back("theta1_hit_fraction",
                             static_cast<double>(hits) / static_cast<double>(reps));
    maybe_write_trace(sc, trace0);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

Report run_race(const Scenario& sc, unsigned workers) {
    const auto t0 = Clock::now();
    if (sc.mode != Mode::race) throw ScenarioError("scenario.mode", "expected race");
    TunerConfig cfg = make_tuner_config(sc);
    const int a = sc.race->a;
    const int b = sc.race->b;
    cfg.space.phi = std::max(cfg.space.phi, b);
    const std::uint64_t reps = sc.replicates;

    std::vector<std::uint8_t> a_won(reps, 0);
    parallel_for(reps, workers, [&](std::uint64_t i) {
        RngStream rng(sc.master_seed, i);
        const int winner = cfg.metric == Metric::fitness ? eval_f(a, b, cfg, rng)
                                                         : eval_t(a, b, cfg, rng);
        a_won[i] = winner == a ? 1 : 0;
    });

    std::uint64_t wins_a = 0;
    for (auto w : a_won) wins_a += w;

    Report rep;
    rep.scenario = sc.name;
    rep.mode = "race";
    rep.master_seed = sc.master_seed;
    rep.replicates = reps;
    rep.params = problem_params(sc);
    rep.params["a"] = a;
    rep.params["b"] = b;
    rep.params["metric"] = cfg.metric == Metric::fitness ? "f" : "t";
    rep.params["kappa"] = cfg.kappa;
    rep.params["runs"] = cfg.runs;
    rep.params["penalty"] = cfg.penalty;
    rep.counts.emplace_back(std::to_string(a), wins_a);
    rep.counts.emplace_back(std::to_string(b), reps - wins_a);
    add_histogram_proportions(rep);
    rep.metrics.emplace_back("win_freq_a",
                             static_cast<double>(wins_a) / static_cast<double>(reps));
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

Report run_drift(const Scenario& sc, unsigned workers) {
    const auto t0 = Clock::now();
    if (sc.mode != Mode::drift) throw ScenarioError("scenario.mode", "expected drift");
    const Problem problem = make_problem(*sc.problem, sc.master_seed);
    const auto k = static_cast<std::size_t>(sc.drift->k);
    const std::uint64_t s = sc.drift->s;
    const std::uint64_t reps = sc.replicates;

    // pinned state: optimum with the first s positions flipped
    BitString x = problem.one_max_optimum();
    for (std::uint64_t i = 0; i < s; ++i) x.flip(i);
    const long long base_fitness = static_cast<long long>(problem.n()) - static_cast<long long>(s);

    std::vector<std::uint32_t> progress(reps, 0);
    parallel_for(reps, workers, [&](std::uint64_t i) {
        RngStream rng(sc.master_seed, i);
        RunOptions opts;
        opts.initial = x;
        const RunRecord rec = run_rlsk(problem, k, 1, rng, opts);
        progress[i] = static_cast<std::uint32_t>(rec.final_fitness - base_fitness);
    });

    std::vector<std::uint64_t> histogram(k + 1, 0);
    double sum = 0.0, sum_sq = 0.0;
    for (auto pr : progress) {
        ++histogram[pr];
        sum += pr;
        sum_sq += static_cast<double>(pr) * pr;
    }
    const double mean = sum / static_cast<double>(reps);
    const double var = sum_sq / static_cast<double>(reps) - mean * mean;
    const double std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(reps));
    const double exact = theory::drift_exact({static_cast<long long>(problem.n()),
                                              static_cast<long long>(k),
                                              static_cast<long long>(s)})
                             .convert_to<double>();

    Report rep;
    rep.scenario = sc.name;
    rep.mode = "drift";
    rep.master_seed = sc.master_seed;
    rep.replicates = reps;
    rep.params = problem_params(sc);
    rep.params["k"] = sc.drift->k;
    rep.params["s"] = s;
    for (std::size_t v = 0; v <= k; ++v)
        rep.counts.emplace_back(std::to_string(v), histogram[v]);
    add_histogram_proportions(rep);
    rep.metrics.emplace_back("mc_mean", mean);
    rep.metrics.emplace_back("std_error", std_error);
    rep.metrics.emplace_back("exact_drift", exact);
    rep.metrics.emplace_back("abs_z", std_error > 0.0 ? std::abs(mean - exact) / std_error
                                                      : std::abs(mean - exact));
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

Report run_walk(const Scenario& sc) {
    const auto t0 = Clock::now();
    if (sc.mode != Mode::walk) throw ScenarioError("scenario.mode", "expected walk");
    const int phi = sc.walk->phi;

    Report rep;
    rep.scenario = sc.name;
    rep.mode = "walk";
    rep.master_seed = sc.master_seed;
    rep.replicates = 0;
    rep.params["phi"] = phi;
    DataTable t;
    t.columns = {"start", "hitting_time", "exact"};
    double max_ratio = 0.0;
    const double bound = 2.0 * static_cast<double>(phi) * static_cast<double>(phi);
    for (int s = 1; s <= phi; ++s) {
        const theory::Rational h = theory::lazy_walk_hitting_time(phi, s);
        const double hd = h.convert_to<double>();
        max_ratio = std::max(max_ratio, hd / bound);
        t.rows.push_back({std::to_string(s), format_double(hd),
                          boost::multiprecision::numerator(h).str() + "/" +
                              boost::multiprecision::denominator(h).str()});
    }
    rep.table = std::move(t);
    rep.metrics.emplace_back("max_ratio_vs_2phi2", max_ratio);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

Report run_table(const Scenario& sc) {
    const auto t0 = Clock::now();
    if (sc.mode != Mode::table) throw ScenarioError("scenario.mode", "expected table");
    const theory::RecurrenceTable table = theory::recurrence_table(sc.table->periods);

    Report rep;
    rep.scenario = sc.name;
    rep.mode = "table";
    rep.master_seed = sc.master_seed;
    rep.replicates = 0;
    rep.params["periods"] = sc.table->periods;
    DataTable t;
    t.columns = {"i", "c_l_1", "c_u_1", "c_l_3", "c_u_3", "c_l_5", "c_u_5"};
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        t.rows.push_back({std::to_string(i), format_double(row.cl1), format_double(row.cu1),
                          format_double(row.cl3), format_double(row.cu3), format_double(row.cl5),
                          format_double(row.cu5)});
    }
    rep.table = std::move(t);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

Report run_scenario(const Scenario& sc, unsigned workers) {
    switch (sc.mode) {
        case Mode::tune: return run_tune(sc, workers);
        case Mode::race: return run_race(sc, workers);
        case Mode::drift: return run_drift(sc, workers);
        case Mode::walk: return run_walk(sc);
        case Mode::table: return run_table(sc);
    }
    throw ScenarioError("scenario.mode", "unhandled mode");
}

std::string tuner_trace_to_csv(const TunerTrace& trace) {
    std::string out = "step,theta,theta_proposed,feasible,winner\n";
    int theta = trace.initial_theta;
    std::uint64_t step = 0;
    for (const auto& st : trace.steps) {
        ++step;
        out += std::to_string(step) + ',' + std::to_string(theta) + ',' +
               std::to_string(st.proposed) + ',' + (st.feasible ? "1" : "0") + ',' +
               std::to_string(st.winner) + '\n';
        theta = st.winner;
    }
    return out;
}

std::string tuner_trace_to_json(const TunerTrace& trace) {
    nlohmann::ordered_json doc;
    doc["initial_theta"] = trace.initial_theta;
    doc["returned_theta"] = trace.returned_theta;
    doc["evaluations_used"] = trace.evaluations_used;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    int theta = trace.initial_theta;
    std::uint64_t step = 0;
    for (const auto& st : trace.steps) {
        ++step;
        steps.push_back(nlohmann::ordered_json{{"step", step},
                                               {"theta", theta},
                                               {"theta_proposed", st.proposed},
                                               {"feasible", st.feasible},
                                               {"winner", st.winner}});
        theta = st.winner;
    }
    doc["steps"] = steps;
    return doc.dump(2) + "\n";
}

} // namespace paramrls
