#pragma once

#include <cstdint>
#include <functional>

#include "paramrls/report.hpp"
#include "paramrls/scenario.hpp"
#include "paramrls/tuner.hpp"

namespace paramrls {

/**
 * Run f(i) for every replicate index i on `workers` threads (0 = one per
 * hardware thread). Replicates must write only to their own slot; results
 * are then independent of scheduling, which keeps reports byte-identical
 * across worker counts.
 */
void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& f);

Report run_tune(const Scenario& sc, unsigned workers = 1);
Report run_race(const Scenario& sc, unsigned workers = 1);
Report run_drift(const Scenario& sc, unsigned workers = 1);
Report run_walk(const Scenario& sc);
Report run_table(const Scenario& sc);

/// Dispatch on sc.mode.
Report run_scenario(const Scenario& sc, unsigned workers = 1);

/// Flat trace emission: columns step,theta,theta_proposed,feasible,winner.
std::string tuner_trace_to_csv(const TunerTrace& trace);
std::string tuner_trace_to_json(const TunerTrace& trace);

} // namespace paramrls
