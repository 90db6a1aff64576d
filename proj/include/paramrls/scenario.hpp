#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "paramrls/problem.hpp"
#include "paramrls/tuner.hpp"

namespace paramrls {

/// Configuration error carrying the offending field path.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

enum class Mode { tune, race, drift, table, walk };

struct ProblemSpec {
    ProblemKind kind = ProblemKind::one_max;
    std::uint64_t n = 0;
    std::string shift = "identity"; // "identity" | "random" | hex digits
};

struct TunerSpec {
    int phi = 0;                    // required for tune
    LocalSearchOp op = LocalSearchOp::pm1;
    Metric metric = Metric::fitness;
    std::string kappa;              // literal or expression in n
    std::string runs = "1";
    std::string evals;              // required for tune
    double penalty = 10.0;
};

struct RaceSpec {
    int a = 0;
    int b = 0;
};

struct DriftSpec {
    int k = 0;
    std::uint64_t s = 0;
};

struct WalkSpec {
    int phi = 0;
};

struct TableSpec {
    int periods = 0;
};

struct Scenario {
    std::string name;
    Mode mode = Mode::tune;
    std::uint64_t master_seed = 0;
    std::uint64_t replicates = 1;
    std::optional<ProblemSpec> problem;  // required for tune/race/drift
    std::optional<TunerSpec> tuner;      // required for tune/race
    std::optional<RaceSpec> race;        // required for race
    std::optional<DriftSpec> drift;      // required for drift
    std::optional<WalkSpec> walk;        // required for walk
    std::optional<TableSpec> table;      // required for table
    std::optional<std::string> trace_path; // optional trace dump (tune mode)
};

/// Parse and validate a scenario document. Unknown keys, missing required
/// sections and malformed values all raise ScenarioError with a field path.
Scenario parse_scenario(const nlohmann::json& doc);

Scenario load_scenario_file(const std::string& path);

/// Instantiate the problem named by a spec. The "random" shift is derived
/// from the master seed on a reserved stream id.
Problem make_problem(const ProblemSpec& spec, std::uint64_t master_seed);

/// Resolved tuner parameters for a concrete n.
TunerConfig make_tuner_config(const Scenario& sc);

const char* mode_name(Mode m);

} // namespace paramrls
