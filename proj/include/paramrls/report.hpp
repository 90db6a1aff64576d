#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace paramrls {

/// Version stamped into every emitted artifact.
inline constexpr const char* kArtifactVersion = "0.1.0";

struct ReportProportion {
    std::string name;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Generic table payload used by the table/walk/drift modes' CSV output.
struct DataTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/**
 * Result artifact of one scenario execution. All serialized content is a
 * pure function of the scenario and master seed; wall_seconds is runtime
 * telemetry and deliberately left out of the emitted bytes so reruns are
 * byte-identical.
 */
struct Report {
    std::string scenario;
    std::string mode;
    std::string artifact_version = kArtifactVersion;
    std::uint64_t master_seed = 0;
    std::uint64_t replicates = 0; // stochastic replicates backing `counts`
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<ReportProportion> proportions;
    std::optional<DataTable> table;
    double wall_seconds = 0.0;
};

enum class ReportFormat { csv, json };

/// Deterministic serialization (fixed field order, %.17g floats in CSV).
std::string to_json_string(const Report& r);
std::string to_csv_string(const Report& r);
std::string serialize_report(const Report& r, ReportFormat format);

/// Inverse of to_json_string for everything that is serialized.
Report report_from_json(const nlohmann::ordered_json& doc);

void write_report_file(const Report& r, ReportFormat format, const std::string& path);

/// Format a double exactly as the CSV writer does.
std::string format_double(double v);

} // namespace paramrls
