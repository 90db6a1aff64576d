#include "paramrls/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace paramrls {

using nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_json_string(const Report& r) {
    ordered_json doc;
    doc["scenario"] = r.scenario;
    doc["mode"] = r.mode;
    doc["artifact_version"] = r.artifact_version;
    doc["master_seed"] = r.master_seed;
    doc["replicates"] = r.replicates;
    doc["params"] = r.params;
    ordered_json counts = ordered_json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    doc["counts"] = counts;
    ordered_json metrics = ordered_json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = v;
    doc["metrics"] = metrics;
    ordered_json props = ordered_json::array();
    for (const auto& p : r.proportions) {
        props.push_back(ordered_json{{"name", p.name},
                                     {"successes", p.successes},
                                     {"trials", p.trials},
                                     {"point", p.point},
                                     {"lo", p.lo},
                                     {"hi", p.hi}});
    }
    doc["proportions"] = props;
    if (r.table) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.table->rows) rows.push_back(row);
        doc["table"] = ordered_json{{"columns", r.table->columns}, {"rows", rows}};
    }
    return doc.dump(2) + "\n";
}

Report report_from_json(const ordered_json& doc) {
    Report r;
    r.scenario = doc.at("scenario").get<std::string>();
    r.mode = doc.at("mode").get<std::string>();
    r.artifact_version = doc.at("artifact_version").get<std::string>();
    r.master_seed = doc.at("master_seed").get<std::uint64_t>();
    r.replicates = doc.at("replicates").get<std::uint64_t>();
    r.params = doc.at("params");
    for (const auto& [k, v] : doc.at("counts").items())
        r.counts.emplace_back(k, v.get<std::uint64_t>());
    for (const auto& [k, v] : doc.at("metrics").items())
        r.metrics.emplace_back(k, v.get<double>());
    for (const auto& p : doc.at("proportions")) {
        r.proportions.push_back({p.at("name").get<std::string>(),
                                 p.at("successes").get<std::uint64_t>(),
                                 p.at("trials").get<std::uint64_t>(),
                                 p.at("point").get<double>(), p.at("lo").get<double>(),
                                 p.at("hi").get<double>()});
    }
    if (doc.contains("table")) {
        DataTable t;
        t.columns = doc["table"].at("columns").get<std::vector<std::string>>();
        for (const auto& row : doc["table"].at("rows"))
            t.rows.push_back(row.get<std::vector<std::string>>());
        r.table = std::move(t);
    }
    return r;
}

std::string to_csv_string(const Report& r) {
    std::string out;
    if (r.table) {
        for (std::size_t i = 0; i < r.table->columns.size(); ++i) {
            if (i) out += ',';
            out += r.table->columns[i];
        }
        out += '\n';
        for (const auto& row : r.table->rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += row[i];
            }
            out += '\n';
        }
        return out;
    }
    // histogram layout; a report with no counts yields just the header
    out += "key,count,proportion,wilson95_lo,wilson95_hi\n";
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
        const auto& [key, count] = r.counts[i];
        out += key;
        out += ',';
        out += std::to_string(count);
        // Wilson rows are aligned with `proportions` when the harness
        // provides one per histogram key; otherwise left blank.
        const ReportProportion* prop = nullptr;
        for (const auto& p : r.proportions) {
            if (p.name == key) {
                prop = &p;
                break;
            }
        }
        if (prop) {
            out += ',' + format_double(prop->point) + ',' + format_double(prop->lo) + ',' +
                   format_double(prop->hi);
        } else {
            out += ",,,";
        }
        out += '\n';
    }
    return out;
}

std::string serialize_report(const Report& r, ReportFormat format) {
    return format == ReportFormat::json ? to_json_string(r) : to_csv_string(r);
}

void write_report_file(const Report& r, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << serialize_report(r, format);
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

} // namespace paramrls
