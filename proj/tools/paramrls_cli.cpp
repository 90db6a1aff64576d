#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "paramrls/harness.hpp"
#include "paramrls/report.hpp"
#include "paramrls/scenario.hpp"
#include "paramrls/theory.hpp"

namespace {

using paramrls::Mode;
using paramrls::Report;
using paramrls::ReportFormat;
using paramrls::Scenario;

struct CommonOpts {
    std::string scenario_file;
    std::string out;
    std::string format = "json";
    unsigned workers = 1;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> replicates;
};

struct InlineOpts {
    std::string kind = "one_max";
    std::uint64_t n = 0;
    std::string shift = "identity";
    int phi = 0;
    std::string kappa;
    std::string runs = "1";
    std::string evals;
    std::string metric = "f";
    std::string op = "pm1";
    double penalty = 10.0;
    int a = 0, b = 0;
    int drift_k = 0;
    std::uint64_t drift_s = 0;
    int table_periods = 80;
    std::string trace_path;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_replicates = true) {
    cmd->add_option("--scenario", c.scenario_file, "Scenario JSON file");
    cmd->add_option("--out", c.out, "Output file (default: stdout)");
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", c.workers, "Worker threads (0 = hardware)");
    cmd->add_option("--seed", c.seed, "Master seed (overrides scenario)");
    if (with_replicates)
        cmd->add_option("--replicates", c.replicates, "Replicates (overrides scenario)");
}

Scenario build_scenario(Mode mode, const CommonOpts& c, const InlineOpts& in) {
    if (!c.scenario_file.empty()) {
        Scenario sc = paramrls::load_scenario_file(c.scenario_file);
        if (sc.mode != mode)
            throw paramrls::ScenarioError("scenario.mode",
                                          std::string("scenario file is for mode '") +
                                              paramrls::mode_name(sc.mode) + "'");
        if (c.seed) sc.master_seed = *c.seed;
        if (c.replicates) sc.replicates = *c.replicates;
        return sc;
    }
    // assemble a scenario document from inline flags, then reuse the
    // scenario validator so both paths enforce identical rules
    nlohmann::json doc;
    doc["name"] = std::string("cli_") + paramrls::mode_name(mode);
    doc["mode"] = paramrls::mode_name(mode);
    doc["master_seed"] = c.seed.value_or(0);
    doc["replicates"] = c.replicates.value_or(1);
    if (mode == Mode::tune || mode == Mode::race || mode == Mode::drift) {
        if (in.n == 0) throw paramrls::ScenarioError("--n", "required without --scenario");
        doc["problem"] = {{"kind", in.kind}, {"n", in.n}, {"shift", in.shift}};
    }
    if (mode == Mode::tune || mode == Mode::race) {
        nlohmann::json tuner;
        if (in.kappa.empty()) throw paramrls::ScenarioError("--kappa", "required without --scenario");
        tuner["kappa"] = in.kappa;
        tuner["runs"] = in.runs;
        tuner["metric"] = in.metric;
        tuner["penalty"] = in.penalty;
        if (mode == Mode::tune) {
            if (in.phi == 0) throw paramrls::ScenarioError("--phi", "required without --scenario");
            if (in.evals.empty())
                throw paramrls::ScenarioError("--evals", "required without --scenario");
            tuner["phi"] = in.phi;
            tuner["evals"] = in.evals;
            tuner["operator"] = in.op;
        }
        doc["tuner"] = tuner;
    }
    if (mode == Mode::race) {
        if (in.a == 0 || in.b == 0)
            throw paramrls::ScenarioError("--a/--b", "required without --scenario");
        doc["race"] = {{"a", in.a}, {"b", in.b}};
    }
    if (mode == Mode::drift) {
        if (in.drift_k == 0) throw paramrls::ScenarioError("--k", "required without --scenario");
        doc["drift"] = {{"k", in.drift_k}, {"s", in.drift_s}};
    }
    if (mode == Mode::walk) {
        if (in.phi == 0) throw paramrls::ScenarioError("--phi", "required without --scenario");
        doc["walk"] = {{"phi", in.phi}};
    }
    if (mode == Mode::table) doc["table"] = {{"periods", in.table_periods}};
    if (!in.trace_path.empty()) doc["trace_path"] = in.trace_path;
    return paramrls::parse_scenario(doc);
}

void emit(const Report& rep, const CommonOpts& c) {
    const ReportFormat fmt = c.format == "csv" ? ReportFormat::csv : ReportFormat::json;
    if (c.out.empty()) {
        std::cout << paramrls::serialize_report(rep, fmt);
    } else {
        paramrls::write_report_file(rep, fmt, c.out);
    }
    std::fprintf(stderr, "[%s] %s: %.3fs\n", rep.mode.c_str(), rep.scenario.c_str(),
                 rep.wall_seconds);
}

int run_expected_time(std::uint64_t n, std::uint64_t k, const CommonOpts& c) {
    const paramrls::theory::BigInt e =
        paramrls::theory::expected_opt_time_ridge(static_cast<long long>(n),
                                                  static_cast<long long>(k));
    Report rep;
    rep.scenario = "cli_expected_time";
    rep.mode = "expected_time";
    rep.replicates = 0;
    rep.params["n"] = n;
    rep.params["k"] = k;
    paramrls::DataTable t;
    t.columns = {"n", "k", "expected_iterations"};
    t.rows.push_back({std::to_string(n), std::to_string(k), e.str()});
    rep.table = std::move(t);
    emit(rep, c);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RLS_k parameter-tuning lab: tuner, races, and analytical oracles"};
    app.require_subcommand(1);

    CommonOpts common[6];
    InlineOpts inl;

    CLI::App* tune = app.add_subcommand("tune", "Run the tuner and histogram returned parameters");
    add_common(tune, common[0]);
    tune->add_option("--kind", inl.kind)->check(CLI::IsMember({"one_max", "ridge_star"}));
    tune->add_option("--n", inl.n);
    tune->add_option("--shift", inl.shift);
    tune->add_option("--phi", inl.phi);
    tune->add_option("--kappa", inl.kappa);
    tune->add_option("--runs", inl.runs);
    tune->add_option("--evals", inl.evals);
    tune->add_option("--metric", inl.metric)->check(CLI::IsMember({"f", "t"}));
    tune->add_option("--operator", inl.op)->check(CLI::IsMember({"pm1", "pm12"}));
    tune->add_option("--penalty", inl.penalty);
    tune->add_option("--trace-out", inl.trace_path, "Dump replicate 0's tuner trace");

    CLI::App* race = app.add_subcommand("race", "Evaluate RLS_a against RLS_b repeatedly");
    add_common(race, common[1]);
    race->add_option("--kind", inl.kind)->check(CLI::IsMember({"one_max", "ridge_star"}));
    race->add_option("--n", inl.n);
    race->add_option("--shift", inl.shift);
    race->add_option("--a", inl.a);
    race->add_option("--b", inl.b);
    race->add_option("--kappa", inl.kappa);
    race->add_option("--runs", inl.runs);
    race->add_option("--metric", inl.metric)->check(CLI::IsMember({"f", "t"}));
    race->add_option("--penalty", inl.penalty);

    CLI::App* drift = app.add_subcommand("drift", "Monte Carlo one-step drift vs exact value");
    add_common(drift, common[2]);
    drift->add_option("--n", inl.n);
    drift->add_option("--shift", inl.shift);
    drift->add_option("--k", inl.drift_k);
    drift->add_option("--s", inl.drift_s);

    CLI::App* table = app.add_subcommand("table", "Interval-constant recurrence table");
    add_common(table, common[3], false);
    table->add_option("--periods", inl.table_periods);

    CLI::App* walk = app.add_subcommand("walk", "Exact hitting times of the lazy parameter walk");
    add_common(walk, common[4], false);
    walk->add_option("--phi", inl.phi);

    CLI::App* expected = app.add_subcommand("expected-time", "Exact expected Ridge* solve time");
    std::uint64_t en = 0, ek = 0;
    add_common(expected, common[5], false);
    expected->add_option("--n", en)->required();
    expected->add_option("--k", ek)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (tune->parsed()) {
            const Scenario sc = build_scenario(Mode::tune, common[0], inl);
            emit(paramrls::run_tune(sc, common[0].workers), common[0]);
        } else if (race->parsed()) {
            const Scenario sc = build_scenario(Mode::race, common[1], inl);
            emit(paramrls::run_race(sc, common[1].workers), common[1]);
        } else if (drift->parsed()) {
            const Scenario sc = build_scenario(Mode::drift, common[2], inl);
            emit(paramrls::run_drift(sc, common[2].workers), common[2]);
        } else if (table->parsed()) {
            const Scenario sc = build_scenario(Mode::table, common[3], inl);
            emit(paramrls::run_table(sc), common[3]);
        } else if (walk->parsed()) {
            const Scenario sc = build_scenario(Mode::walk, common[4], inl);
            emit(paramrls::run_walk(sc), common[4]);
        } else if (expected->parsed()) {
            return run_expected_time(en, ek, common[5]);
        }
    } catch (const paramrls::ScenarioError& e) {
        nlohmann::ordered_json err{{"error", {{"kind", "config"}, {"path", e.path()},
                                              {"message", e.what()}}}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::ordered_json err{{"error", {{"kind", "runtime"}, {"message", e.what()}}}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 0;
}
