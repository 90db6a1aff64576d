#include "paramrls/scenario.hpp"

#include <fstream>
#include <limits>
#include <set>

#include "paramrls/expr.hpp"

namespace paramrls {

namespace {

using nlohmann::json;

void expect_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ScenarioError(path, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) throw ScenarioError(path + "." + key, "unknown key");
    }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ScenarioError(path + "." + key, "missing required key");
    return *it;
}

std::uint64_t get_uint(const json& v, const std::string& path) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw ScenarioError(path, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

int get_positive_int(const json& v, const std::string& path, int max = 1000000) {
    if (!v.is_number_integer()) throw ScenarioError(path, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < 1 || x > max)
        throw ScenarioError(path, "expected an integer in [1, " + std::to_string(max) + "]");
    return static_cast<int>(x);
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw ScenarioError(path, "expected a string");
    return v.get<std::string>();
}

// kappa/runs/evals may be a JSON integer or an expression string in n.
std::string get_size_field(const json& v, const std::string& path) {
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0))
        return std::to_string(v.get<std::uint64_t>());
    if (v.is_string()) return v.get<std::string>();
    throw ScenarioError(path, "expected a non-negative integer or an expression string");
}

ProblemSpec parse_problem(const json& obj, const std::string& path) {
    expect_keys(obj, path, {"kind", "n", "shift"});
    ProblemSpec spec;
    const std::string kind = get_string(require(obj, path, "kind"), path + ".kind");
    if (kind == "one_max") spec.kind = ProblemKind::one_max;
    else if (kind == "ridge_star") spec.kind = ProblemKind::ridge_star;
    else throw ScenarioError(path + ".kind", "expected \"one_max\" or \"ridge_star\"");
    spec.n = get_uint(require(obj, path, "n"), path + ".n");
    if (spec.n < 1) throw ScenarioError(path + ".n", "expected n >= 1");
    if (obj.contains("shift")) spec.shift = get_string(obj["shift"], path + ".shift");
    return spec;
}

TunerSpec parse_tuner(const json& obj, const std::string& path, Mode mode) {
    expect_keys(obj, path, {"phi", "operator", "metric", "kappa", "runs", "evals", "penalty"});
    TunerSpec spec;
    if (mode == Mode::tune) {
        spec.phi = get_positive_int(require(obj, path, "phi"), path + ".phi");
        spec.evals = get_size_field(require(obj, path, "evals"), path + ".evals");
        const std::string op = get_string(require(obj, path, "operator"), path + ".operator");
        if (op == "pm1") spec.op = LocalSearchOp::pm1;
        else if (op == "pm12") spec.op = LocalSearchOp::pm12;
        else throw ScenarioError(path + ".operator", "expected \"pm1\" or \"pm12\"");
    } else {
        if (obj.contains("phi")) spec.phi = get_positive_int(obj["phi"], path + ".phi");
        if (obj.contains("evals")) spec.evals = get_size_field(obj["evals"], path + ".evals");
        if (obj.contains("operator"))
            throw ScenarioError(path + ".operator", "only meaningful in tune mode");
    }
    const std::string metric = get_string(require(obj, path, "metric"), path + ".metric");
    if (metric == "f") spec.metric = Metric::fitness;
    else if (metric == "t") spec.metric = Metric::time;
    else throw ScenarioError(path + ".metric", "expected \"f\" or \"t\"");
    spec.kappa = get_size_field(require(obj, path, "kappa"), path + ".kappa");
    if (obj.contains("runs")) spec.runs = get_size_field(obj["runs"], path + ".runs");
    if (obj.contains("penalty")) {
        if (!obj["penalty"].is_number()) throw ScenarioError(path + ".penalty", "expected a number");
        spec.penalty = obj["penalty"].get<double>();
        if (spec.penalty < 1.0) throw ScenarioError(path + ".penalty", "expected penalty >= 1");
    }
    return spec;
}

} // namespace

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::tune: return "tune";
        case Mode::race: return "race";
        case Mode::drift: return "drift";
        case Mode::table: return "table";
        case Mode::walk: return "walk";
    }
    return "?";
}

Scenario parse_scenario(const nlohmann::json& doc) {
    expect_keys(doc, "scenario",
                {"name", "mode", "master_seed", "replicates", "problem", "tuner", "race", "drift",
                 "walk", "table", "trace_path"});
    Scenario sc;
    sc.name = get_string(require(doc, "scenario", "name"), "scenario.name");
    if (sc.name.empty()) throw ScenarioError("scenario.name", "must not be empty");

    const std::string mode = get_string(require(doc, "scenario", "mode"), "scenario.mode");
    if (mode == "tune") sc.mode = Mode::tune;
    else if (mode == "race") sc.mode = Mode::race;
    else if (mode == "drift") sc.mode = Mode::drift;
    else if (mode == "table") sc.mode = Mode::table;
    else if (mode == "walk") sc.mode = Mode::walk;
    else throw ScenarioError("scenario.mode", "expected tune|race|drift|table|walk");

    if (doc.contains("master_seed"))
        sc.master_seed = get_uint(doc["master_seed"], "scenario.master_seed");
    if (doc.contains("replicates")) {
        sc.replicates = get_uint(doc["replicates"], "scenario.replicates");
        if (sc.replicates < 1) throw ScenarioError("scenario.replicates", "expected >= 1");
    }
    if (doc.contains("trace_path"))
        sc.trace_path = get_string(doc["trace_path"], "scenario.trace_path");

    const bool needs_problem =
        sc.mode == Mode::tune || sc.mode == Mode::race || sc.mode == Mode::drift;
    if (needs_problem)
        sc.problem = parse_problem(require(doc, "scenario", "problem"), "scenario.problem");
    else if (doc.contains("problem"))
        throw ScenarioError("scenario.problem", "not used by this mode");

    if (sc.mode == Mode::tune || sc.mode == Mode::race)
        sc.tuner = parse_tuner(require(doc, "scenario", "tuner"), "scenario.tuner", sc.mode);
    else if (doc.contains("tuner"))
        throw ScenarioError("scenario.tuner", "not used by this mode");

    if (sc.mode == Mode::race) {
        const json& obj = require(doc, "scenario", "race");
        expect_keys(obj, "scenario.race", {"a", "b"});
        RaceSpec rs;
        rs.a = get_positive_int(require(obj, "scenario.race", "a"), "scenario.race.a");
        rs.b = get_positive_int(require(obj, "scenario.race", "b"), "scenario.race.b");
        if (rs.a >= rs.b) throw ScenarioError("scenario.race", "requires a < b");
        if (static_cast<std::uint64_t>(rs.b) > sc.problem->n)
            throw ScenarioError("scenario.race.b", "parameter exceeds n");
        sc.race = rs;
    } else if (doc.contains("race")) {
        throw ScenarioError("scenario.race", "not used by this mode");
    }

    if (sc.mode == Mode::drift) {
        const json& obj = require(doc, "scenario", "drift");
        expect_keys(obj, "scenario.drift", {"k", "s"});
        DriftSpec ds;
        ds.k = get_positive_int(require(obj, "scenario.drift", "k"), "scenario.drift.k");
        ds.s = get_uint(require(obj, "scenario.drift", "s"), "scenario.drift.s");
        if (sc.problem->kind != ProblemKind::one_max)
            throw ScenarioError("scenario.drift", "drift mode requires a one_max problem");
        if (static_cast<std::uint64_t>(ds.k) > sc.problem->n)
            throw ScenarioError("scenario.drift.k", "k exceeds n");
        if (ds.s > sc.problem->n) throw ScenarioError("scenario.drift.s", "s exceeds n");
        sc.drift = ds;
    } else if (doc.contains("drift")) {
        throw ScenarioError("scenario.drift", "not used by this mode");
    }

    if (sc.mode == Mode::walk) {
        const json& obj = require(doc, "scenario", "walk");
        expect_keys(obj, "scenario.walk", {"phi"});
        WalkSpec ws;
        ws.phi = get_positive_int(require(obj, "scenario.walk", "phi"), "scenario.walk.phi", 100000);
        sc.walk = ws;
    } else if (doc.contains("walk")) {
        throw ScenarioError("scenario.walk", "not used by this mode");
    }

    if (sc.mode == Mode::table) {
        const json& obj = require(doc, "scenario", "table");
        expect_keys(obj, "scenario.table", {"periods"});
        TableSpec ts;
        ts.periods =
            get_positive_int(require(obj, "scenario.table", "periods"), "scenario.table.periods", 100000);
        sc.table = ts;
    } else if (doc.contains("table")) {
        throw ScenarioError("scenario.table", "not used by this mode");
    }

    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario", "cannot open file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ScenarioError("scenario", std::string("invalid JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

Problem make_problem(const ProblemSpec& spec, std::uint64_t master_seed) {
    BitString shift;
    if (spec.shift == "identity") {
        shift = BitString::zeros(spec.n);
    } else if (spec.shift == "random") {
        // reserved stream so the instance is a pure function of the seed
        RngStream rng(master_seed, std::numeric_limits<std::uint64_t>::max());
        shift = BitString::random(spec.n, rng);
    } else {
        try {
            shift = BitString::from_hex(spec.shift, spec.n);
        } catch (const std::invalid_argument& e) {
            throw ScenarioError("scenario.problem.shift", e.what());
        }
    }
    return spec.kind == ProblemKind::one_max ? Problem::one_max(spec.n, std::move(shift))
                                             : Problem::ridge_star(spec.n, std::move(shift));
}

TunerConfig make_tuner_config(const Scenario& sc) {
    if (!sc.problem || !sc.tuner)
        throw ScenarioError("scenario", "mode requires problem and tuner sections");
    const TunerSpec& ts = *sc.tuner;
    TunerConfig cfg;
    cfg.problem = make_problem(*sc.problem, sc.master_seed);
    cfg.space.phi = ts.phi;
    cfg.op = ts.op;
    cfg.metric = ts.metric;
    cfg.penalty = ts.penalty;
    try {
        cfg.kappa = eval_size_expr(ts.kappa, sc.problem->n);
        const std::uint64_t runs = eval_size_expr(ts.runs, sc.problem->n);
        if (runs < 1 || runs > 100000000)
            throw std::invalid_argument("runs out of supported range [1, 1e8]");
        cfg.runs = static_cast<int>(runs);
        if (!ts.evals.empty()) {
            const std::uint64_t evals = eval_size_expr(ts.evals, sc.problem->n);
            if (evals > 1000000000) throw std::invalid_argument("evals out of supported range");
            cfg.evals = static_cast<int>(evals);
        }
    } catch (const std::invalid_argument& e) {
        throw ScenarioError("scenario.tuner", e.what());
    }
    return cfg;
}

} // namespace paramrls
