// Copyright 2026 The tempoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempoly/cli.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tempoly/constraints.h"
#include "tempoly/geometry.h"
#include "tempoly/inequalities.h"
#include "tempoly/io.h"
#include "tempoly/linalg.h"
#include "tempoly/quantum.h"
#include "tempoly/scenario.h"

namespace tempoly {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int n = 2;
    int m = 1;
    int delta = 2;
    std::uint64_t limit = 0;  // 0: environment or default
    bool json_output = false;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    double tol = kRoundTripTolerance;
    std::string out_path;

    std::uint64_t effective_limit() const {
        if (limit != 0) {
            return limit;
        }
        if (const char *env = std::getenv("TEMPOLY_LIMIT"); env != nullptr && *env != '\0') {
            char *end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end == nullptr || *end != '\0' || v == 0) {
                throw UsageError(std::string("TEMPOLY_LIMIT must be a positive integer, got '") + env + "'");
            }
            return v;
        }
        return kDefaultCoordinateLimit;
    }

    Scenario scenario() const {
        const Scenario s(n, m, delta);
        coordinate_count(s, effective_limit());
        return s;
    }
};

void add_scenario_flags(CLI::App *cmd, RunConfig &config) {
    cmd->add_option("--n", config.n, "Number of parties / measurement times")->required();
    cmd->add_option("--m", config.m, "Settings per measurement")->required();
    cmd->add_option("--delta", config.delta, "Outcomes per performed measurement")->required();
    cmd->add_option("--limit", config.limit, "Coordinate-count guard (overrides TEMPOLY_LIMIT)");
    cmd->add_flag("--json", config.json_output, "Emit a JSON report");
}

// Output sink honoring --out: a file when given, otherwise `fallback`.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot open output file '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream &stream() { return *stream_; }
    void finish(const std::string &path) {
        if (file_.is_open()) {
            file_.close();
            if (!file_) {
                throw std::runtime_error("error writing output file '" + path + "'");
            }
        }
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

int cmd_dims(const RunConfig &config, std::ostream &out) {
    const Scenario scenario = config.scenario();
    const DimensionReport report = dimension_report(scenario, config.effective_limit());
    if (config.json_output) {
        json j = to_json(report);
        if (scenario.n() == 1) {
            j["note"] = "n=1: no-signaling and NSIT systems are empty";
        }
        out << j.dump(2) << '\n';
    } else {
        auto line = [&](const char *name, const DimensionEntry &e) {
            out << name << '=' << e.computed << " (closed form " << e.closed_form.str() << ", "
                << (e.matches() ? "match" : "MISMATCH") << ")\n";
        };
        out << "scenario " << scenario.str() << '\n';
        line("P", report.p);
        line("NS", report.ns);
        line("AoT", report.aot);
        line("MR", report.mr);
        if (scenario.n() == 1) {
            out << "note: n=1, the no-signaling and NSIT systems are empty\n";
        }
    }
    return report.all_match() ? kExitVerified : kExitFalsified;
}

int cmd_conditions(const RunConfig &config, std::ostream &out) {
    const Scenario scenario = config.scenario();
    const ConstraintSystem aot = build_aot(scenario);
    const ConstraintSystem nsit = build_nsit(scenario);
    const ConstraintSystem norm = build_normalization(scenario);
    const ConstraintSystem aot_only[] = {aot};
    const ConstraintSystem nsit_only[] = {nsit};
    const ConstraintSystem norm_aot[] = {norm, aot};
    const size_t aot_rank = aot.rows.empty() ? 0 : rank(to_matrix(aot_only, false));
    const size_t nsit_rank = nsit.rows.empty() ? 0 : rank(to_matrix(nsit_only, false));
    const size_t norm_aot_rank = rank(to_matrix(norm_aot, false));
    const BigInt closed = count_aot_closed_form(scenario);
    const BigInt redundant = count_redundant_normalizations(scenario);
    const bool count_ok = BigInt(aot.size()) == closed;
    const bool aot_independent = aot_rank == aot.size();
    const bool redundancy_ok = BigInt(norm_aot_rank) == BigInt(norm.size() + aot.size()) - redundant;

    if (config.json_output) {
        json j = {{"schema", kSchemaVersion},
                  {"scenario", to_json(scenario)},
                  {"aot", {{"rows", aot.size()}, {"closed_form", to_int64(closed)}, {"rank", aot_rank},
                           {"independent", aot_independent}}},
                  {"nsit", {{"rows", nsit.size()}, {"rank", nsit_rank}, {"independent", nsit_rank == nsit.size()}}},
                  {"normalization", {{"rows", norm.size()}, {"redundant_closed_form", to_int64(redundant)},
                                     {"rank_with_aot", norm_aot_rank}, {"match", redundancy_ok}}}};
        out << j.dump(2) << '\n';
    } else {
        out << "scenario " << scenario.str() << '\n';
        out << "AoT rows " << aot.size() << " (closed form " << closed.str() << "), rank " << aot_rank << ", "
            << (aot_independent ? "independent" : "DEPENDENT") << '\n';
        out << "NSIT rows " << nsit.size() << ", rank " << nsit_rank << ", "
            << (nsit_rank == nsit.size() ? "independent" : "dependent") << '\n';
        out << "normalization rows " << norm.size() << ", redundant with AoT " << redundant.str()
            << ", rank(norm+AoT) " << norm_aot_rank << (redundancy_ok ? "" : " MISMATCH") << '\n';
    }
    return count_ok && aot_independent && redundancy_ok ? kExitVerified : kExitFalsified;
}

int cmd_equiv_ns(const RunConfig &config, std::ostream &out) {
    const Scenario scenario = config.scenario();
    const ConstraintSystem norm = build_normalization(scenario);
    const ConstraintSystem temporal[] = {norm, build_aot(scenario), build_nsit(scenario)};
    const ConstraintSystem spatial[] = {norm, build_ns(scenario)};
    const bool equal = rowspace_equal(to_matrix(temporal, true), to_matrix(spatial, true));
    if (config.json_output) {
        out << json{{"schema", kSchemaVersion}, {"scenario", to_json(scenario)}, {"equal", equal}}.dump(2) << '\n';
    } else {
        out << "scenario " << scenario.str() << ": rowspace(norm, AoT, NSIT) "
            << (equal ? "==" : "!=") << " rowspace(norm, NS)\n";
    }
    return equal ? kExitVerified : kExitFalsified;
}

int cmd_kraus_verify(const RunConfig &config, std::ostream &out) {
    if (!(config.tol > 0)) {
        throw UsageError("--tol must be positive");
    }
    if (config.trials == 0) {
        throw UsageError("--trials must be positive");
    }
    const Scenario scenario = config.scenario();
    double worst_error = 0;
    double worst_completeness = 0;
    std::optional<std::uint64_t> failed_seed;
    ExactProbVector failed_target{scenario, {}};
    for (std::size_t t = 0; t < config.trials; t++) {
        const std::uint64_t seed = config.seed + t;
        const ExactProbVector target = random_aot_point(scenario, seed);
        const RoundTripResult result = kraus_round_trip(target);
        worst_error = std::max(worst_error, result.max_error);
        worst_completeness = std::max(worst_completeness, result.completeness);
        if (!failed_seed && (result.max_error >= config.tol || result.completeness >= kConstructionTolerance)) {
            failed_seed = seed;
            failed_target = target;
        }
    }
    const bool pass = !failed_seed;
    if (config.json_output) {
        json j = {{"schema", kSchemaVersion},
                  {"scenario", to_json(scenario)},
                  {"trials", config.trials},
                  {"seed", config.seed},
                  {"tol", format_double(config.tol)},
                  {"max_error", format_double(worst_error)},
                  {"max_completeness_residual", format_double(worst_completeness)},
                  {"pass", pass}};
        if (failed_seed) {
            j["failed_seed"] = *failed_seed;
            j["failed_target"] = to_json(failed_target);
        }
        out << j.dump(2) << '\n';
    } else {
        out << "scenario " << scenario.str() << ": " << config.trials << " trials from seed " << config.seed
            << ", max error " << format_double(worst_error) << ", max completeness residual "
            << format_double(worst_completeness) << ", " << (pass ? "pass" : "FAIL") << '\n';
        if (failed_seed) {
            out << "failing seed " << *failed_seed << ", target " << to_json(failed_target).dump() << '\n';
        }
    }
    return pass ? kExitVerified : kExitFalsified;
}

struct ScanOptions {
    double start = 0.0;
    double stop = std::numbers::pi;
    std::size_t steps = 181;
    std::string state = "both";
    double threshold = 1e-6;
    std::string out_path;
};

int cmd_scan(const ScanOptions &options, std::ostream &out, std::ostream &err) {
    ScanConfig config;
    config.start = options.start;
    config.stop = options.stop;
    config.steps = options.steps;
    config.nsit_threshold = options.threshold;
    if (options.steps == 0) {
        throw UsageError("--steps must be positive");
    }
    if (options.state == "eigenstate") {
        config.states = {InitialState::Eigenstate};
    } else if (options.state == "mixed") {
        config.states = {InitialState::MaximallyMixed};
    } else if (options.state != "both") {
        throw UsageError("--state must be eigenstate, mixed or both");
    }
    const auto rows = scan_lgi_vs_nsit(config);
    Sink sink(options.out_path, out);
    write_scan_csv(sink.stream(), rows);
    sink.finish(options.out_path);

    const ScanSummary summary = summarize(rows, config.nsit_threshold);
    std::ostream &report = options.out_path.empty() ? err : out;
    report << "scan: " << summary.rows << " rows, " << summary.separating_rows
           << " with all LGIs satisfied and NSIT violated (fraction " << format_double(summary.separating_fraction)
           << "), max K " << format_double(summary.max_lgi) << " at omega_tau "
           << format_double(summary.omega_tau_at_max_lgi) << ", " << summary.pairwise_blind_rows
           << " rows with pairwise NSIT ~ 0 but three-time NSIT violated\n";
    return kExitVerified;
}

int cmd_vertices(const RunConfig &config, const std::string &model, std::ostream &out) {
    const Scenario scenario = config.scenario();
    if (model != "lr" && model != "mr") {
        throw UsageError("--model must be lr or mr");
    }
    const auto vertices =
        enumerate_vertices(scenario, model == "lr" ? RealismModel::Local : RealismModel::Macro);
    Sink sink(config.out_path, out);
    write_vertices_csv(sink.stream(), vertices);
    sink.finish(config.out_path);
    return kExitVerified;
}

int cmd_constraints(const RunConfig &config, const std::string &kind, std::ostream &out) {
    const Scenario scenario = config.scenario();
    std::optional<ConstraintSystem> system;
    if (kind == "norm") {
        system = build_normalization(scenario);
    } else if (kind == "ns") {
        system = build_ns(scenario);
    } else if (kind == "aot") {
        system = build_aot(scenario);
    } else if (kind == "nsit") {
        system = build_nsit(scenario);
    } else {
        throw UsageError("--kind must be norm, ns, aot or nsit");
    }
    Sink sink(config.out_path, out);
    sink.stream() << to_json(*system).dump(2) << '\n';
    sink.finish(config.out_path);
    return kExitVerified;
}

int cmd_witness(const std::string &path, std::ostream &out) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open witness file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw UsageError("malformed witness file '" + path + "': " + e.what());
    }
    const LinearWitness witness = witness_from_json(j);
    const auto vertices = enumerate_vertices(witness.scenario, RealismModel::Macro);
    const TightnessReport report = tightness_probe(witness, vertices);
    json zeros = json::array();
    for (const auto &z : report.zero_coordinates) {
        zeros.push_back(z.size());
    }
    out << json{{"schema", kSchemaVersion},
                {"name", witness.name},
                {"scenario", to_json(witness.scenario)},
                {"bound", to_string(witness.bound)},
                {"max_vertex_value", to_string(report.max_value)},
                {"violated_by_vertex", report.any_violation},
                {"saturating_vertices", report.saturating},
                {"zero_coordinates_per_saturating_vertex", zeros},
                {"tight_only_on_positivity_boundary", report.all_on_positivity_boundary}}
               .dump(2)
        << '\n';
    return report.any_violation ? kExitFalsified : kExitVerified;
}

int cmd_counterexample(std::uint64_t evaluations, std::uint64_t seed, bool json_output, std::ostream &out) {
    ProjectiveSearchBudget budget;
    budget.evaluations = evaluations;
    budget.seed = seed;
    const CounterexampleReport report = projective_counterexample_check(budget);
    constexpr double kDistanceFloor = 0.05;
    const bool pass = report.target_satisfies_aot && report.povm_round_trip_error < kPhysicsTolerance &&
                      report.best_projective_distance > kDistanceFloor;
    if (json_output) {
        out << json{{"schema", kSchemaVersion},
                    {"target_satisfies_aot", report.target_satisfies_aot},
                    {"povm_round_trip_error", format_double(report.povm_round_trip_error)},
                    {"povm_completeness_residual", format_double(report.povm_completeness)},
                    {"best_projective_distance", format_double(report.best_projective_distance)},
                    {"best_dimension", report.best_dimension},
                    {"evaluations", report.evaluations},
                    {"note", report.note},
                    {"pass", pass}}
                   .dump(2)
            << '\n';
    } else {
        out << "target satisfies AoT: " << (report.target_satisfies_aot ? "yes" : "NO") << '\n'
            << "POVM round-trip error: " << format_double(report.povm_round_trip_error) << '\n'
            << "best projective distance: " << format_double(report.best_projective_distance) << " (dimension "
            << report.best_dimension << ", " << report.evaluations << " evaluations)\n"
            << "note: " << report.note << '\n';
    }
    return pass ? kExitVerified : kExitFalsified;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Probability polytopes of local realism and macrorealism tests"};
    app.name("tempoly");
    app.require_subcommand(1);

    RunConfig config;
    ScanOptions scan;
    std::string vertex_model = "mr";
    std::string kind = "aot";
    std::string witness_path;
    std::uint64_t budget = 100'000;
    std::uint64_t search_seed = 7;
    bool counter_json = false;

    auto *dims = app.add_subcommand("dims", "Affine dimensions of P, NS, AoT and MR against closed forms");
    add_scenario_flags(dims, config);
    auto *conditions = app.add_subcommand("conditions", "Counts and ranks of the AoT and NSIT systems");
    add_scenario_flags(conditions, config);
    auto *equiv = app.add_subcommand("equiv-ns", "Check rowspace(norm, AoT, NSIT) == rowspace(norm, NS)");
    add_scenario_flags(equiv, config);
    auto *kraus = app.add_subcommand("kraus-verify", "Round-trip random AoT points through the Kraus construction");
    add_scenario_flags(kraus, config);
    kraus->add_option("--trials", config.trials, "Number of random targets");
    kraus->add_option("--seed", config.seed, "Seed of the first target");
    kraus->add_option("--tol", config.tol, "Maximum allowed absolute error");

    auto *scan_cmd = app.add_subcommand("scan", "Precessing-qubit LGI vs NSIT scan (CSV)");
    scan_cmd->add_option("--start", scan.start, "First omega*tau");
    scan_cmd->add_option("--stop", scan.stop, "Last omega*tau");
    scan_cmd->add_option("--steps", scan.steps, "Grid points per initial state");
    scan_cmd->add_option("--state", scan.state, "eigenstate, mixed or both");
    scan_cmd->add_option("--threshold", scan.threshold, "NSIT residual counted as a violation");
    scan_cmd->add_option("--out", scan.out_path, "CSV output path (default stdout)");

    auto *vertices = app.add_subcommand("vertices", "Deterministic LR/MR vertices as CSV");
    add_scenario_flags(vertices, config);
    vertices->add_option("--model", vertex_model, "lr or mr");
    vertices->add_option("--out", config.out_path, "CSV output path (default stdout)");

    auto *constraints = app.add_subcommand("constraints", "Export a constraint system as JSON");
    add_scenario_flags(constraints, config);
    constraints->add_option("--kind", kind, "norm, ns, aot or nsit");
    constraints->add_option("--out", config.out_path, "JSON output path (default stdout)");

    auto *witness = app.add_subcommand("witness", "Evaluate a JSON witness on the MR vertices");
    witness->add_option("--file", witness_path, "Witness definition")->required();

    auto *counter = app.add_subcommand("counterexample", "Projective-measurement counterexample check");
    counter->add_option("--budget", budget, "Search evaluations");
    counter->add_option("--seed", search_seed, "Search seed");
    counter->add_flag("--json", counter_json, "Emit a JSON report");

    std::vector<const char *> argv{"tempoly"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitVerified : kExitUsage;
    }

    try {
        if (dims->parsed()) {
            return cmd_dims(config, out);
        }
        if (conditions->parsed()) {
            return cmd_conditions(config, out);
        }
        if (equiv->parsed()) {
            return cmd_equiv_ns(config, out);
        }
        if (kraus->parsed()) {
            return cmd_kraus_verify(config, out);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(scan, out, err);
        }
        if (vertices->parsed()) {
            return cmd_vertices(config, vertex_model, out);
        }
        if (constraints->parsed()) {
            return cmd_constraints(config, kind, out);
        }
        if (witness->parsed()) {
            return cmd_witness(witness_path, out);
        }
        if (counter->parsed()) {
            return cmd_counterexample(budget, search_seed, counter_json, out);
        }
    } catch (const std::invalid_argument &e) {
        // Covers UsageError, SizeLimitError and malformed scenarios.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error &e) {
        // A construction identity failed: the claim under test did not reproduce.
        err << "error: " << e.what() << '\n';
        return kExitFalsified;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace tempoly
