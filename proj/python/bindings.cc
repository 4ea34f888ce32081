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

// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the pure-Python wrapper; exact rationals travel as "num/den" strings.

#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempoly/constraints.h"
#include "tempoly/geometry.h"
#include "tempoly/inequalities.h"
#include "tempoly/io.h"
#include "tempoly/linalg.h"
#include "tempoly/quantum.h"
#include "tempoly/scenario.h"

namespace py = pybind11;
using nlohmann::json;

namespace tempoly {
namespace {

ConstraintSystem build_kind(const Scenario &s, const std::string &kind) {
    if (kind == "norm") {
        return build_normalization(s);
    }
    if (kind == "ns") {
        return build_ns(s);
    }
    if (kind == "aot") {
        return build_aot(s);
    }
    if (kind == "nsit") {
        return build_nsit(s);
    }
    throw std::invalid_argument("kind must be norm, ns, aot or nsit");
}

std::vector<std::string> exact_strings(const ExactProbVector &p) {
    std::vector<std::string> out;
    out.reserve(p.values.size());
    for (const auto &v : p.values) {
        out.push_back(to_string(v));
    }
    return out;
}

ExactProbVector exact_from_strings(const Scenario &s, const std::vector<std::string> &values) {
    ExactProbVector p{s, {}};
    for (const auto &v : values) {
        p.values.push_back(parse_rational(v));
    }
    if (p.values.size() != coordinate_count(s)) {
        throw std::invalid_argument("probability vector length does not match its scenario");
    }
    return p;
}

InitialState state_from_string(const std::string &name) {
    if (name == "eigenstate") {
        return InitialState::Eigenstate;
    }
    if (name == "mixed") {
        return InitialState::MaximallyMixed;
    }
    throw std::invalid_argument("state must be 'eigenstate' or 'mixed'");
}

size_t system_rank(const Scenario &s, const std::vector<std::string> &kinds, bool augmented) {
    std::vector<ConstraintSystem> systems;
    for (const auto &k : kinds) {
        systems.push_back(build_kind(s, k));
    }
    return rank(to_matrix(systems, augmented));
}

}  // namespace
}  // namespace tempoly

PYBIND11_MODULE(_core, m) {
    using namespace tempoly;
    m.doc() = "Probability polytopes of local-realism and macrorealism tests";

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<int, int, int>(), py::arg("n"), py::arg("m"), py::arg("delta"))
        .def_property_readonly("n", &Scenario::n)
        .def_property_readonly("m", &Scenario::m)
        .def_property_readonly("delta", &Scenario::delta)
        .def("coordinate_count", [](const Scenario &s, std::uint64_t limit) { return coordinate_count(s, limit); },
             py::arg("limit") = kDefaultCoordinateLimit)
        .def("flat_index",
             [](const Scenario &s, std::vector<int> settings, std::vector<int> outcomes) {
                 return flat_index(s, SettingVector{std::move(settings)}, OutcomeVector{std::move(outcomes)});
             })
        .def("unflatten",
             [](const Scenario &s, std::uint64_t index) {
                 const Coordinate c = unflatten(s, index);
                 return py::make_tuple(c.settings.values, c.outcomes.values);
             })
        .def("__eq__", [](const Scenario &a, const Scenario &b) { return a == b; })
        .def("__repr__", &Scenario::str);

    m.def("dimension_report_json",
          [](const Scenario &s, std::uint64_t limit) { return to_json(dimension_report(s, limit)).dump(); },
          py::arg("scenario"), py::arg("limit") = kDefaultCoordinateLimit);
    m.def("constraint_system_json", [](const Scenario &s, const std::string &kind) {
        return to_json(build_kind(s, kind)).dump();
    });
    m.def("rank", &system_rank, py::arg("scenario"), py::arg("kinds"), py::arg("augmented") = false);
    m.def("count_aot_closed_form", [](const Scenario &s) { return count_aot_closed_form(s).str(); });
    m.def("count_redundant_normalizations", [](const Scenario &s) { return count_redundant_normalizations(s).str(); });
    m.def("equivalent_to_ns", [](const Scenario &s) {
        const std::vector<ConstraintSystem> temporal{build_normalization(s), build_aot(s), build_nsit(s)};
        const std::vector<ConstraintSystem> spatial{build_normalization(s), build_ns(s)};
        return rowspace_equal(to_matrix(temporal, true), to_matrix(spatial, true));
    });

    m.def("vertices", [](const Scenario &s, const std::string &model) {
        if (model != "lr" && model != "mr") {
            throw std::invalid_argument("model must be 'lr' or 'mr'");
        }
        std::vector<std::vector<std::string>> out;
        for (const auto &v : enumerate_vertices(s, model == "lr" ? RealismModel::Local : RealismModel::Macro)) {
            out.push_back(exact_strings(v));
        }
        return out;
    });
    m.def("hull_dimension", [](const Scenario &s, const std::string &model) {
        return affine_dim_of_hull(enumerate_vertices(s, model == "lr" ? RealismModel::Local : RealismModel::Macro));
    });

    m.def("random_aot_point", [](const Scenario &s, std::uint64_t seed) {
        return exact_strings(random_aot_point(s, seed));
    });
    m.def("kraus_round_trip", [](const Scenario &s, const std::vector<std::string> &values) {
        const RoundTripResult r = kraus_round_trip(exact_from_strings(s, values));
        return py::make_tuple(r.max_error, r.completeness);
    });
    m.def("conditionals_json", [](const Scenario &s, const std::vector<std::string> &values) {
        return to_json(conditionals_from_joint(exact_from_strings(s, values))).dump();
    });
    m.def("first_violated_row",
          [](const Scenario &s, const std::string &kind, const std::vector<std::string> &values) {
              return first_violated_row(build_kind(s, kind), exact_from_strings(s, values).values);
          });

    m.def("simulate_qubit",
          [](const Scenario &s, double omega_tau, const std::string &state, std::vector<double> angles) {
              QubitModel model = state_from_string(state) == InitialState::Eigenstate
                                     ? QubitModel::eigenstate(omega_tau)
                                     : QubitModel::maximally_mixed(omega_tau);
              model.measurement_angles = std::move(angles);
              return simulate_qubit(model, s).values;
          },
          py::arg("scenario"), py::arg("omega_tau"), py::arg("state") = "eigenstate",
          py::arg("angles") = std::vector<double>{0.0});
    m.def("simulate_singlet", [](const Scenario &s, const std::vector<double> &a, const std::vector<double> &b) {
        return simulate_singlet(s, a, b).values;
    });
    m.def("witness_json", [](const std::string &name) {
        if (name == "chsh") {
            return to_json(chsh_witness(Scenario(2, 2, 2))).dump();
        }
        if (name == "lgi3") {
            return to_json(lgi3_witness(Scenario(3, 1, 2))).dump();
        }
        throw std::invalid_argument("witness must be 'chsh' or 'lgi3'");
    });
    m.def("evaluate_witness", [](const std::string &witness_json, const std::vector<double> &values) {
        return evaluate(witness_from_json(json::parse(witness_json)), std::span<const double>(values));
    });

    m.def("scan",
          [](double start, double stop, size_t steps, const std::vector<std::string> &states, double threshold) {
              ScanConfig config;
              config.start = start;
              config.stop = stop;
              config.steps = steps;
              config.nsit_threshold = threshold;
              config.states.clear();
              for (const auto &name : states) {
                  config.states.push_back(state_from_string(name));
              }
              py::list rows;
              for (const auto &r : scan_lgi_vs_nsit(config)) {
                  py::dict row;
                  row["omega_tau"] = r.omega_tau;
                  row["state"] = std::string(to_string(r.state));
                  row["lgi_values"] = std::vector<double>(r.lgi_values.begin(), r.lgi_values.end());
                  row["lgi_ok"] = r.lgi_ok;
                  row["max_nsit_residual"] = r.max_nsit_residual;
                  row["max_pairwise_nsit_residual"] = r.max_pairwise_nsit_residual;
                  row["separates"] = r.separates;
                  rows.append(row);
              }
              return rows;
          },
          py::arg("start") = 0.0, py::arg("stop") = 3.141592653589793, py::arg("steps") = 181,
          py::arg("states") = std::vector<std::string>{"eigenstate", "mixed"}, py::arg("threshold") = 1e-6);

    m.def("projective_counterexample",
          [](std::uint64_t evaluations, int max_dimension, std::uint64_t seed) {
              const CounterexampleReport r =
                  projective_counterexample_check(ProjectiveSearchBudget{evaluations, max_dimension, seed});
              py::dict out;
              out["target_satisfies_aot"] = r.target_satisfies_aot;
              out["povm_round_trip_error"] = r.povm_round_trip_error;
              out["povm_completeness"] = r.povm_completeness;
              out["best_projective_distance"] = r.best_projective_distance;
              out["best_dimension"] = r.best_dimension;
              out["evaluations"] = r.evaluations;
              out["note"] = r.note;
              return out;
          },
          py::arg("evaluations") = 100000, py::arg("max_dimension") = 4, py::arg("seed") = 7);
}
