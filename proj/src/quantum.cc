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

#include "tempoly/quantum.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace tempoly {

namespace {

struct Layout {
    Scenario scenario;
    std::uint64_t base;
    std::vector<std::uint64_t> place;  // place[i] = base^(n-1-i)

    explicit Layout(const Scenario &s)
        : scenario(s), base(static_cast<std::uint64_t>(s.combo_count())), place(s.n()) {
        std::uint64_t v = 1;
        for (int i = s.n() - 1; i >= 0; i--) {
            place[i] = v;
            v *= base;
        }
    }

    int code_at(std::uint64_t index, int time) const { return static_cast<int>((index / place[time]) % base); }

    // Index of the last nonzero code, or -1.
    int last_code_position(std::uint64_t index) const {
        for (int i = scenario.n() - 1; i >= 0; i--) {
            if (code_at(index, i) != 0) {
                return i;
            }
        }
        return -1;
    }
};

void check_real_input(const RealProbVector &p, double tolerance) {
    const auto expected = coordinate_count(p.scenario);
    if (p.values.size() != expected) {
        throw std::invalid_argument("probability vector has " + std::to_string(p.values.size()) +
                                    " entries, expected " + std::to_string(expected));
    }
    for (size_t k = 0; k < p.values.size(); k++) {
        if (!(p.values[k] >= -tolerance)) {
            throw std::invalid_argument("negative probability at flat index " + std::to_string(k));
        }
    }
    const auto norm = build_normalization(p.scenario);
    for (const auto &row : norm.rows) {
        if (std::abs(row_residual<double>(row, p.values)) > tolerance) {
            throw std::invalid_argument("normalization violated: " + row.label);
        }
    }
    const auto aot = build_aot(p.scenario);
    for (const auto &row : aot.rows) {
        double r = row_residual<double>(row, p.values);
        if (std::abs(r) > tolerance) {
            std::ostringstream msg;
            msg << "arrow of time violated by " << r << ": " << row.label;
            throw AotViolationError(msg.str(), row.label);
        }
    }
}

}  // namespace

ConditionalTable conditionals_from_joint(const RealProbVector &p, double tolerance) {
    check_real_input(p, tolerance);
    const Layout layout(p.scenario);
    const int delta = p.scenario.delta();
    ConditionalTable table{p.scenario, std::vector<double>(p.values.size(), 1.0)};
    for (std::uint64_t idx = 0; idx < p.values.size(); idx++) {
        const int last = layout.last_code_position(idx);
        if (last < 0) {
            continue;
        }
        const int code = layout.code_at(idx, last);
        const int setting = (code - 1) / delta + 1;
        const std::uint64_t prefix = idx - static_cast<std::uint64_t>(code) * layout.place[last];
        double siblings = 0;
        for (int q = 1; q <= delta; q++) {
            auto sib = prefix + static_cast<std::uint64_t>(combo_code(p.scenario, setting, q)) * layout.place[last];
            siblings += std::max(0.0, p.values[sib]);
        }
        table.values[idx] = siblings > 0 ? std::max(0.0, p.values[idx]) / siblings : 1.0 / delta;
    }
    return table;
}

ConditionalTable conditionals_from_joint(const ExactProbVector &p) {
    const auto expected = coordinate_count(p.scenario);
    if (p.values.size() != expected) {
        throw std::invalid_argument("probability vector has wrong length");
    }
    const auto norm = build_normalization(p.scenario);
    if (long row = first_violated_row(norm, p.values); row >= 0) {
        throw std::invalid_argument("normalization violated: " + norm.rows[row].label);
    }
    const auto aot = build_aot(p.scenario);
    if (long row = first_violated_row(aot, p.values); row >= 0) {
        throw AotViolationError("arrow of time violated: " + aot.rows[row].label, aot.rows[row].label);
    }
    const Layout layout(p.scenario);
    ConditionalTable table{p.scenario, std::vector<double>(p.values.size(), 1.0)};
    for (std::uint64_t idx = 0; idx < p.values.size(); idx++) {
        if (p.values[idx] < 0) {
            throw std::invalid_argument("negative probability at flat index " + std::to_string(idx));
        }
        const int last = layout.last_code_position(idx);
        if (last < 0) {
            continue;
        }
        const std::uint64_t prefix = idx - static_cast<std::uint64_t>(layout.code_at(idx, last)) * layout.place[last];
        const Rational &marginal = p.values[prefix];
        table.values[idx] = marginal == 0 ? 1.0 / p.scenario.delta() : to_double(p.values[idx] / marginal);
    }
    return table;
}

const SparseOperator &KrausSet::op(int time, int setting, int outcome) const {
    if (time < 0 || time >= scenario_.n() || setting < 0 || setting > scenario_.m()) {
        throw std::out_of_range("Kraus operator index out of range");
    }
    const int slot = setting == 0 ? 0 : outcome - 1;
    if ((setting == 0 && outcome != 0) || (setting != 0 && (outcome < 1 || outcome > scenario_.delta()))) {
        throw std::out_of_range("Kraus operator outcome out of range");
    }
    return ops_[time][setting][slot];
}

KrausSet build_kraus(const ConditionalTable &table) {
    const Scenario &scenario = table.scenario;
    const Layout layout(scenario);
    const std::uint64_t dim = coordinate_count(scenario);
    if (table.values.size() != dim) {
        throw std::invalid_argument("conditional table has wrong length");
    }
    const int n = scenario.n();
    const int m = scenario.m();
    const int delta = scenario.delta();
    const double uniform = 1.0 / std::sqrt(static_cast<double>(delta));
    const double others = 1.0 / std::sqrt(static_cast<double>(delta - 1));

    std::vector<std::vector<std::vector<SparseOperator>>> ops(n);
    for (int i = 0; i < n; i++) {
        ops[i].resize(m + 1);
        // Histories of length i: every code at positions >= i is zero.
        const std::uint64_t history_count = dim / (layout.place[i] * layout.base);
        const std::uint64_t history_stride = layout.place[i] * layout.base;

        SparseOperator identity(dim, dim);
        identity.setIdentity();
        ops[i][0].push_back(identity);

        for (int s = 1; s <= m; s++) {
            for (int q = 1; q <= delta; q++) {
                std::vector<Eigen::Triplet<Complex>> triplets;
                triplets.reserve(dim + history_count);
                const std::uint64_t step = static_cast<std::uint64_t>(combo_code(scenario, s, q)) * layout.place[i];
                for (std::uint64_t h = 0; h < history_count; h++) {
                    const std::uint64_t from = h * history_stride;
                    const std::uint64_t to = from + step;
                    triplets.emplace_back(to, from, std::sqrt(table.values[to]));
                }
                for (std::uint64_t x = 0; x < dim; x++) {
                    const int last = layout.last_code_position(x);
                    if (last < i) {
                        continue;  // history state, handled above
                    }
                    double coeff = uniform;
                    if (last == i) {
                        const int code = layout.code_at(x, i);
                        const int image_setting = (code - 1) / delta + 1;
                        const int image_outcome = (code - 1) % delta + 1;
                        // x is an image of the history map for outcome image_outcome.
                        if (image_setting == s) {
                            coeff = image_outcome == q ? 0.0 : others;
                        }
                    }
                    if (coeff != 0.0) {
                        triplets.emplace_back(x, x, coeff);
                    }
                }
                SparseOperator op(dim, dim);
                op.setFromTriplets(triplets.begin(), triplets.end());
                op.makeCompressed();
                ops[i][s].push_back(std::move(op));
            }
        }
    }
    return KrausSet(scenario, std::move(ops));
}

double completeness_residual(const KrausSet &kraus) {
    const Scenario &scenario = kraus.scenario();
    const auto dim = static_cast<Eigen::Index>(kraus.dimension());
    double worst = 0;
    for (int i = 0; i < scenario.n(); i++) {
        for (int s = 0; s <= scenario.m(); s++) {
            SparseOperator total(dim, dim);
            if (s == 0) {
                const auto &k = kraus.op(i, 0, 0);
                total = SparseOperator(k.adjoint()) * k;
            } else {
                for (int q = 1; q <= scenario.delta(); q++) {
                    const auto &k = kraus.op(i, s, q);
                    total += SparseOperator(SparseOperator(k.adjoint()) * k);
                }
            }
            SparseOperator identity(dim, dim);
            identity.setIdentity();
            SparseOperator diff = total - identity;
            for (Eigen::Index col = 0; col < diff.outerSize(); col++) {
                for (SparseOperator::InnerIterator it(diff, col); it; ++it) {
                    worst = std::max(worst, std::abs(it.value()));
                }
            }
        }
    }
    return worst;
}

std::vector<double> simulate_sequential(const KrausSet &kraus, const SettingVector &s, double tolerance) {
    const Scenario &scenario = kraus.scenario();
    const auto dim = static_cast<Eigen::Index>(kraus.dimension());
    Eigen::VectorXcd initial = Eigen::VectorXcd::Zero(dim);
    initial[0] = 1.0;
    std::vector<double> probabilities;
    double total = 0;
    for (const auto &q : outcomes_for(scenario, s)) {
        Eigen::VectorXcd psi = initial;
        for (int i = 0; i < scenario.n(); i++) {
            psi = kraus.op(i, s[i], q[i]) * psi;
        }
        probabilities.push_back(psi.squaredNorm());
        total += probabilities.back();
    }
    if (std::abs(total - 1.0) > tolerance) {
        std::ostringstream msg;
        msg << "simulated distribution for settings " << format_vector(s.values) << " sums to " << total;
        throw std::logic_error(msg.str());
    }
    return probabilities;
}

RealProbVector simulate_all(const KrausSet &kraus) {
    const Scenario &scenario = kraus.scenario();
    RealProbVector p{scenario, std::vector<double>(kraus.dimension(), 0.0)};
    for (const auto &s : enumerate_settings(scenario)) {
        auto outcomes = outcomes_for(scenario, s);
        auto probabilities = simulate_sequential(kraus, s);
        for (size_t k = 0; k < outcomes.size(); k++) {
            p.values[flat_index(scenario, s, outcomes[k])] = probabilities[k];
        }
    }
    return p;
}

double max_abs_difference(const RealProbVector &a, const RealProbVector &b) {
    if (a.scenario != b.scenario || a.values.size() != b.values.size()) {
        throw std::invalid_argument("probability vectors belong to different scenarios");
    }
    double worst = 0;
    for (size_t k = 0; k < a.values.size(); k++) {
        worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
    }
    return worst;
}

RoundTripResult kraus_round_trip(const ExactProbVector &target) {
    const KrausSet kraus = build_kraus(conditionals_from_joint(target));
    RoundTripResult result;
    result.completeness = completeness_residual(kraus);
    result.max_error = max_abs_difference(simulate_all(kraus), to_real(target));
    return result;
}

ExactProbVector random_aot_point(const Scenario &scenario, std::uint64_t seed) {
    constexpr int kLatticeBits = 20;
    const BigInt lattice = BigInt(1) << kLatticeBits;
    const std::uint64_t dim = coordinate_count(scenario);
    const Layout layout(scenario);
    const int delta = scenario.delta();
    std::mt19937_64 rng(seed);

    ExactProbVector p{scenario, std::vector<Rational>(dim)};
    p.values[0] = 1;
    std::vector<std::uint64_t> cuts(delta - 1);
    // A prefix always has a smaller flat index than its extensions.
    for (std::uint64_t idx = 1; idx < dim; idx++) {
        const int last = layout.last_code_position(idx);
        const int code = layout.code_at(idx, last);
        if ((code - 1) % delta != 0) {
            continue;  // not the first sibling; filled with its group
        }
        const std::uint64_t prefix = idx - static_cast<std::uint64_t>(code) * layout.place[last];
        for (auto &c : cuts) {
            c = rng() >> (64 - kLatticeBits);
        }
        std::sort(cuts.begin(), cuts.end());
        std::uint64_t previous = 0;
        for (int q = 0; q < delta; q++) {
            const std::uint64_t next = q + 1 < delta ? cuts[q] : (std::uint64_t{1} << kLatticeBits);
            const Rational conditional(BigInt(next - previous), lattice);
            p.values[idx + static_cast<std::uint64_t>(q) * layout.place[last]] = conditional * p.values[prefix];
            previous = next;
        }
    }
    return p;
}

}  // namespace tempoly
