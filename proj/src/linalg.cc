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

#include "tempoly/linalg.h"

#include <algorithm>
#include <map>
#include <string>

namespace tempoly {

void RationalMatrix::add_row(std::vector<std::pair<size_t, Rational>> entries) {
    std::map<size_t, Rational> merged;
    for (auto &[col, value] : entries) {
        if (col >= cols_) {
            throw std::out_of_range(
                "column " + std::to_string(col) + " out of range for matrix with " + std::to_string(cols_) + " columns");
        }
        merged[col] += value;
    }
    SparseRationalRow row;
    row.reserve(merged.size());
    for (auto &[col, value] : merged) {
        if (value != 0) {
            row.emplace_back(col, std::move(value));
        }
    }
    rows_.push_back(std::move(row));
}

void RationalMatrix::add_dense_row(std::span<const Rational> values) {
    if (values.size() != cols_) {
        throw std::invalid_argument("dense row length does not match column count");
    }
    SparseRationalRow row;
    for (size_t k = 0; k < values.size(); k++) {
        if (values[k] != 0) {
            row.emplace_back(k, values[k]);
        }
    }
    rows_.push_back(std::move(row));
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix &other) const {
    if (other.cols_ != cols_) {
        throw std::invalid_argument(
            "cannot stack matrices with " + std::to_string(cols_) + " and " + std::to_string(other.cols_) + " columns");
    }
    RationalMatrix result = *this;
    result.rows_.insert(result.rows_.end(), other.rows_.begin(), other.rows_.end());
    return result;
}

namespace {

using IntRow = std::vector<std::pair<size_t, BigInt>>;

void make_primitive(IntRow &row) {
    if (row.empty()) {
        return;
    }
    BigInt g = 0;
    for (const auto &e : row) {
        g = gcd(g, abs(e.second));
        if (g == 1) {
            return;
        }
    }
    for (auto &e : row) {
        e.second /= g;
    }
}

IntRow to_integer_row(const SparseRationalRow &row) {
    BigInt scale = 1;
    for (const auto &e : row) {
        scale = lcm(scale, BigInt(boost::multiprecision::denominator(e.second)));
    }
    IntRow result;
    result.reserve(row.size());
    for (const auto &e : row) {
        BigInt num = boost::multiprecision::numerator(e.second);
        BigInt den = boost::multiprecision::denominator(e.second);
        result.emplace_back(e.first, num * (scale / den));
    }
    make_primitive(result);
    return result;
}

// row <- a*row - b*pivot, where a and b are chosen so the shared leading column cancels.
IntRow eliminate_leading(const IntRow &row, const IntRow &pivot) {
    BigInt a = pivot.front().second;
    BigInt b = row.front().second;
    BigInt g = gcd(abs(a), abs(b));
    a /= g;
    b /= g;
    IntRow result;
    result.reserve(row.size() + pivot.size());
    size_t i = 1;
    size_t j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            result.emplace_back(row[i].first, a * row[i].second);
            i++;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            result.emplace_back(pivot[j].first, -b * pivot[j].second);
            j++;
        } else {
            BigInt v = a * row[i].second - b * pivot[j].second;
            if (v != 0) {
                result.emplace_back(row[i].first, std::move(v));
            }
            i++;
            j++;
        }
    }
    make_primitive(result);
    return result;
}

}  // namespace

size_t rank(const RationalMatrix &mat) {
    std::vector<IntRow> pending;
    pending.reserve(mat.row_count());
    for (const auto &row : mat.rows()) {
        if (!row.empty()) {
            pending.push_back(to_integer_row(row));
        }
    }
    // Short rows first: they make sparse pivots and limit fill-in.
    std::stable_sort(pending.begin(), pending.end(), [](const IntRow &x, const IntRow &y) {
        return x.size() < y.size();
    });

    std::vector<IntRow> pivot_by_col(mat.cols());
    size_t result = 0;
    for (auto &row : pending) {
        while (!row.empty()) {
            const IntRow &pivot = pivot_by_col[row.front().first];
            if (pivot.empty()) {
                pivot_by_col[row.front().first] = std::move(row);
                result++;
                break;
            }
            row = eliminate_leading(row, pivot);
        }
    }
    return result;
}

RationalMatrix to_matrix(std::span<const ConstraintSystem> systems, bool augmented) {
    if (systems.empty()) {
        throw std::invalid_argument("no constraint systems given");
    }
    const size_t coords = systems.front().scenario.unchecked_coordinate_count();
    RationalMatrix mat(augmented ? coords + 1 : coords);
    for (const auto &system : systems) {
        if (system.scenario != systems.front().scenario) {
            throw std::invalid_argument("constraint systems belong to different scenarios");
        }
        for (const auto &row : system.rows) {
            std::vector<std::pair<size_t, Rational>> entries;
            entries.reserve(row.terms.size() + 1);
            for (const auto &t : row.terms) {
                entries.emplace_back(static_cast<size_t>(t.index), t.coeff);
            }
            if (augmented && row.rhs != 0) {
                entries.emplace_back(coords, row.rhs);
            }
            mat.add_row(std::move(entries));
        }
    }
    return mat;
}

size_t affine_solution_dim(std::span<const ConstraintSystem> systems, const Scenario &scenario) {
    for (const auto &system : systems) {
        if (system.scenario != scenario) {
            throw std::invalid_argument(
                "constraint system for " + system.scenario.str() + " used with " + scenario.str());
        }
    }
    const size_t coords = coordinate_count(scenario);
    if (systems.empty()) {
        return coords;
    }
    const size_t coefficient_rank = rank(to_matrix(systems, false));
    const size_t augmented_rank = rank(to_matrix(systems, true));
    if (augmented_rank != coefficient_rank) {
        throw InconsistentSystemError(
            "constraint system for " + scenario.str() + " is inconsistent (rank " + std::to_string(coefficient_rank) +
            ", augmented rank " + std::to_string(augmented_rank) + ")");
    }
    return coords - coefficient_rank;
}

bool rowspace_equal(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument(
            "column mismatch: " + std::to_string(a.cols()) + " vs " + std::to_string(b.cols()));
    }
    const size_t ra = rank(a);
    const size_t rb = rank(b);
    if (ra != rb) {
        return false;
    }
    return rank(a.stacked(b)) == ra;
}

}  // namespace tempoly
