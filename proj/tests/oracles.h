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

// Test-only reference computations. Nothing here calls into the sparse
// elimination or the row builders; they are the independent side of each check.

#ifndef TEMPOLY_TESTS_ORACLES_H
#define TEMPOLY_TESTS_ORACLES_H

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tempoly/constraints.h"
#include "tempoly/linalg.h"
#include "tempoly/rational.h"

namespace tempoly::oracle {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Textbook dense Gauss-Jordan over exact rationals.
inline size_t dense_rank(DenseMatrix rows) {
    if (rows.empty()) {
        return 0;
    }
    const size_t cols = rows.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); c++) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k != r && rows[k][c] != 0) {
                const Rational f = rows[k][c] / rows[r][c];
                for (size_t j = c; j < cols; j++) {
                    rows[k][j] -= f * rows[r][j];
                }
            }
        }
        r++;
    }
    return r;
}

inline DenseMatrix to_dense(const RationalMatrix &mat) {
    DenseMatrix dense(mat.row_count(), std::vector<Rational>(mat.cols()));
    for (size_t r = 0; r < mat.row_count(); r++) {
        for (const auto &[c, v] : mat.rows()[r]) {
            dense[r][c] = v;
        }
    }
    return dense;
}

/// Dense matrix of one or more systems; the rhs becomes the last column when augmented.
inline DenseMatrix to_dense(std::initializer_list<const ConstraintSystem *> systems, bool augmented) {
    const size_t coords = (*systems.begin())->scenario.unchecked_coordinate_count();
    DenseMatrix dense;
    for (const auto *system : systems) {
        for (const auto &row : system->rows) {
            std::vector<Rational> d(augmented ? coords + 1 : coords);
            for (const auto &t : row.terms) {
                d[t.index] += t.coeff;
            }
            if (augmented) {
                d[coords] = row.rhs;
            }
            dense.push_back(std::move(d));
        }
    }
    return dense;
}

/// Integer power by repeated multiplication.
inline std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int k = 0; k < exp; k++) {
        r *= base;
    }
    return r;
}

/// Decodes a flat index into per-time (setting, outcome) pairs by repeated division,
/// written without the library's unflatten.
inline std::vector<std::pair<int, int>> decode(std::uint64_t index, int n, int m, int delta) {
    const auto base = static_cast<std::uint64_t>(m * delta + 1);
    std::vector<std::pair<int, int>> out(n);
    for (int i = n - 1; i >= 0; i--) {
        const int code = static_cast<int>(index % base);
        index /= base;
        out[i] = code == 0 ? std::pair{0, 0} : std::pair{(code - 1) / delta + 1, (code - 1) % delta + 1};
    }
    return out;
}

/// Brute-force marginalization row count: one row per (position i, coordinate)
/// with s_i != 0 and q_i == 1 (the representative of the summed-out outcome),
/// filtered by `keep(settings, i)`.
template <typename Keep>
size_t count_marginal_rows(int n, int m, int delta, Keep keep) {
    size_t count = 0;
    const std::uint64_t total = ipow(m * delta + 1, n);
    for (std::uint64_t idx = 0; idx < total; idx++) {
        const auto pairs = decode(idx, n, m, delta);
        std::vector<int> s(n);
        for (int i = 0; i < n; i++) {
            s[i] = pairs[i].first;
        }
        for (int i = 0; i < n; i++) {
            if (pairs[i].first != 0 && pairs[i].second == 1 && keep(s, i)) {
                count++;
            }
        }
    }
    return count;
}

inline bool any_nonzero(const std::vector<int> &s, int begin, int end) {
    for (int k = begin; k < end; k++) {
        if (s[k] != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace tempoly::oracle

#endif
