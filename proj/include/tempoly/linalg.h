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

#ifndef TEMPOLY_LINALG_H
#define TEMPOLY_LINALG_H

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tempoly/constraints.h"
#include "tempoly/rational.h"

namespace tempoly {

/// Sparse row: (column, value) pairs with strictly increasing columns and no zero values.
using SparseRationalRow = std::vector<std::pair<size_t, Rational>>;

/// Exact rational matrix stored as sparse rows.
class RationalMatrix {
   public:
    explicit RationalMatrix(size_t cols) : cols_(cols) {}

    size_t cols() const { return cols_; }
    size_t row_count() const { return rows_.size(); }
    const std::vector<SparseRationalRow> &rows() const { return rows_; }

    /// Entries may come in any order; duplicates are summed and zeros dropped.
    /// Throws std::out_of_range on a column index >= cols().
    void add_row(std::vector<std::pair<size_t, Rational>> entries);
    void add_dense_row(std::span<const Rational> values);

    /// Rows of `other` appended below this matrix. Column counts must agree.
    RationalMatrix stacked(const RationalMatrix &other) const;

   private:
    size_t cols_;
    std::vector<SparseRationalRow> rows_;
};

struct InconsistentSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rank by fraction-free elimination over arbitrary-precision integers.
size_t rank(const RationalMatrix &mat);

/// Coefficient matrix of the stacked systems; with `augmented` the rhs is the last column.
RationalMatrix to_matrix(std::span<const ConstraintSystem> systems, bool augmented);

/// coordinate_count - rank of the stacked coefficient matrix.
///
/// Throws InconsistentSystemError if the augmented rank exceeds the
/// coefficient rank, and std::invalid_argument if a system belongs to a
/// different scenario.
size_t affine_solution_dim(std::span<const ConstraintSystem> systems, const Scenario &scenario);

/// rank(a) == rank(b) == rank(a stacked on b). Throws std::invalid_argument on column mismatch.
bool rowspace_equal(const RationalMatrix &a, const RationalMatrix &b);

}  // namespace tempoly

#endif
