// Copyright 2026 The qccdec Authors
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

#ifndef QCC_POLY_MATRIX_H
#define QCC_POLY_MATRIX_H

#include <vector>

#include "qcc/rat_matrix.h"

namespace qcc {

/// Matrix over the polynomial ring F[D], used where unimodular (degree
/// preserving) row operations matter: saturated kernels, minimal bases and
/// polynomial left inverses.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols, Field field);
    /// Throws Error if any entry has a nontrivial denominator.
    explicit PolyMatrix(const RatMatrix &m);

    static PolyMatrix identity(size_t n, Field field);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    Field field() const {
        return field_;
    }
    Poly &at(size_t r, size_t c) {
        return rows_[r][c];
    }
    const Poly &at(size_t r, size_t c) const {
        return rows_[r][c];
    }
    std::vector<Poly> &row(size_t r) {
        return rows_[r];
    }
    const std::vector<Poly> &row(size_t r) const {
        return rows_[r];
    }

    /// Degree of the highest entry in row r; -1 for a zero row.
    int row_degree(size_t r) const;
    RatMatrix to_rat() const;

   private:
    size_t cols_ = 0;
    Field field_ = Field::GF2;
    std::vector<std::vector<Poly>> rows_;
};

/// U * m = reduced, with U unimodular and `reduced` in row echelon form whose
/// first `rank` rows are nonzero and whose pivots are monic.
struct RowEchelon {
    PolyMatrix transform;
    PolyMatrix reduced;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

RowEchelon hermite_row_reduce(const PolyMatrix &m);

/// Basis of {g in F[D]^n : g * m = 0} for an n x r matrix of rank r. The basis
/// is basic (it has a polynomial right inverse), hence delay-free and
/// non-catastrophic.
PolyMatrix basic_left_kernel(const PolyMatrix &m);

/// Applies unimodular row operations until the leading-coefficient matrix has
/// full rank, which makes a basic matrix minimal-basic: total row degree is
/// then the least over all encoders of the same code.
PolyMatrix minimal_basis(PolyMatrix g);

/// Left inverse of a full column rank polynomial matrix derived from the
/// echelon form. Its entries are Laurent polynomials whenever the gcd of the
/// maximal minors of m is a power of D.
RatMatrix echelon_left_inverse(const PolyMatrix &m);

}  // namespace qcc

#endif
