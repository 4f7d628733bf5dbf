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

#ifndef QCC_RAT_MATRIX_H
#define QCC_RAT_MATRIX_H

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qcc/poly.h"

namespace qcc {

/// Dense matrix over the rational function field F(D).
///
/// Streams are row vectors: a system with transfer matrix M maps an input row
/// u(D) to u(D) * M, so M has one row per input stream and one column per
/// output stream.
class RatMatrix {
   public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols, Field field);

    static RatMatrix identity(size_t n, Field field);
    static RatMatrix from_polys(const std::vector<std::vector<Poly>> &rows);
    /// Parses each entry with parse_rational.
    static RatMatrix parse(std::initializer_list<std::initializer_list<const char *>> rows, Field field);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Field field() const {
        return field_;
    }
    const RationalFn &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(size_t r, size_t c, RationalFn value);

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix &o) const;
    RatMatrix operator+(const RatMatrix &o) const;
    bool operator==(const RatMatrix &o) const = default;

    bool is_zero() const;
    bool is_identity() const;
    bool is_polynomial() const;
    bool is_laurent() const;
    RatMatrix conj() const;
    RatMatrix promoted() const;
    RatMatrix row_block(size_t begin, size_t end) const;
    /// Every entry multiplied by D^k (k may be negative).
    RatMatrix times_power(int k) const;
    /// Largest degree among polynomial entries; -1 for the zero matrix.
    int max_degree() const;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    Field field_ = Field::GF2;
    std::vector<RationalFn> entries_;
};

enum class Substitution { Square, Invert };

/// Entry-wise D -> D^2 or D -> 1/D.
RatMatrix substitute(const RatMatrix &m, Substitution map);

size_t rank(const RatMatrix &m);

/// L with L * m = I for an n x r matrix of rank r, by Gauss-Jordan elimination.
/// Throws RankError when the rank is below r.
RatMatrix left_inverse(const RatMatrix &m);

/// (m^T m)^-1 m^T, or nullopt when the Gram matrix is singular (which can
/// happen at full rank in characteristic 2).
std::optional<RatMatrix> left_inverse_moore_penrose(const RatMatrix &m);

/// Polynomial basis G of the left null space (G * m = 0) of an n x r matrix of
/// rank r. Rows come from elimination, are cleared of denominators, divided
/// by their gcd and scaled so the first nonzero entry has a monic leading term.
RatMatrix null_space_basis(const RatMatrix &m);

/// Determinant of a square matrix.
RationalFn determinant(const RatMatrix &m);

/// gcd of all k x k minors of a k x n polynomial matrix.
Poly minors_gcd(const RatMatrix &g);

/// A polynomial generator is non-catastrophic iff its minors gcd is a power of D.
bool is_non_catastrophic(const RatMatrix &g);

}  // namespace qcc

#endif
