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

#include "qcc/rat_matrix.h"

#include <algorithm>

#include "qcc/errors.h"

namespace qcc {

RatMatrix::RatMatrix(size_t rows, size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, RationalFn(field)) {
}

RatMatrix RatMatrix::identity(size_t n, Field field) {
    RatMatrix m(n, n, field);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, RationalFn(Poly::one(field)));
    }
    return m;
}

RatMatrix RatMatrix::from_polys(const std::vector<std::vector<Poly>> &rows) {
    if (rows.empty() || rows[0].empty()) {
        throw Error("from_polys: empty matrix");
    }
    RatMatrix m(rows.size(), rows[0].size(), rows[0][0].field());
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != m.cols_) {
            throw Error("from_polys: ragged rows");
        }
        for (size_t c = 0; c < m.cols_; c++) {
            m.set(r, c, RationalFn(rows[r][c]));
        }
    }
    return m;
}

RatMatrix RatMatrix::parse(std::initializer_list<std::initializer_list<const char *>> rows, Field field) {
    size_t cols = rows.begin()->size();
    RatMatrix m(rows.size(), cols, field);
    size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != cols) {
            throw ParseError("ragged matrix literal");
        }
        size_t c = 0;
        for (const char *text : row) {
            m.set(r, c++, parse_rational(text, field));
        }
        r++;
    }
    return m;
}

void RatMatrix::set(size_t r, size_t c, RationalFn value) {
    if (value.field() != field_) {
        throw FieldMismatchError("matrix entry over a different field");
    }
    entries_[r * cols_ + c] = std::move(value);
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_, field_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.set(c, r, (*this)(r, c));
        }
    }
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix &o) const {
    if (field_ != o.field_) {
        throw FieldMismatchError("matrix product over different fields");
    }
    if (cols_ != o.rows_) {
        throw Error("matrix product dimension mismatch");
    }
    RatMatrix out(rows_, o.cols_, field_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < o.cols_; c++) {
            RationalFn acc(field_);
            for (size_t k = 0; k < cols_; k++) {
                if ((*this)(r, k).is_zero() || o(k, c).is_zero()) {
                    continue;
                }
                acc = acc + (*this)(r, k) * o(k, c);
            }
            out.set(r, c, std::move(acc));
        }
    }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error("matrix sum dimension mismatch");
    }
    RatMatrix out(rows_, cols_, field_);
    for (size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] = entries_[i] + o.entries_[i];
    }
    return out;
}

bool RatMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const RationalFn &e) { return e.is_zero(); });
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (r == c ? !(*this)(r, c).is_one() : !(*this)(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool RatMatrix::is_polynomial() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const RationalFn &e) { return e.is_polynomial(); });
}

bool RatMatrix::is_laurent() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const RationalFn &e) { return e.is_laurent(); });
}

RatMatrix RatMatrix::conj() const {
    RatMatrix out = *this;
    for (auto &e : out.entries_) {
        e = e.conj();
    }
    return out;
}

RatMatrix RatMatrix::promoted() const {
    RatMatrix out(rows_, cols_, Field::GF4);
    for (size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] = entries_[i].promoted();
    }
    return out;
}

RatMatrix RatMatrix::row_block(size_t begin, size_t end) const {
    RatMatrix out(end - begin, cols_, field_);
    for (size_t r = begin; r < end; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.set(r - begin, c, (*this)(r, c));
        }
    }
    return out;
}

RatMatrix RatMatrix::times_power(int k) const {
    RatMatrix out = *this;
    for (auto &e : out.entries_) {
        e = e.times_power(k);
    }
    return out;
}

int RatMatrix::max_degree() const {
    int d = -1;
    for (const auto &e : entries_) {
        d = std::max(d, e.num().degree());
    }
    return d;
}

std::string RatMatrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows_; r++) {
        out += "[";
        for (size_t c = 0; c < cols_; c++) {
            if (c) {
                out += ", ";
            }
            out += (*this)(r, c).str();
        }
        out += "]\n";
    }
    return out;
}

RatMatrix substitute(const RatMatrix &m, Substitution map) {
    RatMatrix out(m.rows(), m.cols(), m.field());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out.set(r, c, map == Substitution::Square ? m(r, c).stretched(2) : m(r, c).inverted());
        }
    }
    return out;
}

namespace {

/// Row-reduces `work` (n x r) in place, mirroring every row operation on
/// `aug`, until the top block is I_rank. Returns the rank.
size_t gauss_jordan(RatMatrix &work, RatMatrix &aug) {
    size_t n = work.rows();
    size_t r = work.cols();
    size_t pivot_row = 0;
    auto swap_rows = [](RatMatrix &m, size_t a, size_t b) {
        for (size_t c = 0; c < m.cols(); c++) {
            RationalFn t = m(a, c);
            m.set(a, c, m(b, c));
            m.set(b, c, std::move(t));
        }
    };
    for (size_t col = 0; col < r && pivot_row < n; col++) {
        size_t best = n;
        for (size_t i = pivot_row; i < n; i++) {
            if (!work(i, col).is_zero() && (best == n || work(i, col).complexity() < work(best, col).complexity())) {
                best = i;
            }
        }
        if (best == n) {
            continue;
        }
        swap_rows(work, pivot_row, best);
        swap_rows(aug, pivot_row, best);
        RationalFn inv = work(pivot_row, col).inverse();
        for (size_t c = 0; c < work.cols(); c++) {
            work.set(pivot_row, c, work(pivot_row, c) * inv);
        }
        for (size_t c = 0; c < aug.cols(); c++) {
            aug.set(pivot_row, c, aug(pivot_row, c) * inv);
        }
        for (size_t i = 0; i < n; i++) {
            if (i == pivot_row || work(i, col).is_zero()) {
                continue;
            }
            RationalFn f = work(i, col);
            for (size_t c = 0; c < work.cols(); c++) {
                work.set(i, c, work(i, c) - f * work(pivot_row, c));
            }
            for (size_t c = 0; c < aug.cols(); c++) {
                aug.set(i, c, aug(i, c) - f * aug(pivot_row, c));
            }
        }
        pivot_row++;
    }
    return pivot_row;
}

}  // namespace

size_t rank(const RatMatrix &m) {
    RatMatrix work = m;
    RatMatrix aug(m.rows(), 0, m.field());
    return gauss_jordan(work, aug);
}

RatMatrix left_inverse(const RatMatrix &m) {
    RatMatrix work = m;
    RatMatrix aug = RatMatrix::identity(m.rows(), m.field());
    size_t rk = gauss_jordan(work, aug);
    if (rk < m.cols()) {
        throw RankError("left_inverse: matrix has rank " + std::to_string(rk) + " < " + std::to_string(m.cols()));
    }
    RatMatrix inv = aug.row_block(0, m.cols());
    if (!(inv * m).is_identity()) {
        throw Error("left_inverse: verification L*m = I failed");
    }
    return inv;
}

std::optional<RatMatrix> left_inverse_moore_penrose(const RatMatrix &m) {
    RatMatrix mt = m.transpose();
    RatMatrix gram = mt * m;
    RatMatrix work = gram;
    RatMatrix aug = RatMatrix::identity(gram.rows(), m.field());
    if (gauss_jordan(work, aug) < gram.rows()) {
        return std::nullopt;
    }
    return aug * mt;
}

namespace {

/// Multiplies the row by the lcm of its denominators, divides out the gcd of
/// the numerators and makes the first nonzero entry's leading coefficient 1.
std::vector<Poly> polynomial_row(const RatMatrix &m, size_t r) {
    Field f = m.field();
    Poly den_lcm = Poly::one(f);
    for (size_t c = 0; c < m.cols(); c++) {
        den_lcm = lcm(den_lcm, m(r, c).den());
    }
    std::vector<Poly> row;
    Poly g(f);
    for (size_t c = 0; c < m.cols(); c++) {
        Poly p = m(r, c).num() * (den_lcm / m(r, c).den());
        g = gcd(g, p);
        row.push_back(std::move(p));
    }
    Gf4 scale = Gf4::one();
    for (auto &p : row) {
        p = p / g;
    }
    for (const auto &p : row) {
        if (!p.is_zero()) {
            scale = p.leading().inverse();
            break;
        }
    }
    for (auto &p : row) {
        p = p.scaled(scale);
    }
    return row;
}

}  // namespace

RatMatrix null_space_basis(const RatMatrix &m) {
    RatMatrix work = m;
    RatMatrix aug = RatMatrix::identity(m.rows(), m.field());
    size_t rk = gauss_jordan(work, aug);
    if (rk < m.cols()) {
        throw RankError("null_space_basis: input is not of full column rank");
    }
    size_t dim = m.rows() - rk;
    if (dim == 0) {
        return RatMatrix(0, m.rows(), m.field());
    }
    RatMatrix raw = aug.row_block(rk, m.rows());
    RatMatrix out(dim, m.rows(), m.field());
    for (size_t r = 0; r < dim; r++) {
        auto row = polynomial_row(raw, r);
        for (size_t c = 0; c < row.size(); c++) {
            out.set(r, c, RationalFn(row[c]));
        }
    }
    return out;
}

RationalFn determinant(const RatMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error("determinant of non-square matrix");
    }
    size_t n = m.rows();
    RatMatrix work = m;
    RationalFn det(Poly::one(m.field()));
    for (size_t col = 0; col < n; col++) {
        size_t p = n;
        for (size_t i = col; i < n; i++) {
            if (!work(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p == n) {
            return RationalFn(m.field());
        }
        if (p != col) {
            for (size_t c = 0; c < n; c++) {
                RationalFn t = work(p, c);
                work.set(p, c, work(col, c));
                work.set(col, c, std::move(t));
            }
        }
        det = det * work(col, col);
        RationalFn inv = work(col, col).inverse();
        for (size_t i = col + 1; i < n; i++) {
            if (work(i, col).is_zero()) {
                continue;
            }
            RationalFn f = work(i, col) * inv;
            for (size_t c = col; c < n; c++) {
                work.set(i, c, work(i, c) - f * work(col, c));
            }
        }
    }
    return det;
}

Poly minors_gcd(const RatMatrix &g) {
    if (!g.is_polynomial()) {
        throw Error("minors_gcd: generator must have polynomial entries");
    }
    size_t k = g.rows();
    size_t n = g.cols();
    if (k > n) {
        return Poly(g.field());
    }
    std::vector<size_t> pick(k);
    for (size_t i = 0; i < k; i++) {
        pick[i] = i;
    }
    Poly acc(g.field());
    while (true) {
        RatMatrix sub(k, k, g.field());
        for (size_t r = 0; r < k; r++) {
            for (size_t c = 0; c < k; c++) {
                sub.set(r, c, g(r, pick[c]));
            }
        }
        acc = gcd(acc, determinant(sub).num());
        size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) {
            i--;
        }
        if (i == 0) {
            break;
        }
        pick[i - 1]++;
        for (size_t j = i; j < k; j++) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return acc;
}

bool is_non_catastrophic(const RatMatrix &g) {
    Poly d = minors_gcd(g);
    return d.is_monomial();
}

}  // namespace qcc
