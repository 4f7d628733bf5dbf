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

#include "qcc/poly_matrix.h"

#include <utility>

#include "qcc/errors.h"

namespace qcc {

PolyMatrix::PolyMatrix(size_t rows, size_t cols, Field field)
    : cols_(cols), field_(field), rows_(rows, std::vector<Poly>(cols, Poly(field))) {
}

PolyMatrix::PolyMatrix(const RatMatrix &m) : PolyMatrix(m.rows(), m.cols(), m.field()) {
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (!m(r, c).is_polynomial()) {
                throw Error("PolyMatrix: entry " + m(r, c).str() + " is not a polynomial");
            }
            rows_[r][c] = m(r, c).num();
        }
    }
}

PolyMatrix PolyMatrix::identity(size_t n, Field field) {
    PolyMatrix m(n, n, field);
    for (size_t i = 0; i < n; i++) {
        m.at(i, i) = Poly::one(field);
    }
    return m;
}

int PolyMatrix::row_degree(size_t r) const {
    int d = -1;
    for (const auto &p : rows_[r]) {
        d = std::max(d, p.degree());
    }
    return d;
}

RatMatrix PolyMatrix::to_rat() const {
    RatMatrix m(rows(), cols_, field_);
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            m.set(r, c, RationalFn(rows_[r][c]));
        }
    }
    return m;
}

namespace {

void add_multiple(std::vector<Poly> &target, const std::vector<Poly> &source, const Poly &factor) {
    for (size_t c = 0; c < target.size(); c++) {
        if (!source[c].is_zero()) {
            target[c] += factor * source[c];
        }
    }
}

void scale_row(std::vector<Poly> &row, Gf4 s) {
    for (auto &p : row) {
        p = p.scaled(s);
    }
}

}  // namespace

RowEchelon hermite_row_reduce(const PolyMatrix &m) {
    RowEchelon out{PolyMatrix::identity(m.rows(), m.field()), m, 0, {}};
    PolyMatrix &a = out.reduced;
    PolyMatrix &u = out.transform;
    size_t n = m.rows();
    size_t top = 0;
    for (size_t col = 0; col < m.cols() && top < n; col++) {
        while (true) {
            // Lowest-degree nonzero entry at or below `top` becomes the pivot.
            size_t best = n;
            for (size_t i = top; i < n; i++) {
                if (!a.at(i, col).is_zero() && (best == n || a.at(i, col).degree() < a.at(best, col).degree())) {
                    best = i;
                }
            }
            if (best == n) {
                break;
            }
            std::swap(a.row(top), a.row(best));
            std::swap(u.row(top), u.row(best));
            bool clean = true;
            for (size_t i = top + 1; i < n; i++) {
                if (a.at(i, col).is_zero()) {
                    continue;
                }
                Poly q = a.at(i, col) / a.at(top, col);
                add_multiple(a.row(i), a.row(top), q);
                add_multiple(u.row(i), u.row(top), q);
                if (!a.at(i, col).is_zero()) {
                    clean = false;
                }
            }
            if (clean) {
                Gf4 s = a.at(top, col).leading().inverse();
                scale_row(a.row(top), s);
                scale_row(u.row(top), s);
                out.pivot_cols.push_back(col);
                top++;
                break;
            }
        }
    }
    out.rank = top;
    return out;
}

PolyMatrix basic_left_kernel(const PolyMatrix &m) {
    RowEchelon e = hermite_row_reduce(m);
    if (e.rank < m.cols()) {
        throw RankError("basic_left_kernel: input is not of full column rank");
    }
    PolyMatrix k(m.rows() - e.rank, m.rows(), m.field());
    for (size_t r = e.rank; r < m.rows(); r++) {
        k.row(r - e.rank) = e.transform.row(r);
    }
    return k;
}

namespace {

/// Nontrivial x with x * lc = 0 over the field, or empty when lc has full row rank.
std::vector<Gf4> row_dependency(const std::vector<std::vector<Gf4>> &lc, size_t cols) {
    size_t k = lc.size();
    // Eliminate on [lc | I] and look for a zero row on the left.
    std::vector<std::vector<Gf4>> w(k);
    for (size_t r = 0; r < k; r++) {
        w[r] = lc[r];
        w[r].resize(cols + k);
        w[r][cols + r] = Gf4::one();
    }
    size_t top = 0;
    for (size_t c = 0; c < cols && top < k; c++) {
        size_t p = k;
        for (size_t r = top; r < k; r++) {
            if (!w[r][c].is_zero()) {
                p = r;
                break;
            }
        }
        if (p == k) {
            continue;
        }
        std::swap(w[p], w[top]);
        Gf4 inv = w[top][c].inverse();
        for (auto &x : w[top]) {
            x *= inv;
        }
        for (size_t r = 0; r < k; r++) {
            if (r != top && !w[r][c].is_zero()) {
                Gf4 f = w[r][c];
                for (size_t j = 0; j < cols + k; j++) {
                    w[r][j] += f * w[top][j];
                }
            }
        }
        top++;
    }
    if (top == k) {
        return {};
    }
    return std::vector<Gf4>(w[top].begin() + cols, w[top].end());
}

}  // namespace

PolyMatrix minimal_basis(PolyMatrix g) {
    size_t k = g.rows();
    while (true) {
        std::vector<int> deg(k);
        std::vector<std::vector<Gf4>> lc(k, std::vector<Gf4>(g.cols()));
        for (size_t r = 0; r < k; r++) {
            deg[r] = g.row_degree(r);
            if (deg[r] < 0) {
                throw RankError("minimal_basis: zero row");
            }
            for (size_t c = 0; c < g.cols(); c++) {
                lc[r][c] = g.at(r, c).coeff(deg[r]);
            }
        }
        std::vector<Gf4> x = row_dependency(lc, g.cols());
        if (x.empty()) {
            break;
        }
        // Replace the highest-degree row in the dependency; its degree drops.
        size_t target = k;
        for (size_t r = 0; r < k; r++) {
            if (!x[r].is_zero() && (target == k || deg[r] > deg[target])) {
                target = r;
            }
        }
        std::vector<Poly> acc(g.cols(), Poly(g.field()));
        for (size_t r = 0; r < k; r++) {
            if (x[r].is_zero()) {
                continue;
            }
            Poly f = Poly::monomial(g.field(), deg[target] - deg[r], x[r] / x[target]);
            add_multiple(acc, g.row(r), f);
        }
        g.row(target) = std::move(acc);
    }
    return g;
}

RatMatrix echelon_left_inverse(const PolyMatrix &m) {
    RowEchelon e = hermite_row_reduce(m);
    size_t r = m.cols();
    if (e.rank < r) {
        throw RankError("echelon_left_inverse: input is not of full column rank");
    }
    // e.reduced's top r x r block T is upper triangular: L = T^-1 * U_top.
    RatMatrix t(r, r, m.field());
    RatMatrix u_top(r, m.rows(), m.field());
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) {
            t.set(i, j, RationalFn(e.reduced.at(i, j)));
        }
        for (size_t j = 0; j < m.rows(); j++) {
            u_top.set(i, j, RationalFn(e.transform.at(i, j)));
        }
    }
    RatMatrix l = left_inverse(t) * u_top;
    if (!(l * m.to_rat()).is_identity()) {
        throw Error("echelon_left_inverse: verification failed");
    }
    return l;
}

}  // namespace qcc
