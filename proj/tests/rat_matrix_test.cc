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

#include <gtest/gtest.h>

#include <random>

#include "qcc/errors.h"
#include "qcc/poly_matrix.h"
#include "qcc/rat_matrix.h"

namespace qcc {
namespace {

const Field F2 = Field::GF2;
const Field F4 = Field::GF4;

RatMatrix hb_311() {
    return RatMatrix::parse({{"1+D^2", "1+D^3", "1+D^2+D^3"}, {"D+D^3", "D+D^2+D^3", "D+D^2"}}, F2);
}

TEST(Substitute, SquareAndInvert) {
    RatMatrix p = RatMatrix::parse({{"1+D", "1", "1+D"}}, F2);
    EXPECT_EQ(substitute(p, Substitution::Square), RatMatrix::parse({{"1+D^2", "1", "1+D^2"}}, F2));
    RatMatrix q = RatMatrix::parse({{"0", "D", "D"}}, F2);
    RatMatrix qi = substitute(q, Substitution::Invert);
    EXPECT_TRUE(qi(0, 0).is_zero());
    EXPECT_EQ(qi(0, 1), rat_reduce(Poly::one(F2), Poly::monomial(F2, 1)));
    EXPECT_EQ(qi(0, 2).str(), "(1)/(D)");
    RatMatrix c = RatMatrix::parse({{"1", "0"}, {"1", "1"}}, F2);
    EXPECT_EQ(substitute(c, Substitution::Square), c);
    EXPECT_EQ(substitute(c, Substitution::Invert), c);
}

TEST(LeftInverse, ExampleOneCandidates) {
    RatMatrix m = RatMatrix::parse({{"1+D^2"}, {"1+D+D^2"}}, F2);
    RatMatrix isf = RatMatrix::parse({{"1+D", "D"}}, F2);
    EXPECT_TRUE((isf * m).is_identity());
    RatMatrix alt = RatMatrix::parse({{"1", "(1+D^2)/(1+D+D^2)"}}, F2);
    EXPECT_FALSE((alt * m).is_identity());  // a generator choice, not an ISF
    RatMatrix l = left_inverse(m);
    EXPECT_EQ(l.rows(), 1u);
    EXPECT_EQ(l.cols(), 2u);
    EXPECT_TRUE((l * m).is_identity());
    RatMatrix h = echelon_left_inverse(PolyMatrix(m));
    EXPECT_TRUE((h * m).is_identity());
    EXPECT_TRUE(h.is_polynomial());
}

TEST(LeftInverse, RationalFixtureForHb) {
    RatMatrix ht = hb_311().transpose();
    RatMatrix fixture = RatMatrix::parse(
        {{"1/(D+D^3)", "1/(D+D^2+D^3)", "0"}, {"1/(D^2+D^3)", "1/(D^2+D^3+D^4)", "0"}}, F2);
    EXPECT_TRUE((fixture * ht).is_identity());
    RatMatrix l = left_inverse(ht);
    EXPECT_TRUE((l * ht).is_identity());
}

TEST(LeftInverse, IdentityAndRankErrors) {
    EXPECT_EQ(left_inverse(RatMatrix::identity(2, F2)), RatMatrix::identity(2, F2));
    RatMatrix deficient = RatMatrix::parse({{"1+D", "1+D^2"}, {"1", "1+D"}}, F2);
    EXPECT_EQ(rank(deficient), 1u);
    EXPECT_THROW(left_inverse(deficient), RankError);
    EXPECT_THROW(null_space_basis(deficient), RankError);
}

TEST(LeftInverse, MoorePenroseGatedOnGram) {
    // (1, 1)^T has Gram 1 + 1 = 0 over GF(2) although it has full rank.
    RatMatrix m = RatMatrix::parse({{"1"}, {"1"}}, F2);
    EXPECT_FALSE(left_inverse_moore_penrose(m).has_value());
    RatMatrix m2 = RatMatrix::parse({{"1"}, {"D"}}, F2);
    auto mp = left_inverse_moore_penrose(m2);
    ASSERT_TRUE(mp.has_value());
    EXPECT_TRUE((*mp * m2).is_identity());
}

TEST(NullSpace, ExampleOne) {
    RatMatrix m = RatMatrix::parse({{"1+D^2"}, {"1+D+D^2"}}, F2);
    RatMatrix g = null_space_basis(m);
    ASSERT_EQ(g.rows(), 1u);
    EXPECT_TRUE((g * m).is_zero());
    EXPECT_EQ(g, RatMatrix::parse({{"1+D+D^2", "1+D^2"}}, F2));
    // The rational alternative spans the same row space.
    RatMatrix alt = RatMatrix::parse({{"1", "(1+D^2)/(1+D+D^2)"}}, F2);
    EXPECT_TRUE((alt * m).is_zero());
    RatMatrix scaled = g;
    scaled.set(0, 0, g(0, 0) * RationalFn(rat_reduce(Poly::one(F2), parse_poly("1+D+D^2", F2))));
    scaled.set(0, 1, g(0, 1) * RationalFn(rat_reduce(Poly::one(F2), parse_poly("1+D+D^2", F2))));
    EXPECT_EQ(scaled, alt);
}

TEST(NullSpace, HbFromCode311) {
    RatMatrix ht = hb_311().transpose();
    RatMatrix g = null_space_basis(ht);
    ASSERT_EQ(g.rows(), 1u);
    EXPECT_TRUE((g * ht).is_zero());
    EXPECT_EQ(g, RatMatrix::parse({{"D^2", "1+D^2", "1+D^2"}}, F2));
}

TEST(NullSpace, Trivial) {
    RatMatrix g = null_space_basis(RatMatrix::parse({{"1"}, {"0"}}, F2));
    EXPECT_EQ(g, RatMatrix::parse({{"0", "1"}}, F2));
}

TEST(MinorsGcd, Examples) {
    RatMatrix g = RatMatrix::parse({{"D^2", "1+D^2", "1+D^2"}}, F2);
    EXPECT_TRUE(minors_gcd(g).is_one());
    EXPECT_TRUE(is_non_catastrophic(g));
    RatMatrix bad = RatMatrix::parse({{"1+D", "1+D^2"}}, F2);
    EXPECT_EQ(minors_gcd(bad), parse_poly("1+D", F2));
    EXPECT_FALSE(is_non_catastrophic(bad));
    EXPECT_TRUE(minors_gcd(RatMatrix::identity(3, F2)).is_one());
    EXPECT_TRUE(is_non_catastrophic(RatMatrix::parse({{"D", "D^2"}}, F2)));
}

TEST(MinorsGcd, PublishedGf4GeneratorSharesAFactor) {
    RatMatrix gq = RatMatrix::parse({{"0", "1+w2*D", "1+w*D"}, {"1+w*D", "1+D", "0"}}, F4);
    RatMatrix hq = RatMatrix::parse({{"1+D", "1+w*D", "1+w2*D"}}, F4);
    EXPECT_TRUE((gq * hq.transpose()).is_zero());
    EXPECT_EQ(minors_gcd(gq), parse_poly("w2+D", F4));
    EXPECT_FALSE(is_non_catastrophic(gq));
}

TEST(Determinant, SmallCases) {
    RatMatrix m = RatMatrix::parse({{"1+D", "D"}, {"1", "1+D"}}, F2);
    EXPECT_EQ(determinant(m), RationalFn(parse_poly("1+D+D^2", F2)));
}

TEST(Hermite, TransformIsUnimodular) {
    PolyMatrix m(RatMatrix::parse({{"1+D^2", "D"}, {"1+D+D^2", "1"}, {"D", "1+D"}}, F2));
    RowEchelon e = hermite_row_reduce(m);
    EXPECT_EQ(e.rank, 2u);
    RatMatrix u = e.transform.to_rat();
    EXPECT_EQ(u * m.to_rat(), e.reduced.to_rat());
    RationalFn det = determinant(u);
    EXPECT_TRUE(det.is_polynomial() && det.num().degree() == 0);
}

TEST(MinimalBasis, ReducesTotalDegree) {
    // Rows (1, D, 0) and (D, 1+D^2, 1) span the same module as (1, D, 0), (0, 1, 1).
    RatMatrix g = RatMatrix::parse({{"1", "D", "0"}, {"D", "1+D^2", "1"}}, F2);
    PolyMatrix mb = minimal_basis(PolyMatrix(g));
    EXPECT_EQ(mb.row_degree(0) + mb.row_degree(1), 1);
    EXPECT_EQ(rank(mb.to_rat()), 2u);
    EXPECT_TRUE((mb.to_rat() * RatMatrix::parse({{"D+D^2"}, {"1+D"}, {"1+D"}}, F2)).is_zero());
    // A unimodular matrix reduces to degree zero.
    EXPECT_EQ(minimal_basis(PolyMatrix(RatMatrix::parse({{"1", "D"}, {"D", "1+D^2"}}, F2))).row_degree(1), 0);
}

RatMatrix random_poly_matrix(std::mt19937_64 &rng, size_t rows, size_t cols, Field f) {
    std::uniform_int_distribution<int> deg(-1, 3);
    std::uniform_int_distribution<int> sym(0, f == F2 ? 1 : 3);
    std::vector<std::vector<Poly>> m(rows);
    for (auto &row : m) {
        for (size_t c = 0; c < cols; c++) {
            std::vector<Gf4> coeffs(static_cast<size_t>(deg(rng) + 1));
            for (auto &x : coeffs) {
                x = Gf4(static_cast<uint8_t>(sym(rng)));
            }
            row.emplace_back(f, coeffs);
        }
    }
    return RatMatrix::from_polys(m);
}

TEST(RatMatrixProperty, LeftInverseAndNullSpaceOnRandomInputs) {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int t = 0; t < 400; t++) {
        Field f = t % 2 ? F4 : F2;
        std::uniform_int_distribution<size_t> dim(1, 4);
        size_t n = dim(rng);
        size_t r = std::min(n, std::uniform_int_distribution<size_t>(1, 2)(rng));
        RatMatrix m = random_poly_matrix(rng, n, r, f);
        if (rank(m) != r) {
            EXPECT_THROW(left_inverse(m), RankError);
            continue;
        }
        checked++;
        RatMatrix l = left_inverse(m);
        EXPECT_TRUE((l * m).is_identity()) << m.str();
        RatMatrix h = echelon_left_inverse(PolyMatrix(m));
        EXPECT_TRUE((h * m).is_identity()) << m.str();
        RatMatrix g = null_space_basis(m);
        EXPECT_EQ(g.rows(), n - r);
        EXPECT_TRUE((g * m).is_zero());
        if (g.rows()) {
            EXPECT_EQ(rank(g), n - r);
            EXPECT_TRUE(g.is_polynomial());
        }
        PolyMatrix k = minimal_basis(basic_left_kernel(PolyMatrix(m)));
        EXPECT_TRUE((k.to_rat() * m).is_zero());
        if (k.rows()) {
            EXPECT_TRUE(is_non_catastrophic(k.to_rat()));
        }
    }
    EXPECT_GT(checked, 200);
}

TEST(RatMatrixProperty, InvertSubstitutionIsInvolution) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; t++) {
        RatMatrix m = random_poly_matrix(rng, 2, 3, t % 2 ? F4 : F2);
        EXPECT_EQ(substitute(substitute(m, Substitution::Invert), Substitution::Invert), m);
    }
}

}  // namespace
}  // namespace qcc
