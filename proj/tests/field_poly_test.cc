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
#include "qcc/field.h"
#include "qcc/poly.h"

namespace qcc {
namespace {

const Field F2 = Field::GF2;
const Field F4 = Field::GF4;

Poly P2(const char *s) {
    return parse_poly(s, F2);
}
Poly P4(const char *s) {
    return parse_poly(s, F4);
}

TEST(Gf4, AxiomsOnAllElements) {
    Gf4 w = Gf4::omega();
    EXPECT_EQ(w * w, w + Gf4::one());
    EXPECT_EQ(w * w * w, Gf4::one());
    EXPECT_EQ(w * w, Gf4::omega_bar());
    for (uint8_t a = 0; a < 4; a++) {
        Gf4 x(a);
        EXPECT_EQ(x + x, Gf4::zero());
        EXPECT_TRUE(x.trace().in_gf2());
        EXPECT_EQ(x.conj(), x * x);
        if (a) {
            EXPECT_EQ(x * x.inverse(), Gf4::one());
        }
        for (uint8_t b = 0; b < 4; b++) {
            EXPECT_EQ(x * Gf4(b), Gf4(b) * x);
            for (uint8_t c = 0; c < 4; c++) {
                EXPECT_EQ(x * (Gf4(b) + Gf4(c)), x * Gf4(b) + x * Gf4(c));
                EXPECT_EQ((x * Gf4(b)) * Gf4(c), x * (Gf4(b) * Gf4(c)));
            }
        }
    }
}

TEST(Poly, CanonicalZero) {
    Poly z(F2, {Gf4(0), Gf4(0)});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_TRUE(z.coeffs().empty());
    EXPECT_EQ(Poly(F2, {Gf4(1), Gf4(0), Gf4(1), Gf4(0)}).degree(), 2);
}

TEST(Poly, Arithmetic) {
    EXPECT_EQ(P2("1+D") * P2("1+D"), P2("1+D^2"));
    // rate-1/2 ISF against its syndrome former
    EXPECT_EQ(P2("1+D") * P2("1+D^2") + P2("D") * P2("1+D+D^2"), P2("1"));
    EXPECT_EQ(gcd(P2("1+D^2"), P2("1+D+D^2")), P2("1"));
    EXPECT_EQ(gcd(P2("1+D^2"), P2("1+D^3")), P2("1+D"));
    EXPECT_EQ(gcd(P2("D^2+D^3"), Poly(F2)), P2("D^2+D^3"));
    EXPECT_EQ(gcd(P4("w+w*D"), Poly(F4)), P4("1+D"));
    EXPECT_EQ(lcm(P2("1+D"), P2("1+D^2")), P2("1+D^2"));
}

TEST(Poly, FieldMismatchThrows) {
    EXPECT_THROW(P2("1+D") + P4("1+D"), FieldMismatchError);
    EXPECT_THROW(P2("1+D") * P4("1"), FieldMismatchError);
    EXPECT_THROW(gcd(P2("1"), P4("1")), FieldMismatchError);
}

TEST(Poly, DivisionAndExtendedGcd) {
    auto [q, r] = Poly::divmod(P2("1+D^3"), P2("1+D"));
    EXPECT_EQ(q, P2("1+D+D^2"));
    EXPECT_TRUE(r.is_zero());
    auto g = extended_gcd(P2("1+D^2"), P2("1+D+D^2"));
    EXPECT_EQ(g.x * P2("1+D^2") + g.y * P2("1+D+D^2"), g.g);
    EXPECT_TRUE(g.g.is_one());
    auto g4 = extended_gcd(P4("1+w*D"), P4("1+D^2"));
    EXPECT_EQ(g4.x * P4("1+w*D") + g4.y * P4("1+D^2"), g4.g);
}

TEST(Poly, ParseAndPrint) {
    EXPECT_EQ(P2("1+D^2").str(), "1+D^2");
    EXPECT_EQ(P4("1+w2*D").str(), "1+w2*D");
    EXPECT_EQ(P2("0").str(), "0");
    EXPECT_EQ(P2("D^3+D+D").str(), "D^3");
    EXPECT_THROW(P2("1+x"), ParseError);
    EXPECT_THROW(P2("w*D"), ParseError);
    EXPECT_THROW(P2("1++D"), ParseError);
}

TEST(Poly, Decimate) {
    Poly h = P2("1+D^3+D^4+D^5");
    EXPECT_EQ(h.decimated(2, 0), P2("1+D^2"));
    EXPECT_EQ(h.decimated(2, 1), P2("D+D^2"));
    EXPECT_EQ(h.decimated(2, 0).stretched(2) + h.decimated(2, 1).stretched(2).shifted(1), h);
}

TEST(Poly, DegreeCap) {
    ScopedDegreeCap cap(8);
    EXPECT_THROW(P2("1+D^5") * P2("1+D^5"), DegreeCapError);
    EXPECT_NO_THROW(P2("1+D^4") * P2("1+D^4"));
}

TEST(Rational, Reduce) {
    EXPECT_EQ(rat_reduce(P2("1+D^2"), P2("1+D")), RationalFn(P2("1+D")));
    EXPECT_EQ(rat_reduce(P2("D+D^3"), P2("D")), RationalFn(P2("1+D^2")));
    RationalFn r = rat_reduce(P2("1"), P2("D+D^3"));
    EXPECT_EQ(r.num(), P2("1"));
    EXPECT_EQ(r.den(), P2("D+D^3"));
    EXPECT_FALSE(r.is_causal());
    EXPECT_EQ(r.str(), "(1)/(D+D^3)");
    EXPECT_TRUE(rat_reduce(P2("1+D^2"), P2("1+D+D^2")).is_causal());
    EXPECT_THROW(rat_reduce(P2("1"), Poly(F2)), Error);
}

TEST(Rational, MonicDenominatorOverGf4) {
    RationalFn r = rat_reduce(P4("1"), P4("w+w*D"));
    EXPECT_EQ(r.den(), P4("1+D"));
    EXPECT_EQ(r.num(), P4("w2"));
    EXPECT_EQ(r * RationalFn(P4("w+w*D")), RationalFn(P4("1")));
}

TEST(Rational, ParseForms) {
    EXPECT_EQ(parse_rational("(1+D^2)/(1+D+D^2)", F2), rat_reduce(P2("1+D^2"), P2("1+D+D^2")));
    EXPECT_EQ(parse_rational("1/(D+D^3)", F2), rat_reduce(P2("1"), P2("D+D^3")));
    EXPECT_EQ(parse_rational("D^2", F2), RationalFn(P2("D^2")));
}

TEST(Laurent, InversionInvolution) {
    LaurentPoly x(P2("1+D+D^3"), -2);
    EXPECT_EQ(x.inverted().inverted(), x);
    EXPECT_EQ(LaurentPoly(P2("D")).inverted().str(), "D^-1");
    EXPECT_EQ(x.low_power(), -2);
    EXPECT_EQ(x.high_power(), 1);
    EXPECT_TRUE((x + x).is_zero());
}

// Random polynomials for the algebraic laws.
Poly random_poly(std::mt19937_64 &rng, Field f, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<int> sym(0, f == F2 ? 1 : 3);
    std::vector<Gf4> c(static_cast<size_t>(deg(rng) + 1));
    for (auto &x : c) {
        x = Gf4(static_cast<uint8_t>(sym(rng)));
    }
    return Poly(f, c);
}

TEST(PolyProperty, RingLaws) {
    std::mt19937_64 rng(11);
    for (Field f : {F2, F4}) {
        for (int t = 0; t < 300; t++) {
            Poly a = random_poly(rng, f, 6), b = random_poly(rng, f, 6), c = random_poly(rng, f, 6);
            EXPECT_EQ(a * b, b * a);
            EXPECT_TRUE((a + a).is_zero());
            EXPECT_EQ(a * (b + c), a * b + a * c);
            if (!b.is_zero()) {
                auto [q, r] = Poly::divmod(a, b);
                EXPECT_EQ(q * b + r, a);
                EXPECT_LT(r.degree(), b.degree());
            }
            Poly g = gcd(a, b);
            if (!g.is_zero()) {
                EXPECT_TRUE((a % g).is_zero());
                EXPECT_TRUE((b % g).is_zero());
                EXPECT_EQ(g.leading(), Gf4::one());
            }
        }
    }
}

TEST(RationalProperty, CanonicalAndIdempotent) {
    std::mt19937_64 rng(12);
    for (Field f : {F2, F4}) {
        for (int t = 0; t < 300; t++) {
            Poly a = random_poly(rng, f, 5), b = random_poly(rng, f, 5), c = random_poly(rng, f, 3);
            if (b.is_zero() || c.is_zero()) {
                continue;
            }
            RationalFn r = rat_reduce(a, b);
            EXPECT_EQ(rat_reduce(r.num(), r.den()), r);
            // Scaling numerator and denominator by a common factor changes nothing.
            EXPECT_EQ(rat_reduce(a * c, b * c), r);
            EXPECT_EQ(r.den().leading(), Gf4::one());
            EXPECT_TRUE(gcd(r.num(), r.den()).is_one() || r.num().is_zero());
            EXPECT_EQ(r.inverted().inverted(), r);
            if (!r.is_zero()) {
                EXPECT_EQ(r * r.inverse(), RationalFn(Poly::one(f)));
            }
        }
    }
}

}  // namespace
}  // namespace qcc
