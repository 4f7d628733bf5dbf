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

#ifndef QCC_POLY_H
#define QCC_POLY_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcc/field.h"

namespace qcc {

/// Largest polynomial degree any product may reach before DegreeCapError.
int degree_cap();
void set_degree_cap(int cap);

/// Restores the previous degree cap on scope exit.
class ScopedDegreeCap {
   public:
    explicit ScopedDegreeCap(int cap);
    ~ScopedDegreeCap();
    ScopedDegreeCap(const ScopedDegreeCap &) = delete;
    ScopedDegreeCap &operator=(const ScopedDegreeCap &) = delete;

   private:
    int previous_;
};

/// Polynomial in the delay operator D over GF(2) or GF(4).
///
/// Coefficients are stored by ascending power with no trailing zeros, so the
/// zero polynomial has an empty coefficient list and degree() == -1.
class Poly {
   public:
    explicit Poly(Field field = Field::GF2);
    Poly(Field field, std::vector<Gf4> coeffs);

    static Poly constant(Field field, Gf4 c);
    static Poly one(Field field);
    static Poly monomial(Field field, int power, Gf4 c = Gf4::one());
    /// GF(2) polynomial whose coefficient of D^i is bit i of `mask`.
    static Poly from_mask(uint64_t mask);

    Field field() const {
        return field_;
    }
    int degree() const {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const {
        return coeffs_.empty();
    }
    bool is_one() const;
    /// True for c*D^k with c != 0.
    bool is_monomial() const;
    /// Lowest power with a nonzero coefficient; -1 for zero.
    int valuation() const;
    Gf4 coeff(int power) const;
    Gf4 leading() const;
    const std::vector<Gf4> &coeffs() const {
        return coeffs_;
    }

    Poly scaled(Gf4 c) const;
    Poly monic() const;
    /// Multiplies by D^k (k >= 0).
    Poly shifted(int k) const;
    /// Divides by D^k; the low k coefficients must be zero.
    Poly unshifted(int k) const;
    /// Substitutes D -> D^factor.
    Poly stretched(int factor) const;
    /// Coefficients at powers congruent to `phase` mod `factor`, re-indexed: sum_t c[factor*t+phase] D^t.
    Poly decimated(int factor, int phase) const;
    /// D^degree * p(1/D).
    Poly reversed() const;
    Poly conj() const;
    /// Same coefficients viewed over GF(4).
    Poly promoted() const;

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const {
        return *this + o;
    }
    Poly operator*(const Poly &o) const;
    Poly &operator+=(const Poly &o);
    Poly &operator*=(const Poly &o);
    bool operator==(const Poly &o) const = default;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
    Poly operator/(const Poly &o) const;
    Poly operator%(const Poly &o) const;

    /// Canonical text, ascending powers: "1+D^2", "w+w2*D", "0".
    std::string str() const;

   private:
    void trim();
    Field field_;
    std::vector<Gf4> coeffs_;
};

/// Monic greatest common divisor; gcd(a, 0) = monic(a).
Poly gcd(const Poly &a, const Poly &b);
Poly lcm(const Poly &a, const Poly &b);

/// Extended Euclid: returns (g, x, y) with x*a + y*b = g, g monic.
struct ExtendedGcd {
    Poly g, x, y;
};
ExtendedGcd extended_gcd(const Poly &a, const Poly &b);

Poly parse_poly(std::string_view text, Field field);

/// Laurent polynomial D^low * body with body(0) != 0 (or zero).
class LaurentPoly {
   public:
    explicit LaurentPoly(Field field = Field::GF2);
    LaurentPoly(const Poly &p, int shift = 0);

    Field field() const {
        return body_.field();
    }
    bool is_zero() const {
        return body_.is_zero();
    }
    int low_power() const {
        return low_;
    }
    int high_power() const {
        return low_ + body_.degree();
    }
    Gf4 coeff(int power) const;
    /// Substitutes D -> 1/D.
    LaurentPoly inverted() const;

    LaurentPoly operator+(const LaurentPoly &o) const;
    LaurentPoly operator*(const LaurentPoly &o) const;
    bool operator==(const LaurentPoly &o) const = default;

    std::string str() const;

   private:
    Poly body_;
    int low_ = 0;
};

/// Element of the rational function field F(D), kept as num/den with
/// gcd(num, den) = 1 and den monic, so structural and semantic equality agree.
class RationalFn {
   public:
    explicit RationalFn(Field field = Field::GF2);
    RationalFn(const Poly &p);  // NOLINT(google-explicit-constructor)
    RationalFn(const Poly &num, const Poly &den);

    static RationalFn from_ints(Field field, uint64_t num_mask, uint64_t den_mask = 1);

    Field field() const {
        return num_.field();
    }
    const Poly &num() const {
        return num_;
    }
    const Poly &den() const {
        return den_;
    }
    bool is_zero() const {
        return num_.is_zero();
    }
    bool is_one() const {
        return num_.is_one() && den_.is_one();
    }
    bool is_polynomial() const {
        return den_.is_one();
    }
    /// Polynomial up to a power of D in the denominator.
    bool is_laurent() const {
        return den_.is_monomial();
    }
    /// Realizable without lookahead: no factor D in the denominator.
    bool is_causal() const {
        return !den_.coeff(0).is_zero();
    }
    /// valuation(num) - valuation(den); large for zero.
    int delay() const;
    /// Sum of numerator and denominator degrees, used to rank pivots.
    int complexity() const;

    RationalFn inverse() const;
    RationalFn stretched(int factor) const;
    RationalFn inverted() const;
    RationalFn conj() const;
    RationalFn promoted() const;
    RationalFn times_power(int k) const;

    RationalFn operator+(const RationalFn &o) const;
    RationalFn operator-(const RationalFn &o) const {
        return *this + o;
    }
    RationalFn operator*(const RationalFn &o) const;
    RationalFn operator/(const RationalFn &o) const;
    bool operator==(const RationalFn &o) const = default;

    /// "1+D" for polynomials, "(1)/(D+D^3)" otherwise.
    std::string str() const;

   private:
    Poly num_, den_;
};

/// Canonical num/den. Throws Error on a zero denominator.
RationalFn rat_reduce(const Poly &num, const Poly &den);

/// Accepts "p", "p/q", "(p)/(q)".
RationalFn parse_rational(std::string_view text, Field field);

}  // namespace qcc

#endif
