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

#include "qcc/poly.h"

#include <atomic>
#include <cctype>
#include <charconv>

#include "qcc/errors.h"

namespace qcc {

namespace {

std::atomic<int> g_degree_cap{512};

void require_same_field(Field a, Field b) {
    if (a != b) {
        throw FieldMismatchError("polynomial operands over different fields");
    }
}

void check_degree(int degree) {
    if (degree > g_degree_cap.load(std::memory_order_relaxed)) {
        throw DegreeCapError("polynomial degree " + std::to_string(degree) + " exceeds cap " +
                             std::to_string(g_degree_cap.load()));
    }
}

std::string coeff_str(Gf4 c) {
    switch (c.bits()) {
        case 1:
            return "1";
        case 2:
            return "w";
        case 3:
            return "w2";
        default:
            return "0";
    }
}

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string_view strip_parens(std::string_view s) {
    s = trim_view(s);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = trim_view(s.substr(1, s.size() - 2));
    }
    return s;
}

Gf4 parse_coeff(std::string_view s, Field field, std::string_view whole) {
    Gf4 c;
    if (s == "1") {
        c = Gf4::one();
    } else if (s == "0") {
        c = Gf4::zero();
    } else if (s == "w") {
        c = Gf4::omega();
    } else if (s == "w2") {
        c = Gf4::omega_bar();
    } else {
        throw ParseError("bad coefficient '" + std::string(s) + "' in '" + std::string(whole) + "'");
    }
    if (field == Field::GF2 && !c.in_gf2()) {
        throw ParseError("GF(4) coefficient in GF(2) polynomial '" + std::string(whole) + "'");
    }
    return c;
}

}  // namespace

int degree_cap() {
    return g_degree_cap.load();
}

void set_degree_cap(int cap) {
    g_degree_cap.store(cap);
}

ScopedDegreeCap::ScopedDegreeCap(int cap) : previous_(degree_cap()) {
    set_degree_cap(cap);
}

ScopedDegreeCap::~ScopedDegreeCap() {
    set_degree_cap(previous_);
}

Poly::Poly(Field field) : field_(field) {
}

Poly::Poly(Field field, std::vector<Gf4> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    if (field_ == Field::GF2) {
        for (Gf4 c : coeffs_) {
            if (!c.in_gf2()) {
                throw FieldMismatchError("GF(4) coefficient in GF(2) polynomial");
            }
        }
    }
    trim();
}

Poly Poly::constant(Field field, Gf4 c) {
    return Poly(field, {c});
}

Poly Poly::one(Field field) {
    return constant(field, Gf4::one());
}

Poly Poly::monomial(Field field, int power, Gf4 c) {
    check_degree(power);
    std::vector<Gf4> v(static_cast<size_t>(power) + 1);
    v.back() = c;
    return Poly(field, std::move(v));
}

Poly Poly::from_mask(uint64_t mask) {
    std::vector<Gf4> v;
    for (int i = 0; mask >> i; i++) {
        v.push_back(Gf4((mask >> i) & 1));
    }
    return Poly(Field::GF2, std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

bool Poly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == Gf4::one();
}

bool Poly::is_monomial() const {
    return !is_zero() && valuation() == degree();
}

int Poly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (!coeffs_[i].is_zero()) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

Gf4 Poly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
        return Gf4::zero();
    }
    return coeffs_[power];
}

Gf4 Poly::leading() const {
    return coeffs_.empty() ? Gf4::zero() : coeffs_.back();
}

Poly Poly::scaled(Gf4 c) const {
    if (field_ == Field::GF2 && !c.in_gf2()) {
        throw FieldMismatchError("scaling GF(2) polynomial by GF(4) element");
    }
    std::vector<Gf4> v = coeffs_;
    for (Gf4 &x : v) {
        x *= c;
    }
    return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) {
        return *this;
    }
    return scaled(leading().inverse());
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) {
        return *this;
    }
    check_degree(degree() + k);
    std::vector<Gf4> v(static_cast<size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::unshifted(int k) const {
    if (is_zero() || k == 0) {
        return *this;
    }
    if (valuation() < k) {
        throw Error("unshifted: polynomial not divisible by D^" + std::to_string(k));
    }
    return Poly(field_, std::vector<Gf4>(coeffs_.begin() + k, coeffs_.end()));
}

Poly Poly::stretched(int factor) const {
    if (is_zero()) {
        return *this;
    }
    check_degree(degree() * factor);
    std::vector<Gf4> v(static_cast<size_t>(degree() * factor) + 1);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        v[i * factor] = coeffs_[i];
    }
    return Poly(field_, std::move(v));
}

Poly Poly::decimated(int factor, int phase) const {
    std::vector<Gf4> v;
    for (int i = phase; i <= degree(); i += factor) {
        v.push_back(coeffs_[i]);
    }
    return Poly(field_, std::move(v));
}

Poly Poly::reversed() const {
    std::vector<Gf4> v(coeffs_.rbegin(), coeffs_.rend());
    return Poly(field_, std::move(v));
}

Poly Poly::conj() const {
    std::vector<Gf4> v = coeffs_;
    for (Gf4 &x : v) {
        x = x.conj();
    }
    return Poly(field_, std::move(v));
}

Poly Poly::promoted() const {
    return Poly(Field::GF4, coeffs_);
}

Poly Poly::operator+(const Poly &o) const {
    require_same_field(field_, o.field_);
    std::vector<Gf4> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < coeffs_.size(); i++) {
        v[i] = coeffs_[i];
    }
    for (size_t i = 0; i < o.coeffs_.size(); i++) {
        v[i] += o.coeffs_[i];
    }
    return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly &o) const {
    require_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) {
        return Poly(field_);
    }
    check_degree(degree() + o.degree());
    std::vector<Gf4> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < o.coeffs_.size(); j++) {
            v[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return Poly(field_, std::move(v));
}

Poly &Poly::operator+=(const Poly &o) {
    *this = *this + o;
    return *this;
}

Poly &Poly::operator*=(const Poly &o) {
    *this = *this * o;
    return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly &a, const Poly &b) {
    require_same_field(a.field_, b.field_);
    if (b.is_zero()) {
        throw Error("polynomial division by zero");
    }
    std::vector<Gf4> rem = a.coeffs_;
    int db = b.degree();
    Gf4 inv_lead = b.leading().inverse();
    std::vector<Gf4> quot(a.degree() >= db ? a.degree() - db + 1 : 0);
    for (int i = a.degree(); i >= db; i--) {
        Gf4 c = rem[i] * inv_lead;
        if (c.is_zero()) {
            continue;
        }
        quot[i - db] = c;
        for (int j = 0; j <= db; j++) {
            rem[i - db + j] += c * b.coeffs_[j];
        }
    }
    return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
}

Poly Poly::operator/(const Poly &o) const {
    return divmod(*this, o).first;
}

Poly Poly::operator%(const Poly &o) const {
    return divmod(*this, o).second;
}

std::string Poly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        Gf4 c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (i == 0) {
            out += coeff_str(c);
            continue;
        }
        if (c != Gf4::one()) {
            out += coeff_str(c) + "*";
        }
        out += "D";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly gcd(const Poly &a, const Poly &b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly(a.field());
    }
    return (a / gcd(a, b) * b).monic();
}

ExtendedGcd extended_gcd(const Poly &a, const Poly &b) {
    Field f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1(f);
    Poly t0(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = Poly::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        return {r0, s0, t0};
    }
    Gf4 inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly parse_poly(std::string_view text, Field field) {
    std::string_view whole = text;
    text = strip_parens(text);
    if (text.empty()) {
        throw ParseError("empty polynomial");
    }
    Poly result(field);
    while (!text.empty()) {
        size_t plus = text.find('+');
        std::string_view term = trim_view(text.substr(0, plus));
        text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
        if (term.empty()) {
            throw ParseError("empty term in '" + std::string(whole) + "'");
        }
        size_t d = term.find('D');
        if (d == std::string_view::npos) {
            result += Poly::constant(field, parse_coeff(term, field, whole));
            continue;
        }
        std::string_view coeff_part = trim_view(term.substr(0, d));
        if (!coeff_part.empty() && coeff_part.back() == '*') {
            coeff_part = trim_view(coeff_part.substr(0, coeff_part.size() - 1));
        }
        Gf4 c = coeff_part.empty() ? Gf4::one() : parse_coeff(coeff_part, field, whole);
        std::string_view rest = trim_view(term.substr(d + 1));
        int power = 1;
        if (!rest.empty()) {
            if (rest.front() != '^') {
                throw ParseError("bad term '" + std::string(term) + "'");
            }
            rest = trim_view(rest.substr(1));
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), power);
            if (ec != std::errc{} || ptr != rest.data() + rest.size() || power < 0) {
                throw ParseError("bad exponent in '" + std::string(term) + "'");
            }
        }
        result += Poly::monomial(field, power, c);
    }
    return result;
}

LaurentPoly::LaurentPoly(Field field) : body_(field) {
}

LaurentPoly::LaurentPoly(const Poly &p, int shift) : body_(p), low_(0) {
    if (body_.is_zero()) {
        return;
    }
    int v = body_.valuation();
    body_ = body_.unshifted(v);
    low_ = shift + v;
}

Gf4 LaurentPoly::coeff(int power) const {
    return body_.coeff(power - low_);
}

LaurentPoly LaurentPoly::inverted() const {
    if (is_zero()) {
        return *this;
    }
    return LaurentPoly(body_.reversed(), -high_power());
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    int base = std::min(low_, o.low_);
    return LaurentPoly(body_.shifted(low_ - base) + o.body_.shifted(o.low_ - base), base);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
    if (is_zero() || o.is_zero()) {
        return LaurentPoly(field());
    }
    return LaurentPoly(body_ * o.body_, low_ + o.low_);
}

std::string LaurentPoly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = low_; k <= high_power(); k++) {
        Gf4 c = coeff(k);
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (k == 0) {
            out += coeff_str(c);
            continue;
        }
        if (c != Gf4::one()) {
            out += coeff_str(c) + "*";
        }
        out += "D";
        if (k != 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

RationalFn::RationalFn(Field field) : num_(field), den_(Poly::one(field)) {
}

RationalFn::RationalFn(const Poly &p) : num_(p), den_(Poly::one(p.field())) {
}

RationalFn::RationalFn(const Poly &num, const Poly &den) {
    require_same_field(num.field(), den.field());
    if (den.is_zero()) {
        throw Error("rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = Poly(num.field());
        den_ = Poly::one(num.field());
        return;
    }
    Poly g = gcd(num, den);
    Poly n = num / g;
    Poly d = den / g;
    Gf4 inv = d.leading().inverse();
    num_ = n.scaled(inv);
    den_ = d.scaled(inv);
}

RationalFn RationalFn::from_ints(Field field, uint64_t num_mask, uint64_t den_mask) {
    Poly n = Poly::from_mask(num_mask);
    Poly d = Poly::from_mask(den_mask);
    if (field == Field::GF4) {
        n = n.promoted();
        d = d.promoted();
    }
    return RationalFn(n, d);
}

int RationalFn::delay() const {
    if (is_zero()) {
        return 1 << 20;
    }
    return num_.valuation() - den_.valuation();
}

int RationalFn::complexity() const {
    return std::max(num_.degree(), 0) + den_.degree();
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) {
        throw Error("inverse of zero rational function");
    }
    return RationalFn(den_, num_);
}

RationalFn RationalFn::stretched(int factor) const {
    return RationalFn(num_.stretched(factor), den_.stretched(factor));
}

RationalFn RationalFn::inverted() const {
    if (is_zero()) {
        return *this;
    }
    // n(1/D)/d(1/D) = D^(deg d - deg n) * rev(n) / rev(d)
    int k = den_.degree() - num_.degree();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    if (k >= 0) {
        return RationalFn(n.shifted(k), d);
    }
    return RationalFn(n, d.shifted(-k));
}

RationalFn RationalFn::conj() const {
    return RationalFn(num_.conj(), den_.conj());
}

RationalFn RationalFn::promoted() const {
    return RationalFn(num_.promoted(), den_.promoted());
}

RationalFn RationalFn::times_power(int k) const {
    if (k >= 0) {
        return RationalFn(num_.shifted(k), den_);
    }
    return RationalFn(num_, den_.shifted(-k));
}

RationalFn RationalFn::operator+(const RationalFn &o) const {
    require_same_field(field(), o.field());
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    if (den_ == o.den_) {
        return RationalFn(num_ + o.num_, den_);
    }
    Poly g = gcd(den_, o.den_);
    Poly a = o.den_ / g;
    Poly b = den_ / g;
    return RationalFn(num_ * a + o.num_ * b, den_ * a);
}

RationalFn RationalFn::operator*(const RationalFn &o) const {
    require_same_field(field(), o.field());
    if (is_zero() || o.is_zero()) {
        return RationalFn(field());
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    return RationalFn((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

RationalFn RationalFn::operator/(const RationalFn &o) const {
    return *this * o.inverse();
}

std::string RationalFn::str() const {
    if (is_polynomial()) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFn rat_reduce(const Poly &num, const Poly &den) {
    return RationalFn(num, den);
}

RationalFn parse_rational(std::string_view text, Field field) {
    std::string_view s = trim_view(text);
    int depth = 0;
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '(') {
            depth++;
        } else if (s[i] == ')') {
            depth--;
        } else if (s[i] == '/' && depth == 0) {
            return RationalFn(parse_poly(s.substr(0, i), field), parse_poly(s.substr(i + 1), field));
        }
    }
    return RationalFn(parse_poly(s, field));
}

}  // namespace qcc
