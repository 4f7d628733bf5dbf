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

#ifndef QCC_FIELD_H
#define QCC_FIELD_H

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>

namespace qcc {

enum class Field : uint8_t { GF2, GF4 };

constexpr std::string_view field_name(Field f) {
    return f == Field::GF2 ? "gf2" : "gf4";
}

/// Number of elements of the field.
constexpr unsigned field_size(Field f) {
    return f == Field::GF2 ? 2 : 4;
}

/// Bits used to pack one field symbol into a machine word.
constexpr unsigned symbol_bits(Field f) {
    return f == Field::GF2 ? 1 : 2;
}

/// An element of GF(4) = {0, 1, w, w2} with w^2 = w + 1.
///
/// The two-bit encoding a + 2b stands for a + b*w, so addition is XOR and the
/// integer order 0 < 1 < w < w2 is the symbol order used for tie-breaking.
/// GF(2) values are the elements with encoding 0 or 1.
class Gf4 {
   public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(uint8_t bits) : bits_(bits & 3) {
    }

    static constexpr Gf4 zero() {
        return Gf4(0);
    }
    static constexpr Gf4 one() {
        return Gf4(1);
    }
    static constexpr Gf4 omega() {
        return Gf4(2);
    }
    static constexpr Gf4 omega_bar() {
        return Gf4(3);
    }

    constexpr uint8_t bits() const {
        return bits_;
    }
    constexpr bool is_zero() const {
        return bits_ == 0;
    }
    constexpr bool in_gf2() const {
        return bits_ <= 1;
    }

    constexpr Gf4 operator+(Gf4 o) const {
        return Gf4(bits_ ^ o.bits_);
    }
    constexpr Gf4 operator-(Gf4 o) const {
        return *this + o;
    }
    constexpr Gf4 &operator+=(Gf4 o) {
        bits_ ^= o.bits_;
        return *this;
    }
    constexpr Gf4 operator*(Gf4 o) const {
        constexpr std::array<std::array<uint8_t, 4>, 4> kMul{{
            {0, 0, 0, 0},
            {0, 1, 2, 3},
            {0, 2, 3, 1},
            {0, 3, 1, 2},
        }};
        return Gf4(kMul[bits_][o.bits_]);
    }
    constexpr Gf4 &operator*=(Gf4 o) {
        *this = *this * o;
        return *this;
    }

    /// Multiplicative inverse. Undefined for zero (returns zero).
    constexpr Gf4 inverse() const {
        constexpr std::array<uint8_t, 4> kInv{0, 1, 3, 2};
        return Gf4(kInv[bits_]);
    }
    constexpr Gf4 operator/(Gf4 o) const {
        return *this * o.inverse();
    }

    /// Frobenius conjugate x -> x^2 (swaps w and w2).
    constexpr Gf4 conj() const {
        constexpr std::array<uint8_t, 4> kConj{0, 1, 3, 2};
        return Gf4(kConj[bits_]);
    }

    /// Absolute trace x + x^2, always in GF(2).
    constexpr Gf4 trace() const {
        return *this + conj();
    }

    constexpr auto operator<=>(const Gf4 &) const = default;

   private:
    uint8_t bits_ = 0;
};

}  // namespace qcc

#endif
