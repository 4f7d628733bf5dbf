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

#ifndef QCC_PAULI_H
#define QCC_PAULI_H

#include <cstdint>
#include <span>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/field.h"

namespace qcc {

/// One packed time step of a stream: symbol j occupies bits
/// [j * symbol_bits, (j + 1) * symbol_bits).
using Word = uint64_t;
using Stream = std::vector<Word>;

enum class PauliOp : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// Symplectic bits: bit 0 is the X component, bit 1 the Z component.
constexpr uint8_t symplectic_bits(PauliOp p) {
    return static_cast<uint8_t>(p);
}
constexpr PauliOp pauli_from_bits(uint8_t xz) {
    return static_cast<PauliOp>(xz & 3);
}
constexpr bool anticommute(PauliOp a, PauliOp b) {
    uint8_t x = symplectic_bits(a), y = symplectic_bits(b);
    return (((x & 1) & (y >> 1)) ^ ((x >> 1) & (y & 1))) != 0;
}

/// Fixed labeling I -> 0, Y -> 1, X -> w, Z -> w2.
Gf4 pauli_to_gf4(PauliOp p);
PauliOp gf4_to_pauli(Gf4 v);

char pauli_char(PauliOp p);
/// Throws ParseError on characters outside IXYZ.
PauliOp pauli_from_char(char c);

/// Binary error frame over `qubits` qubits. Bit 2i is the X component of qubit
/// i and bit 2i+1 its Z component, so one block of n qubits packs into a 2n-bit
/// word in the same order.
class ErrorFrame {
   public:
    ErrorFrame() = default;
    explicit ErrorFrame(size_t qubits);
    /// Throws LengthError on an odd bit count.
    static ErrorFrame from_bits(std::vector<uint8_t> bits);
    static ErrorFrame from_paulis(std::span<const PauliOp> paulis);
    static ErrorFrame from_string(std::string_view paulis);
    /// Inverse of to_blocks: each word holds n qubits.
    static ErrorFrame from_blocks(std::span<const Word> blocks, size_t n);

    size_t qubits() const {
        return bits_.size() / 2;
    }
    const std::vector<uint8_t> &bits() const {
        return bits_;
    }
    PauliOp pauli(size_t q) const {
        return pauli_from_bits(static_cast<uint8_t>(bits_[2 * q] | (bits_[2 * q + 1] << 1)));
    }
    void set(size_t q, PauliOp p);
    void flip_bit(size_t i) {
        bits_[i] ^= 1;
    }

    std::vector<PauliOp> paulis() const;
    std::string str() const;
    Stream to_blocks(size_t n) const;
    size_t bit_weight() const;
    size_t qubit_weight() const;

    ErrorFrame operator^(const ErrorFrame &o) const;
    bool operator==(const ErrorFrame &o) const = default;

   private:
    std::vector<uint8_t> bits_;
};

std::ostream &operator<<(std::ostream &out, const ErrorFrame &frame);

ErrorFrame pauli_to_bits(std::span<const PauliOp> paulis);
std::vector<PauliOp> bits_to_pauli(const ErrorFrame &frame);

}  // namespace qcc

#endif
