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

#include "qcc/pauli.h"

#include <ostream>

#include <bit>

#include "qcc/errors.h"

namespace qcc {

Gf4 pauli_to_gf4(PauliOp p) {
    switch (p) {
        case PauliOp::I:
            return Gf4::zero();
        case PauliOp::Y:
            return Gf4::one();
        case PauliOp::X:
            return Gf4::omega();
        case PauliOp::Z:
            return Gf4::omega_bar();
    }
    return Gf4::zero();
}

PauliOp gf4_to_pauli(Gf4 v) {
    switch (v.bits()) {
        case 1:
            return PauliOp::Y;
        case 2:
            return PauliOp::X;
        case 3:
            return PauliOp::Z;
        default:
            return PauliOp::I;
    }
}

char pauli_char(PauliOp p) {
    return "IXZY"[static_cast<int>(p)];
}

PauliOp pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return PauliOp::I;
        case 'X':
            return PauliOp::X;
        case 'Y':
            return PauliOp::Y;
        case 'Z':
            return PauliOp::Z;
        default:
            throw ParseError(std::string("invalid Pauli character '") + c + "'");
    }
}

ErrorFrame::ErrorFrame(size_t qubits) : bits_(2 * qubits, 0) {
}

ErrorFrame ErrorFrame::from_bits(std::vector<uint8_t> bits) {
    if (bits.size() % 2) {
        throw LengthError("error frame needs an even number of bits, got " + std::to_string(bits.size()));
    }
    ErrorFrame f;
    for (auto &b : bits) {
        b &= 1;
    }
    f.bits_ = std::move(bits);
    return f;
}

ErrorFrame ErrorFrame::from_paulis(std::span<const PauliOp> paulis) {
    ErrorFrame f(paulis.size());
    for (size_t q = 0; q < paulis.size(); q++) {
        f.set(q, paulis[q]);
    }
    return f;
}

ErrorFrame ErrorFrame::from_string(std::string_view paulis) {
    ErrorFrame f(paulis.size());
    for (size_t q = 0; q < paulis.size(); q++) {
        f.set(q, pauli_from_char(paulis[q]));
    }
    return f;
}

ErrorFrame ErrorFrame::from_blocks(std::span<const Word> blocks, size_t n) {
    ErrorFrame f(blocks.size() * n);
    for (size_t b = 0; b < blocks.size(); b++) {
        for (size_t j = 0; j < 2 * n; j++) {
            f.bits_[b * 2 * n + j] = (blocks[b] >> j) & 1;
        }
    }
    return f;
}

void ErrorFrame::set(size_t q, PauliOp p) {
    uint8_t xz = symplectic_bits(p);
    bits_[2 * q] = xz & 1;
    bits_[2 * q + 1] = xz >> 1;
}

std::vector<PauliOp> ErrorFrame::paulis() const {
    std::vector<PauliOp> out(qubits());
    for (size_t q = 0; q < out.size(); q++) {
        out[q] = pauli(q);
    }
    return out;
}

std::string ErrorFrame::str() const {
    std::string out(qubits(), 'I');
    for (size_t q = 0; q < out.size(); q++) {
        out[q] = pauli_char(pauli(q));
    }
    return out;
}

Stream ErrorFrame::to_blocks(size_t n) const {
    if (n == 0 || qubits() % n) {
        throw LengthError("frame of " + std::to_string(qubits()) + " qubits is not a whole number of " +
                          std::to_string(n) + "-qubit blocks");
    }
    Stream out(qubits() / n, 0);
    for (size_t i = 0; i < bits_.size(); i++) {
        out[i / (2 * n)] |= static_cast<Word>(bits_[i]) << (i % (2 * n));
    }
    return out;
}

size_t ErrorFrame::bit_weight() const {
    size_t w = 0;
    for (uint8_t b : bits_) {
        w += b;
    }
    return w;
}

size_t ErrorFrame::qubit_weight() const {
    size_t w = 0;
    for (size_t q = 0; q < qubits(); q++) {
        w += pauli(q) != PauliOp::I;
    }
    return w;
}

ErrorFrame ErrorFrame::operator^(const ErrorFrame &o) const {
    if (o.bits_.size() != bits_.size()) {
        throw LengthError("xor of frames with different lengths");
    }
    ErrorFrame f = *this;
    for (size_t i = 0; i < bits_.size(); i++) {
        f.bits_[i] ^= o.bits_[i];
    }
    return f;
}

ErrorFrame pauli_to_bits(std::span<const PauliOp> paulis) {
    return ErrorFrame::from_paulis(paulis);
}

std::vector<PauliOp> bits_to_pauli(const ErrorFrame &frame) {
    return frame.paulis();
}

std::ostream &operator<<(std::ostream &out, const ErrorFrame &frame) {
    return out << frame.str();
}

}  // namespace qcc
