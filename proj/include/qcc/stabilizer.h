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

#ifndef QCC_STABILIZER_H
#define QCC_STABILIZER_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/errors.h"
#include "qcc/pauli.h"
#include "qcc/rat_matrix.h"

namespace qcc {

/// The stabilizer has no GF(4)-linear description the decoder can use.
class NoQuaternaryEquivalentError : public Error {
   public:
    using Error::Error;
};

/// An [n,k,m] quantum convolutional code given by its n-k block-0 generators,
/// each n(m+1) Pauli symbols long. Block b of a generator contributes the
/// coefficient of D^b in the binary pair (P(D) | Q(D)).
class StabilizerSpec {
   public:
    /// Validates symbol counts and generator independence. Commutation is not
    /// checked here; see check_symplectic.
    StabilizerSpec(size_t n, size_t k, size_t m, std::vector<std::vector<PauliOp>> generators);
    static StabilizerSpec from_strings(size_t n, size_t k, size_t m, const std::vector<std::string> &generators);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return k_;
    }
    size_t m() const {
        return m_;
    }
    size_t checks() const {
        return n_ - k_;
    }
    /// Length of the all-I tail appended to every frame: n(m+1) qubits.
    size_t padding_qubits() const {
        return n_ * (m_ + 1);
    }
    const std::vector<std::vector<PauliOp>> &generators() const {
        return generators_;
    }
    PauliOp symbol(size_t gen, size_t block, size_t col) const {
        return generators_[gen][block * n_ + col];
    }
    const RatMatrix &p() const {
        return p_;
    }
    const RatMatrix &q() const {
        return q_;
    }
    std::string str() const;

   private:
    size_t n_, k_, m_;
    std::vector<std::vector<PauliOp>> generators_;
    RatMatrix p_, q_;
};

/// Parses "qcc n=<int> k=<int> m=<int>" followed by n-k Pauli strings.
/// Lines starting with '#' and blank lines are ignored.
StabilizerSpec parse_stabilizer(std::string_view text);
StabilizerSpec load_stabilizer(const std::filesystem::path &path);

struct SymplecticReport {
    bool ok = true;
    size_t row = 0;
    size_t col = 0;
    LaurentPoly witness = LaurentPoly(Field::GF2);
};

/// Evaluates P(D) Q(1/D)^T + Q(D) P(1/D)^T; it vanishes exactly when every
/// pair of shifted generators commutes. On failure reports the first nonzero
/// entry.
SymplecticReport check_symplectic(const StabilizerSpec &spec);

/// H_b(D) = P(D^2) + D Q(D^2), an (n-k) x n polynomial matrix over GF(2).
RatMatrix to_binary_transfer(const StabilizerSpec &spec);

/// Block-time form of the measured phase of H_b: an (n-k) x 2n matrix whose
/// column 2c is the odd polyphase component of H_b[., c] and column 2c+1 its
/// even component. Acting on block words in ErrorFrame bit order it yields
/// exactly the measured syndrome.
RatMatrix to_syndrome_transfer(const RatMatrix &hb);
RatMatrix to_syndrome_transfer(const StabilizerSpec &spec);

/// GF(4) description: the generators span hq's GF(4) row space, and binary
/// generator i equals sum_r alpha[i][r] * hq row r.
struct QuaternaryTransfer {
    RatMatrix hq;
    std::vector<std::vector<Gf4>> alpha;
};

/// GF(4) image of each generator row: entry c is sum_b label(symbol) D^b.
std::vector<std::vector<Poly>> quaternary_rows(const StabilizerSpec &spec);

/// Throws NoQuaternaryEquivalentError unless the generators' binary span is
/// closed under multiplication by w.
QuaternaryTransfer to_quaternary_transfer(const StabilizerSpec &spec);

/// Syndrome of a frame of whole blocks, one word of n-k bits per block
/// position u. Generator i at position u places its block b on frame block
/// u - b; blocks before the frame start are identity.
Stream syndrome_of(const StabilizerSpec &spec, const ErrorFrame &frame);

}  // namespace qcc

#endif
