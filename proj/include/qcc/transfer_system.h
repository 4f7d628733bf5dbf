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

#ifndef QCC_TRANSFER_SYSTEM_H
#define QCC_TRANSFER_SYSTEM_H

#include <string>
#include <utility>
#include <vector>

#include "qcc/pauli.h"
#include "qcc/rat_matrix.h"

namespace qcc {

/// Linear sequential circuit in row-vector form: x' = x A + u B, y = x C + u D.
/// State, input and output vectors are packed into Words with one field symbol
/// per symbol_bits(field) bits. Because every map is linear over the field, a
/// step is the XOR of one precomputed table entry per nonzero symbol.
class StateSpace {
   public:
    StateSpace() = default;

    Field field() const {
        return field_;
    }
    size_t state_dim() const {
        return state_dim_;
    }
    size_t inputs() const {
        return inputs_;
    }
    size_t outputs() const {
        return outputs_;
    }
    /// Registers per input row.
    const std::vector<size_t> &row_lengths() const {
        return row_lengths_;
    }

    /// (next state, output) for the given packed state and input.
    std::pair<Word, Word> step(Word state, Word input) const;

   private:
    friend StateSpace realize(const RatMatrix &m);

    Field field_ = Field::GF2;
    size_t state_dim_ = 0, inputs_ = 0, outputs_ = 0;
    std::vector<size_t> row_lengths_;
    // Indexed [coordinate * 4 + value].
    std::vector<Word> state_next_, state_out_, input_next_, input_out_;
};

/// Controller-canonical realization, one register chain per input row. Row i
/// uses the lcm d_i of its denominators (scaled so d_i(0) = 1) as feedback and
/// M_ij d_i as feed-forward taps; it needs max(deg d_i, deg M_ij d_i) registers.
/// Throws Error if an entry is non-causal.
StateSpace realize(const RatMatrix &m);

/// Largest power D^a that must multiply m to make every entry causal.
int required_advance(const RatMatrix &m);

enum class Role { SF, ISF, GEN };
std::string role_name(Role r);

/// A transfer matrix with its streaming circuit. The circuit realizes
/// D^input_advance * matrix, so its output is the true output delayed by
/// input_advance steps.
class TransferSystem {
   public:
    TransferSystem() = default;
    static TransferSystem from_matrix(RatMatrix matrix, Role role);

    const RatMatrix &matrix() const {
        return matrix_;
    }
    int input_advance() const {
        return advance_;
    }
    const StateSpace &realization() const {
        return ss_;
    }
    Role role() const {
        return role_;
    }
    Field field() const {
        return matrix_.field();
    }
    size_t inputs() const {
        return matrix_.rows();
    }
    size_t outputs() const {
        return matrix_.cols();
    }

    /// Runs `steps` steps from the zero state; input words past the end of
    /// `input` are zero.
    Stream run(const Stream &input, size_t steps) const;
    /// Runs until the input is consumed and the state has been flushed by
    /// `flush` zero steps.
    Stream run_stream(const Stream &input, size_t flush) const;

   private:
    RatMatrix matrix_;
    int advance_ = 0;
    StateSpace ss_;
    Role role_ = Role::SF;
};

/// Packed symbol helpers.
inline Gf4 symbol_at(Word w, size_t j, Field f) {
    unsigned b = symbol_bits(f);
    return Gf4(static_cast<uint8_t>((w >> (j * b)) & ((1u << b) - 1)));
}
inline Word with_symbol(Word w, size_t j, Field f, Gf4 v) {
    unsigned b = symbol_bits(f);
    Word mask = static_cast<Word>((1u << b) - 1) << (j * b);
    return (w & ~mask) | (static_cast<Word>(v.bits()) << (j * b));
}

}  // namespace qcc

#endif
