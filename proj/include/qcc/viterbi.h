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

#ifndef QCC_VITERBI_H
#define QCC_VITERBI_H

#include <array>
#include <cstdint>
#include <vector>

#include "qcc/trellis.h"

namespace qcc {

/// Costs are integers; Pauli tables are quantized on a 2^16 grid.
constexpr double kMetricScale = 65536.0;

/// Per-qubit cost indexed by PauliOp, relative to I (cost[I] = 0).
using PauliCostTable = std::array<uint64_t, 4>;

/// Each qubit flips its X and Z components independently with probability p.
/// X and Z cost q = round(2^16 log((1-p)/p)) and Y costs exactly 2q, so the
/// table orders paths the same way as bit Hamming weight.
PauliCostTable channel_cost_table(double p);
/// General memoryless Pauli channel; probabilities indexed by PauliOp.
PauliCostTable pauli_cost_table(const std::array<double, 4> &probs);

/// How a 2-bit symbol of a trellis word maps to a Pauli.
enum class SymbolLayout {
    Symplectic,  // bits (x, z) as in ErrorFrame
    Gf4Conj,     // a GF(4) symbol holding the conjugate of the Pauli label
};

/// Cost of an output difference word, summed over 2-bit symbols.
class BranchMetric {
   public:
    /// Bit Hamming weight.
    static BranchMetric hamming();
    static BranchMetric pauli(const PauliCostTable &table, SymbolLayout layout);

    uint64_t cost(Word diff) const {
        uint64_t c = 0;
        for (; diff; diff >>= 8) {
            c += bytes_[diff & 0xFF];
        }
        return c;
    }
    bool is_hamming() const {
        return hamming_;
    }

   private:
    bool hamming_ = true;
    std::array<uint64_t, 256> bytes_{};
};

enum class EndPolicy { ZeroState, Free };

struct ViterbiOptions {
    EndPolicy end = EndPolicy::ZeroState;
    /// Steps whose difference W ^ label must be zero. Empty means none.
    std::vector<uint8_t> forced_clean;
};

struct DecodeResult {
    Stream codeword;
    Stream error;
    uint64_t path_metric = 0;
    uint64_t tie_count = 0;
    Word end_state = 0;
    bool feasible = false;
};

/// Maximum-likelihood path from the zero state. Ties prefer the smaller most
/// recent input word, then the smaller predecessor state.
DecodeResult viterbi_decode(const Trellis &t, const Stream &w, const BranchMetric &metric,
                            const ViterbiOptions &opts = {});

}  // namespace qcc

#endif
