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

#include "qcc/trellis.h"

#include "qcc/errors.h"

namespace qcc {

Trellis build_trellis(const TransferSystem &gen, size_t state_cap) {
    const StateSpace &ss = gen.realization();
    if (gen.input_advance() != 0) {
        throw Error("build_trellis: generator must be causal");
    }
    unsigned sb = symbol_bits(gen.field());
    size_t state_bits = ss.state_dim() * sb;
    size_t input_bits = ss.inputs() * sb;
    if (state_bits >= 63 || (size_t{1} << state_bits) > state_cap) {
        throw DegreeCapError("trellis needs 2^" + std::to_string(state_bits) + " states, cap is " +
                             std::to_string(state_cap));
    }
    if (input_bits > 16) {
        throw DegreeCapError("trellis input alphabet too large: 2^" + std::to_string(input_bits));
    }
    Trellis t;
    t.field_ = gen.field();
    t.k_ = ss.inputs();
    t.n_ = ss.outputs();
    t.states_ = size_t{1} << state_bits;
    t.inputs_ = size_t{1} << input_bits;
    t.next_.resize(t.states_ * t.inputs_);
    t.label_.resize(t.states_ * t.inputs_);
    for (size_t s = 0; s < t.states_; s++) {
        for (size_t u = 0; u < t.inputs_; u++) {
            auto [nx, y] = ss.step(s, u);
            t.next_[s * t.inputs_ + u] = nx;
            t.label_[s * t.inputs_ + u] = y;
        }
    }
    return t;
}

}  // namespace qcc
