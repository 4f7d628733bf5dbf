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

#ifndef QCC_TRELLIS_H
#define QCC_TRELLIS_H

#include <vector>

#include "qcc/transfer_system.h"

namespace qcc {

constexpr size_t kDefaultStateCap = size_t{1} << 20;

/// Fully tabulated state graph of a generator circuit. State indices are the
/// packed register words of the realization, so state 0 is the zero state.
class Trellis {
   public:
    Field field() const {
        return field_;
    }
    size_t k() const {
        return k_;
    }
    size_t n() const {
        return n_;
    }
    size_t state_count() const {
        return states_;
    }
    size_t input_count() const {
        return inputs_;
    }
    Word next(size_t state, Word input) const {
        return next_[state * inputs_ + input];
    }
    Word label(size_t state, Word input) const {
        return label_[state * inputs_ + input];
    }

   private:
    friend Trellis build_trellis(const TransferSystem &gen, size_t state_cap);
    Field field_ = Field::GF2;
    size_t k_ = 0, n_ = 0, states_ = 1, inputs_ = 1;
    std::vector<Word> next_, label_;
};

/// Throws DegreeCapError when the state count would exceed `state_cap`.
Trellis build_trellis(const TransferSystem &gen, size_t state_cap = kDefaultStateCap);

}  // namespace qcc

#endif
