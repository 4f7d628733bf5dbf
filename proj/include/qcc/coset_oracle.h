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

#ifndef QCC_COSET_ORACLE_H
#define QCC_COSET_ORACLE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qcc/pauli.h"
#include "qcc/stabilizer.h"

namespace qcc {

/// Linear map from the 2nB error bits of a B-block frame (ErrorFrame bit
/// order) to its (n-k)(B+m) syndrome bits; syndrome bit u(n-k)+i is
/// generator i at block position u.
class SyndromeMap {
   public:
    SyndromeMap(const StabilizerSpec &spec, size_t blocks);

    size_t error_bits() const {
        return columns_.size();
    }
    size_t syndrome_bits() const {
        return syndrome_bits_;
    }
    size_t blocks() const {
        return blocks_;
    }
    uint64_t column(size_t bit) const {
        return columns_[bit];
    }
    uint64_t apply(uint64_t error_mask) const;

   private:
    size_t blocks_, syndrome_bits_;
    std::vector<uint64_t> columns_;
};

uint64_t syndrome_to_mask(const Stream &syndrome, size_t checks);
Stream mask_to_syndrome(uint64_t mask, size_t checks, size_t positions);
uint64_t frame_to_mask(const ErrorFrame &frame);
ErrorFrame mask_to_frame(uint64_t mask, size_t qubits);

struct CosetLeader {
    uint64_t frame = 0;  // error bits as a mask
    unsigned weight = 0;
    uint64_t minimizers = 0;
    bool unique() const {
        return minimizers == 1;
    }
};

/// Minimum bit-weight frame with the given syndrome, searching weights in
/// increasing order up to `max_weight`. Returns nullopt if none is found.
/// Throws DegreeCapError if the frame has more than 64 error bits.
std::optional<CosetLeader> coset_leader(const SyndromeMap &map, uint64_t syndrome, unsigned max_weight);

/// Exhaustive standard array over all 2^error_bits frames (Gray-code walk).
/// Requires error_bits <= 32 and syndrome_bits <= 24.
class CosetLeaderTable {
   public:
    explicit CosetLeaderTable(const SyndromeMap &map);

    const CosetLeader &operator[](uint64_t syndrome) const {
        return table_[syndrome];
    }
    /// False for syndromes no frame produces.
    bool reachable(uint64_t syndrome) const {
        return table_[syndrome].minimizers > 0;
    }
    size_t size() const {
        return table_.size();
    }

   private:
    std::vector<CosetLeader> table_;
};

}  // namespace qcc

#endif
