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

#include "qcc/coset_oracle.h"

#include <bit>

#include "qcc/errors.h"

namespace qcc {

SyndromeMap::SyndromeMap(const StabilizerSpec &spec, size_t blocks)
    : blocks_(blocks), syndrome_bits_(spec.checks() * (blocks + spec.m())) {
    size_t bits = 2 * spec.n() * blocks;
    if (bits > 64 || syndrome_bits_ > 64) {
        throw DegreeCapError("syndrome map limited to 64 error and syndrome bits");
    }
    // Pad so syndrome_of sees every position the frame can reach.
    ErrorFrame frame(spec.n() * (blocks + spec.m()));
    for (size_t b = 0; b < bits; b++) {
        frame.flip_bit(b);
        columns_.push_back(syndrome_to_mask(syndrome_of(spec, frame), spec.checks()));
        frame.flip_bit(b);
    }
}

uint64_t SyndromeMap::apply(uint64_t error_mask) const {
    uint64_t s = 0;
    for (; error_mask; error_mask &= error_mask - 1) {
        s ^= columns_[std::countr_zero(error_mask)];
    }
    return s;
}

uint64_t syndrome_to_mask(const Stream &syndrome, size_t checks) {
    if (syndrome.size() * checks > 64) {
        throw LengthError("syndrome longer than 64 bits");
    }
    uint64_t mask = 0;
    for (size_t u = 0; u < syndrome.size(); u++) {
        mask |= syndrome[u] << (u * checks);
    }
    return mask;
}

Stream mask_to_syndrome(uint64_t mask, size_t checks, size_t positions) {
    Stream out(positions);
    Word low = (Word{1} << checks) - 1;
    for (size_t u = 0; u < positions; u++) {
        out[u] = (mask >> (u * checks)) & low;
    }
    return out;
}

uint64_t frame_to_mask(const ErrorFrame &frame) {
    if (frame.bits().size() > 64) {
        throw LengthError("frame longer than 64 bits");
    }
    uint64_t mask = 0;
    for (size_t i = 0; i < frame.bits().size(); i++) {
        mask |= static_cast<uint64_t>(frame.bits()[i]) << i;
    }
    return mask;
}

ErrorFrame mask_to_frame(uint64_t mask, size_t qubits) {
    std::vector<uint8_t> bits(2 * qubits);
    for (size_t i = 0; i < bits.size(); i++) {
        bits[i] = (mask >> i) & 1;
    }
    return ErrorFrame::from_bits(std::move(bits));
}

namespace {

/// Visits every w-subset of {0..n-1}, tracking the syndrome incrementally.
template <typename F>
void for_each_subset(const SyndromeMap &map, size_t n, unsigned w, size_t start, uint64_t frame, uint64_t syn,
                     F &&visit) {
    if (w == 0) {
        visit(frame, syn);
        return;
    }
    for (size_t b = start; b + w <= n; b++) {
        for_each_subset(map, n, w - 1, b + 1, frame | (uint64_t{1} << b), syn ^ map.column(b), visit);
    }
}

}  // namespace

std::optional<CosetLeader> coset_leader(const SyndromeMap &map, uint64_t syndrome, unsigned max_weight) {
    size_t n = map.error_bits();
    for (unsigned w = 0; w <= max_weight && w <= n; w++) {
        CosetLeader best;
        best.weight = w;
        for_each_subset(map, n, w, 0, 0, 0, [&](uint64_t frame, uint64_t syn) {
            if (syn == syndrome) {
                if (best.minimizers++ == 0) {
                    best.frame = frame;
                }
            }
        });
        if (best.minimizers) {
            return best;
        }
    }
    return std::nullopt;
}

CosetLeaderTable::CosetLeaderTable(const SyndromeMap &map) {
    size_t n = map.error_bits();
    if (n > 32 || map.syndrome_bits() > 24) {
        throw DegreeCapError("exhaustive coset table limited to 32 error bits and 24 syndrome bits");
    }
    table_.assign(size_t{1} << map.syndrome_bits(), CosetLeader{0, ~0u, 0});
    uint64_t frame = 0, syn = 0;
    unsigned weight = 0;
    uint64_t total = uint64_t{1} << n;
    for (uint64_t i = 0;; i++) {
        CosetLeader &c = table_[syn];
        if (weight < c.weight) {
            c = {frame, weight, 1};
        } else if (weight == c.weight) {
            c.minimizers++;
        }
        if (i + 1 == total) {
            break;
        }
        size_t b = std::countr_zero(i + 1);
        frame ^= uint64_t{1} << b;
        syn ^= map.column(b);
        weight += (frame >> b) & 1 ? 1 : -1;
    }
    for (auto &c : table_) {
        if (c.minimizers == 0) {
            c.weight = 0;
        }
    }
}

}  // namespace qcc
