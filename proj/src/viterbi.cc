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

#include "qcc/viterbi.h"

#include <cmath>
#include <limits>

#include "qcc/errors.h"
#include "qcc/pauli.h"

namespace qcc {

namespace {

constexpr uint64_t kInf = std::numeric_limits<uint64_t>::max();

uint64_t quantize(double x) {
    if (!(x >= 0)) {
        throw Error("negative Pauli cost; the identity must be the most likely Pauli");
    }
    return static_cast<uint64_t>(std::llround(x * kMetricScale));
}

}  // namespace

PauliCostTable channel_cost_table(double p) {
    if (!(p > 0 && p < 0.5)) {
        throw Error("channel_cost_table: need 0 < p < 0.5");
    }
    uint64_t q = quantize(std::log((1 - p) / p));
    return {0, q, q, 2 * q};
}

PauliCostTable pauli_cost_table(const std::array<double, 4> &probs) {
    PauliCostTable t{};
    double pi = probs[0];
    for (int i = 1; i < 4; i++) {
        t[i] = probs[i] > 0 ? quantize(std::log(pi / probs[i])) : kInf / 1024;
    }
    return t;
}

BranchMetric BranchMetric::hamming() {
    BranchMetric m;
    for (int b = 0; b < 256; b++) {
        m.bytes_[b] = static_cast<uint64_t>(__builtin_popcount(b));
    }
    return m;
}

BranchMetric BranchMetric::pauli(const PauliCostTable &table, SymbolLayout layout) {
    std::array<uint64_t, 4> sym{};
    for (uint8_t v = 0; v < 4; v++) {
        PauliOp p = layout == SymbolLayout::Symplectic ? pauli_from_bits(v) : gf4_to_pauli(Gf4(v).conj());
        sym[v] = table[static_cast<size_t>(p)];
    }
    BranchMetric m;
    m.hamming_ = false;
    for (int b = 0; b < 256; b++) {
        m.bytes_[b] = sym[b & 3] + sym[(b >> 2) & 3] + sym[(b >> 4) & 3] + sym[(b >> 6) & 3];
    }
    return m;
}

DecodeResult viterbi_decode(const Trellis &t, const Stream &w, const BranchMetric &metric,
                            const ViterbiOptions &opts) {
    size_t steps = w.size();
    size_t S = t.state_count(), I = t.input_count();
    if (!opts.forced_clean.empty() && opts.forced_clean.size() != steps) {
        throw LengthError("forced_clean mask length does not match the candidate length");
    }
    std::vector<uint64_t> cur(S, kInf), nxt(S);
    // Survivor per (step, state): predecessor state and input.
    std::vector<uint32_t> from(steps * S), via(steps * S);
    cur[0] = 0;
    DecodeResult res;
    for (size_t step = 0; step < steps; step++) {
        std::fill(nxt.begin(), nxt.end(), kInf);
        uint32_t *fr = &from[step * S];
        uint32_t *vi = &via[step * S];
        bool forced = !opts.forced_clean.empty() && opts.forced_clean[step];
        Word ws = w[step];
        for (size_t s = 0; s < S; s++) {
            if (cur[s] == kInf) {
                continue;
            }
            for (size_t u = 0; u < I; u++) {
                Word diff = ws ^ t.label(s, u);
                if (forced && diff) {
                    continue;
                }
                uint64_t c = cur[s] + metric.cost(diff);
                size_t ns = t.next(s, u);
                if (c < nxt[ns]) {
                    nxt[ns] = c;
                    fr[ns] = static_cast<uint32_t>(s);
                    vi[ns] = static_cast<uint32_t>(u);
                } else if (c == nxt[ns]) {
                    res.tie_count++;
                    if (u < vi[ns] || (u == vi[ns] && s < fr[ns])) {
                        fr[ns] = static_cast<uint32_t>(s);
                        vi[ns] = static_cast<uint32_t>(u);
                    }
                }
            }
        }
        std::swap(cur, nxt);
    }
    size_t end = 0;
    if (opts.end == EndPolicy::Free) {
        for (size_t s = 1; s < S; s++) {
            if (cur[s] < cur[end]) {
                end = s;
            }
        }
    }
    if (cur[end] == kInf) {
        return res;
    }
    res.feasible = true;
    res.path_metric = cur[end];
    res.end_state = end;
    res.codeword.assign(steps, 0);
    res.error.assign(steps, 0);
    size_t s = end;
    for (size_t step = steps; step-- > 0;) {
        size_t prev = from[step * S + s];
        Word u = via[step * S + s];
        res.codeword[step] = t.label(prev, u);
        res.error[step] = w[step] ^ res.codeword[step];
        s = prev;
    }
    return res;
}

}  // namespace qcc
