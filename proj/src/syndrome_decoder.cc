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

#include "qcc/syndrome_decoder.h"

#include <algorithm>

#include "qcc/errors.h"

namespace qcc {

std::string decode_field_name(DecodeField f) {
    return f == DecodeField::Binary ? "gf2" : "gf4";
}

DecodeField parse_decode_field(const std::string &name) {
    if (name == "gf2" || name == "binary") {
        return DecodeField::Binary;
    }
    if (name == "gf4") {
        return DecodeField::GF4;
    }
    throw ParseError("unknown field '" + name + "' (use gf2 or gf4)");
}

namespace {

/// Binary syndrome word produced by a GF(4) syndrome word sigma (conjugated
/// components): bit i = Tr(sum_r alpha_ir sigma_r).
Word pack_gf4(const std::vector<std::vector<Gf4>> &alpha, Word sigma) {
    Word s = 0;
    for (size_t i = 0; i < alpha.size(); i++) {
        Gf4 acc;
        for (size_t r = 0; r < alpha[i].size(); r++) {
            acc += alpha[i][r] * symbol_at(sigma, r, Field::GF4);
        }
        s |= static_cast<Word>(acc.trace().bits()) << i;
    }
    return s;
}

}  // namespace

SyndromeDecoder::SyndromeDecoder(const StabilizerSpec &spec, DecoderOptions opts)
    : spec_(spec), opts_(std::move(opts)) {
    RatMatrix h;
    if (opts_.field == DecodeField::Binary) {
        h = to_syndrome_transfer(spec_);
    } else {
        QuaternaryTransfer q = to_quaternary_transfer(spec_);
        h = q.hq;
        size_t r = q.hq.rows();
        unpack_.assign(size_t{1} << spec_.checks(), ~Word{0});
        for (Word sigma = 0; sigma < (Word{1} << (2 * r)); sigma++) {
            unpack_[pack_gf4(q.alpha, sigma)] = sigma;
        }
        if (std::count(unpack_.begin(), unpack_.end(), ~Word{0})) {
            throw NoQuaternaryEquivalentError("GF(4) syndrome packing is not invertible");
        }
    }
    bundle_ = opts_.isf_matrix ? derive_bundle_with_isf(h, *opts_.isf_matrix) : derive_bundle(h, opts_.isf);
    trellis_ = build_trellis(bundle_.gen);
    binary_sf_ = derive_sf(to_syndrome_transfer(spec_));
    if (opts_.channel_p) {
        SymbolLayout layout = opts_.field == DecodeField::Binary ? SymbolLayout::Symplectic : SymbolLayout::Gf4Conj;
        metric_ = BranchMetric::pauli(channel_cost_table(*opts_.channel_p), layout);
    } else if (opts_.field == DecodeField::Binary) {
        metric_ = BranchMetric::hamming();
    } else {
        // Bit weight of the Pauli behind each conjugated label.
        metric_ = BranchMetric::pauli({0, 1, 1, 2}, SymbolLayout::Gf4Conj);
    }

    const RatMatrix &l = bundle_.isf.matrix();
    fir_ = l.is_laurent();
    int a = bundle_.isf.input_advance();
    int isf_span = std::max(l.times_power(a).max_degree() - a, 0);
    size_t nu = 0;
    for (size_t len : bundle_.gen.realization().row_lengths()) {
        nu = std::max(nu, len);
    }
    tail_ = static_cast<size_t>(h.max_degree()) + (fir_ ? static_cast<size_t>(isf_span) + nu : 0) + 1;
}

size_t SyndromeDecoder::window(size_t blocks) const {
    return static_cast<size_t>(bundle_.isf.input_advance()) + blocks + tail_;
}

Stream SyndromeDecoder::to_isf_input(const Stream &syndrome) const {
    if (opts_.field == DecodeField::Binary) {
        return syndrome;
    }
    Stream out(syndrome.size());
    for (size_t u = 0; u < syndrome.size(); u++) {
        if (syndrome[u] >= unpack_.size()) {
            throw LengthError("syndrome word wider than n-k bits");
        }
        out[u] = unpack_[syndrome[u]];
    }
    return out;
}

ErrorFrame SyndromeDecoder::to_frame(const Stream &words, size_t begin, size_t blocks) const {
    if (opts_.field == DecodeField::Binary) {
        return ErrorFrame::from_blocks(std::span<const Word>(words.data() + begin, blocks), spec_.n());
    }
    ErrorFrame e(blocks * spec_.n());
    for (size_t b = 0; b < blocks; b++) {
        for (size_t c = 0; c < spec_.n(); c++) {
            e.set(b * spec_.n() + c, gf4_to_pauli(symbol_at(words[begin + b], c, Field::GF4).conj()));
        }
    }
    return e;
}

DecodeOutcome SyndromeDecoder::decode(const Stream &syndrome, size_t blocks) const {
    size_t a = static_cast<size_t>(bundle_.isf.input_advance());
    size_t steps = window(blocks);
    DecodeOutcome out;
    out.error = ErrorFrame(blocks * spec_.n());
    for (size_t u = blocks + spec_.m(); u < syndrome.size(); u++) {
        if (syndrome[u]) {
            return out;
        }
    }
    Stream w = bundle_.isf.run(to_isf_input(syndrome), steps);
    ViterbiOptions vo;
    if (opts_.terminate) {
        vo.end = fir_ ? EndPolicy::ZeroState : EndPolicy::Free;
        vo.forced_clean.assign(steps, 1);
        std::fill(vo.forced_clean.begin() + a, vo.forced_clean.begin() + a + blocks, 0);
    } else {
        vo.end = EndPolicy::Free;
    }
    DecodeResult r = viterbi_decode(trellis_, w, metric_, vo);
    out.feasible = r.feasible;
    out.candidate = std::move(w);
    if (!r.feasible) {
        return out;
    }
    out.error = to_frame(r.error, a, blocks);
    out.path_metric = r.path_metric;
    out.tie_count = r.tie_count;
    out.end_state = r.end_state;
    out.codeword = std::move(r.codeword);
    return out;
}

Stream SyndromeDecoder::measure(const ErrorFrame &e) const {
    if (e.qubits() % spec_.n()) {
        throw LengthError("frame is not a whole number of blocks");
    }
    Stream blocks = e.to_blocks(spec_.n());
    return binary_sf_.run(blocks, blocks.size() + spec_.m());
}

}  // namespace qcc
