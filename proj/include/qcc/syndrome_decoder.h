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

#ifndef QCC_SYNDROME_DECODER_H
#define QCC_SYNDROME_DECODER_H

#include <optional>
#include <string>

#include "qcc/code_bundle.h"
#include "qcc/stabilizer.h"
#include "qcc/trellis.h"
#include "qcc/viterbi.h"

namespace qcc {

enum class DecodeField { Binary, GF4 };
std::string decode_field_name(DecodeField f);
DecodeField parse_decode_field(const std::string &name);

struct DecoderOptions {
    DecodeField field = DecodeField::Binary;
    IsfMethod isf = IsfMethod::Auto;
    /// Explicit ISF matrix; overrides `isf` when set.
    std::optional<RatMatrix> isf_matrix;
    /// Channel flip probability for the Pauli metric; Hamming when unset.
    std::optional<double> channel_p;
    /// Keep the forced-clean tail and the end-state rule. Turning this off
    /// gives an unterminated decode (not ML in general).
    bool terminate = true;
};

struct DecodeOutcome {
    ErrorFrame error;  // over the data blocks only
    uint64_t path_metric = 0;
    uint64_t tie_count = 0;
    Word end_state = 0;
    bool feasible = false;
    Stream candidate;  // ISF output over the decoding window
    Stream codeword;
};

/// Syndrome decoder: ISF, then Viterbi over the generator trellis, then XOR.
/// Binary mode works on the block form of the syndrome transfer (one 2n-bit
/// word per block); GF(4) mode works on conjugated GF(4) labels against H_q.
class SyndromeDecoder {
   public:
    SyndromeDecoder(const StabilizerSpec &spec, DecoderOptions opts = {});

    const StabilizerSpec &spec() const {
        return spec_;
    }
    const CodeBundle &bundle() const {
        return bundle_;
    }
    const Trellis &trellis() const {
        return trellis_;
    }
    const DecoderOptions &options() const {
        return opts_;
    }
    const BranchMetric &metric() const {
        return metric_;
    }
    /// Trellis steps used for a frame of `blocks` data blocks.
    size_t window(size_t blocks) const;

    /// Decodes one syndrome stream (n-k bits per block position, bit i for
    /// generator i) for an error confined to `blocks` data blocks. Positions
    /// past the end of the stream are zero.
    DecodeOutcome decode(const Stream &syndrome, size_t blocks) const;

    /// Syndrome of a frame of whole blocks via the syndrome former circuit.
    /// Returns blocks + m positions.
    Stream measure(const ErrorFrame &e) const;

   private:
    Stream to_isf_input(const Stream &syndrome) const;
    ErrorFrame to_frame(const Stream &words, size_t begin, size_t blocks) const;

    StabilizerSpec spec_;
    DecoderOptions opts_;
    CodeBundle bundle_;
    Trellis trellis_;
    BranchMetric metric_;
    TransferSystem binary_sf_;
    std::vector<Word> unpack_;  // binary syndrome word -> GF(4) syndrome word
    size_t tail_ = 0;
    bool fir_ = true;
};

}  // namespace qcc

#endif
