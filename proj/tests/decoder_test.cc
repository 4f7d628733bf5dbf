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

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "oracles.h"
#include "qcc/code_bundle.h"
#include "qcc/coset_oracle.h"
#include "qcc/errors.h"
#include "qcc/simulation.h"
#include "qcc/syndrome_decoder.h"
#include "qcc/verify.h"

namespace qcc {
namespace {

using testing::random_frame;
using testing::spec311;

const Field F2 = Field::GF2;
const Field F4 = Field::GF4;

TEST(Trellis, Code311Generator) {
    TransferSystem g = TransferSystem::from_matrix(RatMatrix::parse({{"D^2", "1+D^2", "1+D^2"}}, F2), Role::GEN);
    Trellis t = build_trellis(g);
    EXPECT_EQ(t.state_count(), 4u);
    EXPECT_EQ(t.input_count(), 2u);
    EXPECT_EQ(t.k(), 1u);
    EXPECT_EQ(t.n(), 3u);
    EXPECT_EQ(t.next(0, 0), 0u);
    EXPECT_EQ(t.label(0, 0), 0u);
}

TEST(Trellis, IdentityGenerator) {
    Trellis t = build_trellis(TransferSystem::from_matrix(RatMatrix::parse({{"1"}}, F2), Role::GEN));
    EXPECT_EQ(t.state_count(), 1u);
    EXPECT_EQ(t.label(0, 1), 1u);
}

TEST(Trellis, Gf4Generator) {
    RatMatrix hq = RatMatrix::parse({{"1+D", "1+w*D", "1+w2*D"}}, F4);
    Trellis t = build_trellis(derive_generator(hq));
    EXPECT_EQ(t.field(), F4);
    EXPECT_EQ(t.state_count(), 4u);
    EXPECT_EQ(t.input_count(), 16u);
}

TEST(Trellis, StateCap) {
    RatMatrix big = RatMatrix::parse({{"1+D^12", "1+D^11+D^12"}}, F2);
    EXPECT_THROW(build_trellis(TransferSystem::from_matrix(big, Role::GEN), 1024), DegreeCapError);
    EXPECT_NO_THROW(build_trellis(TransferSystem::from_matrix(big, Role::GEN)));
}

TEST(Trellis, LabelsReproduceCircuit) {
    std::mt19937_64 rng(3);
    for (const RatMatrix &m : {RatMatrix::parse({{"D^2", "1+D^2", "1+D^2"}}, F2),
                               derive_generator_matrix(to_syndrome_transfer(spec311())),
                               derive_generator_matrix(RatMatrix::parse({{"1+D", "1+w*D", "1+w2*D"}}, F4))}) {
        TransferSystem g = TransferSystem::from_matrix(m, Role::GEN);
        Trellis t = build_trellis(g);
        for (int trial = 0; trial < 50; trial++) {
            Stream u = random_stream(rng, 15, m.rows(), m.field());
            Stream y = g.run(u, u.size());
            size_t s = 0;
            for (size_t i = 0; i < u.size(); i++) {
                EXPECT_EQ(t.label(s, u[i]), y[i]);
                s = t.next(s, u[i]);
            }
        }
    }
}

TEST(Viterbi, CodewordDecodesToItself) {
    TransferSystem g = TransferSystem::from_matrix(RatMatrix::parse({{"D^2", "1+D^2", "1+D^2"}}, F2), Role::GEN);
    Trellis t = build_trellis(g);
    Stream cw = g.run(Stream{1, 0, 1, 1, 0, 0}, 6);
    DecodeResult r = viterbi_decode(t, cw, BranchMetric::hamming());
    ASSERT_TRUE(r.feasible);
    EXPECT_EQ(r.codeword, cw);
    EXPECT_EQ(r.error, Stream(6, 0));
    EXPECT_EQ(r.path_metric, 0u);
    EXPECT_EQ(r.end_state, 0u);
}

TEST(Viterbi, SingleFlipAgainstAllCodewords) {
    TransferSystem g = TransferSystem::from_matrix(RatMatrix::parse({{"D^2", "1+D^2", "1+D^2"}}, F2), Role::GEN);
    Trellis t = build_trellis(g);
    // Every terminated codeword on 5 sections: 3 information steps and 2 tail steps.
    std::vector<Stream> codewords;
    for (Word u = 0; u < 8; u++) {
        codewords.push_back(g.run(Stream{u & 1, (u >> 1) & 1, (u >> 2) & 1}, 5));
    }
    for (const Stream &cw : codewords) {
        for (size_t bit = 0; bit < 15; bit++) {
            Stream w = cw;
            w[bit / 3] ^= Word{1} << (bit % 3);
            size_t best = 0, count = 0, best_d = 99;
            for (size_t c = 0; c < codewords.size(); c++) {
                size_t d = 0;
                for (size_t i = 0; i < 5; i++) {
                    d += std::popcount(w[i] ^ codewords[c][i]);
                }
                if (d < best_d) {
                    best_d = d, best = c, count = 1;
                } else if (d == best_d) {
                    count++;
                }
            }
            ASSERT_EQ(count, 1u);
            DecodeResult r = viterbi_decode(t, w, BranchMetric::hamming());
            EXPECT_EQ(r.codeword, codewords[best]);
            EXPECT_EQ(r.codeword, cw);
            EXPECT_EQ(r.path_metric, 1u);
        }
    }
}

TEST(Viterbi, ForcedMaskAndInfeasible) {
    Trellis t = build_trellis(TransferSystem::from_matrix(RatMatrix::parse({{"1+D"}}, F2), Role::GEN));
    ViterbiOptions o;
    o.forced_clean = {1, 1};
    DecodeResult r = viterbi_decode(t, Stream{1, 0}, BranchMetric::hamming(), o);
    EXPECT_FALSE(r.feasible);
    EXPECT_THROW(viterbi_decode(t, Stream{1}, BranchMetric::hamming(), o), LengthError);
}

TEST(Metric, ChannelTableIsProportionalToHamming) {
    for (double p : {0.001, 0.01, 0.05, 0.2}) {
        PauliCostTable c = channel_cost_table(p);
        EXPECT_EQ(c[0], 0u);
        EXPECT_EQ(c[1], c[2]);
        EXPECT_EQ(c[3], 2 * c[1]);
        EXPECT_GT(c[1], 0u);
    }
    ChannelParams ch(0.05);
    PauliCostTable g = pauli_cost_table(ch.probabilities());
    PauliCostTable c = channel_cost_table(0.05);
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(static_cast<double>(g[i]), static_cast<double>(c[i]), 1.0);
    }
    BranchMetric m = BranchMetric::pauli(c, SymbolLayout::Symplectic);
    EXPECT_EQ(m.cost(0b11), c[3]);
    EXPECT_EQ(m.cost(0b0110), c[1] + c[2]);
    BranchMetric q = BranchMetric::pauli(c, SymbolLayout::Gf4Conj);
    // Label w2 is the conjugate of w, i.e. Pauli X.
    EXPECT_EQ(q.cost(3), c[1]);
    EXPECT_EQ(q.cost(1), c[3]);
}

TEST(CosetOracle, Examples) {
    StabilizerSpec s = spec311();
    SyndromeMap map(s, 5);
    EXPECT_EQ(map.error_bits(), 30u);
    EXPECT_EQ(map.syndrome_bits(), 12u);
    auto zero = coset_leader(map, 0, 4);
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->frame, 0u);
    EXPECT_TRUE(zero->unique());
    for (size_t q = 0; q < 15; q++) {
        ErrorFrame e(15);
        e.set(q, PauliOp::X);
        uint64_t syn = map.apply(frame_to_mask(e));
        auto c = coset_leader(map, syn, 3);
        ASSERT_TRUE(c);
        EXPECT_EQ(c->weight, 1u);
        EXPECT_TRUE(c->unique());
        EXPECT_EQ(c->frame, frame_to_mask(e));
    }
}

TEST(CosetOracle, MapMatchesSyndromeOf) {
    StabilizerSpec s = spec311();
    SyndromeMap map(s, 4);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; t++) {
        ErrorFrame e = random_frame(rng, 12);
        std::vector<PauliOp> ps = e.paulis();
        ps.resize(15, PauliOp::I);
        EXPECT_EQ(map.apply(frame_to_mask(e)), syndrome_to_mask(syndrome_of(s, ErrorFrame::from_paulis(ps)), 2));
    }
}

TEST(CosetOracle, TableAgreesWithWeightSearch) {
    StabilizerSpec s = spec311();
    SyndromeMap map(s, 2);
    CosetLeaderTable table(map);
    for (uint64_t syn = 0; syn < table.size(); syn++) {
        auto c = coset_leader(map, syn, 12);
        ASSERT_EQ(c.has_value(), table.reachable(syn));
        if (c) {
            EXPECT_EQ(c->weight, table[syn].weight);
            EXPECT_EQ(c->minimizers, table[syn].minimizers);
        }
    }
}

class DecoderModes : public ::testing::TestWithParam<DecodeField> {};

TEST_P(DecoderModes, ZeroSyndromeGivesIdentity) {
    SyndromeDecoder d(spec311(), {.field = GetParam()});
    DecodeOutcome r = d.decode(Stream(6, 0), 5);
    ASSERT_TRUE(r.feasible);
    EXPECT_EQ(r.error, ErrorFrame(15));
    EXPECT_EQ(r.path_metric, 0u);
}

TEST_P(DecoderModes, SinglePauliErrorsAreCorrected) {
    SyndromeDecoder d(spec311(), {.field = GetParam()});
    for (size_t q = 0; q < 24; q++) {
        for (PauliOp p : {PauliOp::X, PauliOp::Z, PauliOp::Y}) {
            ErrorFrame e(24);
            e.set(q, p);
            DecodeOutcome r = d.decode(d.measure(e), 8);
            ASSERT_TRUE(r.feasible);
            if (p == PauliOp::Y) {
                // Bit weight 2 is half the minimum distance, so ties are allowed.
                EXPECT_EQ(r.error.bit_weight(), 2u);
                EXPECT_EQ(d.measure(r.error), d.measure(e));
            } else {
                EXPECT_EQ(r.error, e) << q;
            }
        }
    }
}

TEST_P(DecoderModes, MatchesCosetLeaderOnRandomSyndromes) {
    StabilizerSpec s = spec311();
    const size_t blocks = 4;
    SyndromeMap map(s, blocks);
    SyndromeDecoder d(s, {.field = GetParam()});
    std::mt19937_64 rng(17);
    for (int t = 0; t < 150; t++) {
        uint64_t syn = rng() & ((uint64_t{1} << map.syndrome_bits()) - 1);
        auto leader = coset_leader(map, syn, 10);
        ASSERT_TRUE(leader);
        DecodeOutcome r = d.decode(mask_to_syndrome(syn, 2, blocks + 1), blocks);
        ASSERT_TRUE(r.feasible);
        uint64_t em = frame_to_mask(r.error);
        EXPECT_EQ(map.apply(em), syn);
        EXPECT_EQ(static_cast<unsigned>(std::popcount(em)), leader->weight);
        EXPECT_EQ(r.path_metric, leader->weight);
        if (leader->unique()) {
            EXPECT_EQ(em, leader->frame);
        }
    }
}

TEST_P(DecoderModes, SyndromeConsistencyAtHighNoise) {
    SyndromeDecoder d(spec311(), {.field = GetParam()});
    for (uint64_t f = 0; f < 100; f++) {
        Rng rng = frame_rng(99, f);
        ErrorFrame e = sample_error(ChannelParams(0.05), 60, rng);
        DecodeOutcome r = d.decode(d.measure(e), 20);
        ASSERT_TRUE(r.feasible);
        EXPECT_EQ(d.measure(r.error), d.measure(e));
        EXPECT_LE(r.error.bit_weight(), e.bit_weight());
    }
}

TEST_P(DecoderModes, PauliTableRanksLikeHamming) {
    SyndromeDecoder ham(spec311(), {.field = GetParam()});
    SyndromeDecoder ch(spec311(), {.field = GetParam(), .channel_p = 0.05});
    uint64_t q = channel_cost_table(0.05)[1];
    for (uint64_t f = 0; f < 1000; f++) {
        Rng rng = frame_rng(5, f);
        ErrorFrame e = sample_error(ChannelParams(0.05), 30, rng);
        Stream syn = ham.measure(e);
        DecodeOutcome a = ham.decode(syn, 10), b = ch.decode(syn, 10);
        ASSERT_EQ(a.error, b.error);
        EXPECT_EQ(b.path_metric, q * a.path_metric);
    }
}

TEST_P(DecoderModes, IsfChoiceDoesNotChangeMetric) {
    SyndromeDecoder fir(spec311(), {.field = GetParam(), .isf = IsfMethod::Hermite});
    SyndromeDecoder iir(spec311(), {.field = GetParam(), .isf = IsfMethod::Elimination});
    EXPECT_NE(fir.bundle().isf.matrix(), iir.bundle().isf.matrix());
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; t++) {
        Stream syn = random_stream(rng, 9, 2, F2);
        DecodeOutcome a = fir.decode(syn, 8), b = iir.decode(syn, 8);
        ASSERT_TRUE(a.feasible && b.feasible);
        EXPECT_EQ(a.path_metric, b.path_metric);
        EXPECT_EQ(fir.measure(a.error), fir.measure(b.error));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, DecoderModes, ::testing::Values(DecodeField::Binary, DecodeField::GF4));

TEST(Decoder, EndsInZeroStateAndTailMatters) {
    SyndromeDecoder d(spec311(), {.isf = IsfMethod::Hermite});
    SyndromeDecoder loose(spec311(), {.isf = IsfMethod::Hermite, .terminate = false});
    std::mt19937_64 rng(29);
    size_t differs = 0;
    for (int t = 0; t < 200; t++) {
        Stream syn = random_stream(rng, 7, 2, F2);
        DecodeOutcome a = d.decode(syn, 6), b = loose.decode(syn, 6);
        ASSERT_TRUE(a.feasible);
        EXPECT_EQ(a.end_state, 0u);
        EXPECT_LE(b.path_metric, a.path_metric);
        differs += a.error != b.error;
    }
    EXPECT_GT(differs, 0u);
}

TEST(Decoder, RejectsInconsistentSyndrome) {
    SyndromeDecoder d(spec311());
    // A syndrome bit well past the last data block cannot be produced.
    Stream syn(12, 0);
    syn[11] = 1;
    EXPECT_FALSE(d.decode(syn, 3).feasible);
}

}  // namespace
}  // namespace qcc
