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

#ifndef QCC_SIMULATION_H
#define QCC_SIMULATION_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "qcc/syndrome_decoder.h"

namespace qcc {

/// Independent X and Z flips with probability p each.
struct ChannelParams {
    double p = 0;

    explicit ChannelParams(double p);
    /// Indexed by PauliOp: I, X, Z, Y.
    std::array<double, 4> probabilities() const;
};

using Rng = std::mt19937_64;

/// Generator for frame `frame` of a run with seed `seed`; independent of the
/// order in which frames are processed.
Rng frame_rng(uint64_t seed, uint64_t frame);

/// Error on `qubits` data qubits; the padding tail is not part of the frame.
ErrorFrame sample_error(const ChannelParams &params, size_t qubits, Rng &rng);

struct FrameRecord {
    ErrorFrame error;
    Stream syndrome;
    ErrorFrame estimate;
    size_t qubit_errors = 0;
    bool feasible = false;
};

/// Sample, measure, decode and compare one frame of `blocks` data blocks.
FrameRecord run_frame(const SyndromeDecoder &dec, const ChannelParams &params, size_t blocks, Rng &rng);
/// Same pipeline on a given error.
FrameRecord run_frame(const SyndromeDecoder &dec, const ErrorFrame &error);

struct SimConfig {
    size_t frame_qubits = 900;
    size_t frames = 10000;
    std::vector<double> ps;
    uint64_t seed = 1;
    DecodeField field = DecodeField::Binary;
    bool channel_metric = false;  // Pauli cost table instead of Hamming
    size_t threads = 0;           // 0: QCCDEC_THREADS or hardware concurrency
    bool timing = false;          // write wall time into elapsed_ms
};

struct SweepRow {
    double p = 0;
    uint64_t frames = 0;
    uint64_t qubit_errors = 0;
    uint64_t qubits_total = 0;
    double qber = 0;
    uint64_t frame_errors = 0;
    double fer = 0;
    uint64_t seed = 0;
    uint64_t elapsed_ms = 0;
};

struct SweepResult {
    std::string code;  // "[n,k,m]"
    size_t frame_qubits = 0;
    size_t padding_qubits = 0;
    size_t logical_qubits = 0;
    std::vector<SweepRow> rows;

    std::string rate() const;
};

size_t resolve_threads(size_t requested);

SweepResult run_sweep(const StabilizerSpec &spec, const SimConfig &config);

void write_csv(std::ostream &out, const SweepResult &result);
std::string to_csv(const SweepResult &result);

/// Exact binomial one-sided upper confidence bound (Clopper-Pearson).
double binomial_upper_bound(uint64_t successes, uint64_t trials, double confidence);

}  // namespace qcc

#endif
