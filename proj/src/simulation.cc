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

#include "qcc/simulation.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "qcc/errors.h"

namespace qcc {

ChannelParams::ChannelParams(double p_) : p(p_) {
    if (!(p >= 0 && p < 0.5)) {
        throw Error("channel probability must be in [0, 0.5)");
    }
}

std::array<double, 4> ChannelParams::probabilities() const {
    return {(1 - p) * (1 - p), p - p * p, p - p * p, p * p};
}

Rng frame_rng(uint64_t seed, uint64_t frame) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(frame),
                      static_cast<uint32_t>(frame >> 32)};
    return Rng(seq);
}

ErrorFrame sample_error(const ChannelParams &params, size_t qubits, Rng &rng) {
    // P(draw < threshold) = p with a 64-bit uniform draw.
    uint64_t threshold = static_cast<uint64_t>(std::ldexp(params.p, 64));
    std::vector<uint8_t> bits(2 * qubits);
    for (auto &b : bits) {
        b = rng() < threshold;
    }
    return ErrorFrame::from_bits(std::move(bits));
}

FrameRecord run_frame(const SyndromeDecoder &dec, const ErrorFrame &error) {
    FrameRecord r;
    size_t blocks = error.qubits() / dec.spec().n();
    r.error = error;
    r.syndrome = dec.measure(error);
    DecodeOutcome out = dec.decode(r.syndrome, blocks);
    r.feasible = out.feasible;
    r.estimate = std::move(out.error);
    for (size_t q = 0; q < error.qubits(); q++) {
        r.qubit_errors += r.estimate.pauli(q) != error.pauli(q);
    }
    return r;
}

FrameRecord run_frame(const SyndromeDecoder &dec, const ChannelParams &params, size_t blocks, Rng &rng) {
    return run_frame(dec, sample_error(params, blocks * dec.spec().n(), rng));
}

std::string SweepResult::rate() const {
    return std::to_string(logical_qubits) + "/" + std::to_string(frame_qubits + padding_qubits);
}

size_t resolve_threads(size_t requested) {
    if (requested) {
        return requested;
    }
    if (const char *env = std::getenv("QCCDEC_THREADS")) {
        char *end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const StabilizerSpec &spec, const SimConfig &config) {
    if (config.frame_qubits == 0 || config.frame_qubits % spec.n()) {
        throw Error("frame qubits must be a positive multiple of n=" + std::to_string(spec.n()));
    }
    if (config.frames == 0) {
        throw Error("need at least one frame");
    }
    size_t blocks = config.frame_qubits / spec.n();
    SweepResult res;
    res.code = "[" + std::to_string(spec.n()) + "," + std::to_string(spec.k()) + "," + std::to_string(spec.m()) + "]";
    res.frame_qubits = config.frame_qubits;
    res.padding_qubits = spec.padding_qubits();
    res.logical_qubits = blocks * spec.k();
    size_t threads = std::min(resolve_threads(config.threads), config.frames);

    for (double p : config.ps) {
        ChannelParams params(p);
        DecoderOptions opts;
        opts.field = config.field;
        if (config.channel_metric && p > 0) {
            opts.channel_p = p;
        }
        SyndromeDecoder dec(spec, opts);
        auto t0 = std::chrono::steady_clock::now();
        std::vector<uint32_t> errors(config.frames);
        auto work = [&](size_t first) {
            for (size_t f = first; f < config.frames; f += threads) {
                Rng rng = frame_rng(config.seed, f);
                FrameRecord r = run_frame(dec, params, blocks, rng);
                errors[f] = static_cast<uint32_t>(r.qubit_errors);
            }
        };
        std::vector<std::thread> pool;
        for (size_t t = 1; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        work(0);
        for (auto &th : pool) {
            th.join();
        }
        SweepRow row;
        row.p = p;
        row.frames = config.frames;
        row.seed = config.seed;
        row.qubits_total = config.frames * config.frame_qubits;
        for (uint32_t e : errors) {
            row.qubit_errors += e;
            row.frame_errors += e > 0;
        }
        row.qber = static_cast<double>(row.qubit_errors) / static_cast<double>(row.qubits_total);
        row.fer = static_cast<double>(row.frame_errors) / static_cast<double>(row.frames);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        if (config.timing) {
            row.elapsed_ms = static_cast<uint64_t>(ms.count());
        }
        res.rows.push_back(row);
    }
    return res;
}

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace

void write_csv(std::ostream &out, const SweepResult &r) {
    out << "# qccdec-sweep v1\n";
    out << "# code " << r.code << " frame_qubits=" << r.frame_qubits << " padding_qubits=" << r.padding_qubits
        << " rate=" << r.rate() << "\n";
    out << "p,frames,qubit_errors,qubits_total,qber,frame_errors,fer,seed,elapsed_ms\n";
    for (const auto &row : r.rows) {
        out << fmt(row.p) << "," << row.frames << "," << row.qubit_errors << "," << row.qubits_total << ","
            << fmt(row.qber) << "," << row.frame_errors << "," << fmt(row.fer) << "," << row.seed << ","
            << row.elapsed_ms << "\n";
    }
}

std::string to_csv(const SweepResult &r) {
    std::ostringstream out;
    write_csv(out, r);
    return out.str();
}

namespace {

/// Regularized incomplete beta I_x(a, b) by continued fraction.
double incomplete_beta(double a, double b, double x) {
    if (x <= 0) {
        return 0;
    }
    if (x >= 1) {
        return 1;
    }
    if (x > (a + 1) / (a + b + 2)) {
        return 1 - incomplete_beta(b, a, 1 - x);
    }
    double lbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    double front = std::exp(std::log(x) * a + std::log1p(-x) * b + lbeta) / a;
    // Lentz's method.
    double f = 1, c = 1, d = 0;
    for (int i = 0; i <= 400; i++) {
        int m = i / 2;
        double num;
        if (i == 0) {
            num = 1;
        } else if (i % 2 == 0) {
            num = (m * (b - m) * x) / ((a + 2 * m - 1) * (a + 2 * m));
        } else {
            num = -((a + m) * (a + b + m) * x) / ((a + 2 * m) * (a + 2 * m + 1));
        }
        d = 1 + num * d;
        d = std::abs(d) < 1e-300 ? 1e-300 : d;
        d = 1 / d;
        c = 1 + num / c;
        c = std::abs(c) < 1e-300 ? 1e-300 : c;
        double cd = c * d;
        f *= cd;
        if (std::abs(1 - cd) < 1e-15) {
            break;
        }
    }
    return front * (f - 1);
}

}  // namespace

double binomial_upper_bound(uint64_t k, uint64_t n, double confidence) {
    if (k >= n) {
        return 1;
    }
    // Smallest q with P(X <= k | q) <= 1 - confidence; P(X <= k) = 1 - I_q(k+1, n-k).
    double alpha = 1 - confidence;
    double lo = static_cast<double>(k) / static_cast<double>(n), hi = 1;
    for (int it = 0; it < 200; it++) {
        double mid = (lo + hi) / 2;
        double cdf = 1 - incomplete_beta(static_cast<double>(k) + 1, static_cast<double>(n - k), mid);
        (cdf > alpha ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace qcc
