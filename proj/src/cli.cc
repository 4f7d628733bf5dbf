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

#include "qcc/cli.h"

#include <CLI11.hpp>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcc/errors.h"
#include "qcc/simulation.h"
#include "qcc/syndrome_decoder.h"
#include "qcc/verify.h"

namespace qcc {

std::vector<bool> parse_hex_bits(const std::string &text) {
    std::string digits;
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        if (c == '0' && i + 1 < text.size() && (text[i + 1] == 'x' || text[i + 1] == 'X') && digits.empty()) {
            i++;
            continue;
        }
        if (!std::isxdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("invalid hex digit '") + c + "'");
        }
        digits += c;
    }
    std::vector<bool> bits(4 * digits.size());
    for (size_t d = 0; d < digits.size(); d++) {
        int v = std::stoi(std::string(1, digits[digits.size() - 1 - d]), nullptr, 16);
        for (int b = 0; b < 4; b++) {
            bits[4 * d + b] = (v >> b) & 1;
        }
    }
    return bits;
}

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_derive(const StabilizerSpec &spec, const std::string &isf, std::ostream &out) {
    IsfMethod method = parse_isf_method(isf);
    out << "# code [" << spec.n() << "," << spec.k() << "," << spec.m() << "]\n";
    out << "P\n" << spec.p().str() << "Q\n" << spec.q().str();
    SymplecticReport sr = check_symplectic(spec);
    out << "commutation " << (sr.ok ? "ok" : "FAIL (" + std::to_string(sr.row + 1) + "," +
                                                 std::to_string(sr.col + 1) + ") " + sr.witness.str())
        << "\n";
    out << "\n## binary transfer\n" << derive_bundle(to_binary_transfer(spec), method).str();
    out << "\n## block syndrome transfer\n" << derive_bundle(to_syndrome_transfer(spec), method).str();
    try {
        QuaternaryTransfer q = to_quaternary_transfer(spec);
        out << "\n## gf4 transfer\n" << derive_bundle(q.hq, method).str();
    } catch (const NoQuaternaryEquivalentError &ex) {
        out << "\n## gf4 transfer\nunavailable: " << ex.what() << "\n";
    }
    return sr.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_decode(const StabilizerSpec &spec, const std::string &hexfile, size_t blocks, const std::string &field,
               const std::string &isf, std::ostream &out, std::ostream &err) {
    std::vector<bool> bits = parse_hex_bits(read_file(hexfile));
    size_t r = spec.checks();
    size_t positions = bits.size() / r;
    if (blocks == 0) {
        blocks = positions > spec.m() ? positions - spec.m() : 1;
    }
    for (size_t j = positions * r; j < bits.size(); j++) {
        if (bits[j]) {
            throw ParseError("syndrome has a set bit past the last whole position");
        }
    }
    Stream syndrome(positions);
    for (size_t j = 0; j < positions * r; j++) {
        syndrome[j / r] |= static_cast<Word>(bits[j]) << (j % r);
    }
    DecoderOptions opts;
    opts.field = parse_decode_field(field);
    opts.isf = parse_isf_method(isf);
    SyndromeDecoder dec(spec, opts);
    if (positions > blocks + spec.m()) {
        for (size_t u = blocks + spec.m(); u < positions; u++) {
            if (syndrome[u]) {
                err << "error: syndrome is nonzero past block " << blocks + spec.m() << "\n";
                return kExitInputError;
            }
        }
    }
    DecodeOutcome res = dec.decode(syndrome, blocks);
    if (!res.feasible) {
        err << "error: no error pattern on " << blocks << " blocks has this syndrome\n";
        return kExitInputError;
    }
    out << res.error.str() << "\n";
    err << "path_metric " << res.path_metric << " ties " << res.tie_count << "\n";
    return kExitOk;
}

std::vector<double> parse_p_list(const std::vector<std::string> &items) {
    std::vector<double> ps;
    for (const auto &item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) {
                continue;
            }
            size_t used = 0;
            double p;
            try {
                p = std::stod(tok, &used);
            } catch (const std::exception &) {
                throw ParseError("bad probability '" + tok + "'");
            }
            if (used != tok.size() || !(p >= 0 && p < 0.5)) {
                throw ParseError("probability '" + tok + "' must be a number in [0, 0.5)");
            }
            ps.push_back(p);
        }
    }
    if (ps.empty()) {
        throw ParseError("need at least one --p value");
    }
    return ps;
}

int cmd_verify(const StabilizerSpec &spec, size_t trials, uint64_t seed, std::ostream &out) {
    bool ok = true;
    for (const auto &c : verify_code(spec, trials, seed)) {
        out << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            out << ": " << c.detail;
        }
        out << "\n";
        ok &= c.ok;
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Syndrome decoding of quantum convolutional codes", "qccdec"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string isf = "auto";

    auto *derive = app.add_subcommand("derive", "print transfer matrices and derived circuits");
    derive->add_option("spec", spec_path, "stabilizer file")->required();
    derive->add_option("--isf", isf, "auto|hermite|elimination|moore-penrose");

    std::string hexfile, field = "gf2";
    size_t blocks = 0;
    auto *decode = app.add_subcommand("decode", "decode a syndrome to a Pauli error pattern");
    decode->add_option("spec", spec_path, "stabilizer file")->required();
    decode->add_option("--syndrome", hexfile, "hex file, bit u*(n-k)+i is generator i at block u")->required();
    decode->add_option("--blocks", blocks, "data blocks (default: positions - m)");
    decode->add_option("--field", field, "gf2|gf4");
    decode->add_option("--isf", isf, "auto|hermite|elimination|moore-penrose");

    SimConfig cfg;
    std::vector<std::string> p_items;
    std::string out_path, metric = "hamming";
    auto *sim = app.add_subcommand("simulate", "Monte Carlo sweep over the flip probability");
    sim->add_option("spec", spec_path, "stabilizer file")->required();
    sim->add_option("--p", p_items, "flip probabilities, comma separated")->required();
    sim->add_option("--frames", cfg.frames, "frames per probability");
    sim->add_option("--frame-qubits", cfg.frame_qubits, "data qubits per frame");
    sim->add_option("--seed", cfg.seed, "RNG seed");
    sim->add_option("--out", out_path, "CSV path (default stdout)");
    sim->add_option("--threads", cfg.threads, "worker threads (default QCCDEC_THREADS or all cores)");
    sim->add_option("--metric", metric, "hamming|channel");
    sim->add_option("--field", field, "gf2|gf4");
    sim->add_flag("--timing", cfg.timing, "record wall time in elapsed_ms");

    size_t trials = 100;
    uint64_t seed = 1;
    auto *verify = app.add_subcommand("verify", "check commutation, identities and round trips");
    verify->add_option("spec", spec_path, "stabilizer file")->required();
    verify->add_option("--trials", trials, "random frames per streamed check");
    verify->add_option("--seed", seed, "RNG seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << "\n" << app.help();
        return kExitInputError;
    }

    try {
        StabilizerSpec spec = load_stabilizer(spec_path);
        if (*derive) {
            return cmd_derive(spec, isf, out);
        }
        if (*decode) {
            return cmd_decode(spec, hexfile, blocks, field, isf, out, err);
        }
        if (*verify) {
            return cmd_verify(spec, trials, seed, out);
        }
        if (metric != "hamming" && metric != "channel") {
            throw ParseError("unknown metric '" + metric + "'");
        }
        cfg.ps = parse_p_list(p_items);
        cfg.field = parse_decode_field(field);
        cfg.channel_metric = metric == "channel";
        auto t0 = std::chrono::steady_clock::now();
        SweepResult res = run_sweep(spec, cfg);
        if (out_path.empty()) {
            write_csv(out, res);
        } else {
            std::ofstream f(out_path);
            if (!f) {
                throw ParseError("cannot write " + out_path);
            }
            write_csv(f, res);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        err << "simulated " << cfg.ps.size() << " points in " << ms.count() << " ms\n";
        return kExitOk;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace qcc
