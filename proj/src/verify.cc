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

#include "qcc/verify.h"

#include "qcc/errors.h"
#include "qcc/syndrome_decoder.h"

namespace qcc {

Stream random_stream(Rng &rng, size_t steps, size_t symbols, Field field) {
    size_t bits = symbols * symbol_bits(field);
    Word mask = bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1;
    Stream s(steps);
    for (auto &w : s) {
        w = rng() & mask;
    }
    return s;
}

bool stream_round_trip(const CodeBundle &b, const Stream &s) {
    size_t a = static_cast<size_t>(b.isf.input_advance());
    size_t steps = s.size() + a;
    Stream back = b.sf.run(b.isf.run(s, steps), steps);
    for (size_t t = 0; t < s.size(); t++) {
        if (back[t + a] != s[t]) {
            return false;
        }
    }
    for (size_t t = 0; t < a; t++) {
        if (back[t]) {
            return false;
        }
    }
    return true;
}

bool stream_kernel(const CodeBundle &b, const Stream &u) {
    size_t steps = u.size() + static_cast<size_t>(b.gen.matrix().max_degree() + b.hb.max_degree()) + 1;
    for (Word w : b.sf.run(b.gen.run(u, steps), steps)) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool stream_coset(const CodeBundle &b, const Stream &e) {
    size_t a = static_cast<size_t>(b.isf.input_advance());
    size_t steps = e.size() + a + static_cast<size_t>(b.hb.max_degree()) + 1;
    Stream w = b.isf.run(b.sf.run(e, steps), steps);
    for (size_t t = 0; t < e.size(); t++) {
        w[t + a] ^= e[t];
    }
    for (Word x : b.sf.run(w, steps)) {
        if (x) {
            return false;
        }
    }
    return true;
}

namespace {

CheckResult run_check(const std::string &name, auto &&body) {
    CheckResult r{name, false, ""};
    try {
        r.ok = body(r.detail);
    } catch (const std::exception &ex) {
        r.detail = ex.what();
    }
    return r;
}

std::vector<CheckResult> bundle_checks(const std::string &tag, const RatMatrix &h, size_t trials, uint64_t seed) {
    std::vector<CheckResult> out;
    CodeBundle b;
    out.push_back(run_check(tag + " derive", [&](std::string &) {
        b = derive_bundle(h);
        return true;
    }));
    if (!out.back().ok) {
        return out;
    }
    out.push_back(run_check(tag + " kernel G H^T = 0",
                            [&](std::string &) { return satisfies_kernel(b.gen.matrix(), b.hb); }));
    out.push_back(run_check(tag + " left inverse L H^T = I",
                            [&](std::string &) { return satisfies_left_inverse(b.isf.matrix(), b.hb); }));
    out.push_back(run_check(tag + " non-catastrophic G", [&](std::string &d) {
        d = "minors gcd " + minors_gcd(b.gen.matrix()).str();
        return is_non_catastrophic(b.gen.matrix());
    }));
    Rng rng = frame_rng(seed, 0);
    out.push_back(run_check(tag + " stream SF(ISF(s)) = s", [&](std::string &) {
        for (size_t i = 0; i < trials; i++) {
            if (!stream_round_trip(b, random_stream(rng, 1 + rng() % 60, b.n - b.k, b.field))) {
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check(tag + " stream SF(GEN(u)) = 0", [&](std::string &) {
        for (size_t i = 0; i < trials; i++) {
            if (!stream_kernel(b, random_stream(rng, 1 + rng() % 60, b.k, b.field))) {
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check(tag + " stream coset membership", [&](std::string &) {
        for (size_t i = 0; i < trials; i++) {
            if (!stream_coset(b, random_stream(rng, 1 + rng() % 60, b.n, b.field))) {
                return false;
            }
        }
        return true;
    }));
    return out;
}

}  // namespace

std::vector<CheckResult> verify_code(const StabilizerSpec &spec, size_t trials, uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(run_check("commutation", [&](std::string &d) {
        SymplecticReport r = check_symplectic(spec);
        if (!r.ok) {
            d = "entry (" + std::to_string(r.row + 1) + "," + std::to_string(r.col + 1) + ") = " + r.witness.str();
        }
        return r.ok;
    }));
    if (!out.back().ok) {
        return out;
    }
    for (auto &c : bundle_checks("H_b", to_binary_transfer(spec), trials, seed)) {
        out.push_back(std::move(c));
    }
    for (auto &c : bundle_checks("block", to_syndrome_transfer(spec), trials, seed + 1)) {
        out.push_back(std::move(c));
    }
    out.push_back(run_check("syndrome circuit matches sliding generators", [&](std::string &) {
        SyndromeDecoder dec(spec);
        Rng rng = frame_rng(seed, 1);
        for (size_t i = 0; i < trials; i++) {
            size_t blocks = 1 + rng() % 20;
            ErrorFrame e = sample_error(ChannelParams(0.2), blocks * spec.n(), rng);
            std::vector<PauliOp> ps = e.paulis();
            ps.resize((blocks + spec.m()) * spec.n(), PauliOp::I);
            if (syndrome_of(spec, ErrorFrame::from_paulis(ps)) != dec.measure(e)) {
                return false;
            }
        }
        return true;
    }));
    try {
        QuaternaryTransfer q = to_quaternary_transfer(spec);
        for (auto &c : bundle_checks("H_q", q.hq, trials, seed + 2)) {
            out.push_back(std::move(c));
        }
    } catch (const NoQuaternaryEquivalentError &) {
    }
    return out;
}

}  // namespace qcc
