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

#ifndef QCC_VERIFY_H
#define QCC_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "qcc/code_bundle.h"
#include "qcc/simulation.h"
#include "qcc/stabilizer.h"

namespace qcc {

/// Uniform random stream of `steps` words with `symbols` field symbols each.
Stream random_stream(Rng &rng, size_t steps, size_t symbols, Field field);

/// SF(ISF(s)) == s, allowing for the ISF's input advance.
bool stream_round_trip(const CodeBundle &b, const Stream &s);
/// SF(GEN(u)) == 0.
bool stream_kernel(const CodeBundle &b, const Stream &u);
/// SF(ISF(SF(e)) + e) == 0: the candidate lies in the coset of e.
bool stream_coset(const CodeBundle &b, const Stream &e);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Commutation, the kernel and left-inverse identities for both transfer
/// forms, and streamed round-trip, kernel and syndrome checks on random
/// frames.
std::vector<CheckResult> verify_code(const StabilizerSpec &spec, size_t trials, uint64_t seed);

}  // namespace qcc

#endif
