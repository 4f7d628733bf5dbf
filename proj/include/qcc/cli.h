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

#ifndef QCC_CLI_H
#define QCC_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qcc {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

/// Entry point of the qccdec tool. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Hex text, most significant digit first; whitespace and an optional 0x
/// prefix are ignored. Bit j of the number is syndrome bit j.
std::vector<bool> parse_hex_bits(const std::string &text);

}  // namespace qcc

#endif
