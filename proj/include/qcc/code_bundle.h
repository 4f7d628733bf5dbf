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

#ifndef QCC_CODE_BUNDLE_H
#define QCC_CODE_BUNDLE_H

#include <string>

#include "qcc/rat_matrix.h"
#include "qcc/transfer_system.h"

namespace qcc {

/// Syndrome former hb^T. Throws RankError if hb lacks full row rank.
TransferSystem derive_sf(const RatMatrix &hb);

enum class IsfMethod { Auto, Hermite, Elimination, MoorePenrose };
std::string isf_method_name(IsfMethod m);
IsfMethod parse_isf_method(const std::string &name);

/// Left inverse L of hb^T (L hb^T = I). Auto picks the candidate with Laurent
/// polynomial entries if any, then the least total denominator degree, then
/// the least total numerator degree. Throws RankError, or Error when the
/// requested method is unavailable (Moore-Penrose with a singular Gram matrix).
RatMatrix derive_isf_matrix(const RatMatrix &hb, IsfMethod method = IsfMethod::Auto);
TransferSystem derive_isf(const RatMatrix &hb, IsfMethod method = IsfMethod::Auto);

/// Minimal-basic k x n generator with G hb^T = 0.
RatMatrix derive_generator_matrix(const RatMatrix &hb);
TransferSystem derive_generator(const RatMatrix &hb);

/// Exact checks of the two defining identities.
bool satisfies_kernel(const RatMatrix &g, const RatMatrix &hb);
bool satisfies_left_inverse(const RatMatrix &l, const RatMatrix &hb);

struct CodeBundle {
    RatMatrix hb;
    TransferSystem sf, isf, gen;
    Field field = Field::GF2;
    size_t n = 0, k = 0;

    std::string str() const;
};

CodeBundle derive_bundle(const RatMatrix &hb, IsfMethod method = IsfMethod::Auto);
/// Bundle built around a caller-supplied ISF; verifies L hb^T = I.
CodeBundle derive_bundle_with_isf(const RatMatrix &hb, const RatMatrix &isf);

}  // namespace qcc

#endif
