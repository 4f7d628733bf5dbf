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

#include "qcc/code_bundle.h"

#include <sstream>
#include <tuple>

#include "qcc/errors.h"
#include "qcc/poly_matrix.h"

namespace qcc {

namespace {

void require_full_row_rank(const RatMatrix &hb) {
    if (rank(hb) != hb.rows()) {
        throw RankError("transfer matrix has rank " + std::to_string(rank(hb)) + ", need " +
                        std::to_string(hb.rows()));
    }
}

std::tuple<int, int, int> isf_cost(const RatMatrix &l) {
    int den = 0, num = 0;
    for (size_t r = 0; r < l.rows(); r++) {
        for (size_t c = 0; c < l.cols(); c++) {
            const RationalFn &x = l(r, c);
            if (!x.den().is_monomial()) {
                den += x.den().degree();
            }
            num += std::max(x.num().degree(), 0);
        }
    }
    return {l.is_laurent() ? 0 : 1, den, num};
}

}  // namespace

TransferSystem derive_sf(const RatMatrix &hb) {
    require_full_row_rank(hb);
    return TransferSystem::from_matrix(hb.transpose(), Role::SF);
}

std::string isf_method_name(IsfMethod m) {
    switch (m) {
        case IsfMethod::Auto:
            return "auto";
        case IsfMethod::Hermite:
            return "hermite";
        case IsfMethod::Elimination:
            return "elimination";
        case IsfMethod::MoorePenrose:
            return "moore-penrose";
    }
    return "?";
}

IsfMethod parse_isf_method(const std::string &name) {
    for (IsfMethod m : {IsfMethod::Auto, IsfMethod::Hermite, IsfMethod::Elimination, IsfMethod::MoorePenrose}) {
        if (isf_method_name(m) == name) {
            return m;
        }
    }
    throw ParseError("unknown ISF method '" + name + "'");
}

bool satisfies_kernel(const RatMatrix &g, const RatMatrix &hb) {
    return (g * hb.transpose()).is_zero();
}

bool satisfies_left_inverse(const RatMatrix &l, const RatMatrix &hb) {
    return (l * hb.transpose()).is_identity();
}

RatMatrix derive_isf_matrix(const RatMatrix &hb, IsfMethod method) {
    require_full_row_rank(hb);
    RatMatrix ht = hb.transpose();
    RatMatrix out;
    switch (method) {
        case IsfMethod::Hermite:
            out = echelon_left_inverse(PolyMatrix(ht));
            break;
        case IsfMethod::Elimination:
            out = left_inverse(ht);
            break;
        case IsfMethod::MoorePenrose: {
            auto mp = left_inverse_moore_penrose(ht);
            if (!mp) {
                throw Error("Moore-Penrose ISF unavailable: Gram matrix is singular");
            }
            out = *mp;
            break;
        }
        case IsfMethod::Auto: {
            std::vector<RatMatrix> cands{echelon_left_inverse(PolyMatrix(ht)), left_inverse(ht)};
            if (auto mp = left_inverse_moore_penrose(ht)) {
                cands.push_back(*mp);
            }
            out = cands[0];
            for (const auto &c : cands) {
                if (isf_cost(c) < isf_cost(out)) {
                    out = c;
                }
            }
            break;
        }
    }
    if (!satisfies_left_inverse(out, hb)) {
        throw Error("ISF verification failed (" + isf_method_name(method) + ")");
    }
    return out;
}

TransferSystem derive_isf(const RatMatrix &hb, IsfMethod method) {
    return TransferSystem::from_matrix(derive_isf_matrix(hb, method), Role::ISF);
}

RatMatrix derive_generator_matrix(const RatMatrix &hb) {
    require_full_row_rank(hb);
    size_t k = hb.cols() - hb.rows();
    if (k == 0) {
        return RatMatrix(0, hb.cols(), hb.field());
    }
    PolyMatrix g = minimal_basis(basic_left_kernel(PolyMatrix(hb.transpose())));
    RatMatrix out = g.to_rat();
    if (out.rows() != k || rank(out) != k) {
        throw RankError("generator has rank " + std::to_string(rank(out)) + ", need " + std::to_string(k));
    }
    if (!satisfies_kernel(out, hb)) {
        throw Error("generator verification failed");
    }
    if (!is_non_catastrophic(out)) {
        throw Error("generator is catastrophic: minors gcd " + minors_gcd(out).str());
    }
    return out;
}

TransferSystem derive_generator(const RatMatrix &hb) {
    return TransferSystem::from_matrix(derive_generator_matrix(hb), Role::GEN);
}

CodeBundle derive_bundle_with_isf(const RatMatrix &hb, const RatMatrix &isf) {
    if (!satisfies_left_inverse(isf, hb)) {
        throw Error("supplied ISF is not a left inverse of the syndrome former");
    }
    CodeBundle b;
    b.hb = hb;
    b.field = hb.field();
    b.n = hb.cols();
    b.k = hb.cols() - hb.rows();
    b.sf = derive_sf(hb);
    b.isf = TransferSystem::from_matrix(isf, Role::ISF);
    b.gen = derive_generator(hb);
    return b;
}

CodeBundle derive_bundle(const RatMatrix &hb, IsfMethod method) {
    return derive_bundle_with_isf(hb, derive_isf_matrix(hb, method));
}

std::string CodeBundle::str() const {
    std::ostringstream out;
    out << "field " << field_name(field) << "\n";
    out << "n " << n << " k " << k << "\n";
    out << "H\n" << hb.str();
    for (const TransferSystem *t : {&sf, &isf, &gen}) {
        out << role_name(t->role()) << " advance=" << t->input_advance()
            << " states=" << t->realization().state_dim() << "\n";
        out << t->matrix().str();
    }
    return out.str();
}

}  // namespace qcc
