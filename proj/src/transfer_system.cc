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

#include "qcc/transfer_system.h"

#include <algorithm>

#include "qcc/errors.h"

namespace qcc {

namespace {

/// Index of the D^l coefficient register of row i (l >= 1).
struct RegIndex {
    std::vector<size_t> offset;
    size_t at(size_t row, size_t l) const {
        return offset[row] + l - 1;
    }
};

}  // namespace

int required_advance(const RatMatrix &m) {
    int a = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            const RationalFn &x = m(r, c);
            if (!x.is_zero()) {
                a = std::max(a, x.den().valuation() - x.num().valuation());
            }
        }
    }
    return a;
}

StateSpace realize(const RatMatrix &m) {
    Field f = m.field();
    unsigned sb = symbol_bits(f);
    StateSpace ss;
    ss.field_ = f;
    ss.inputs_ = m.rows();
    ss.outputs_ = m.cols();

    std::vector<Poly> feedback;
    std::vector<std::vector<Poly>> taps;
    RegIndex idx;
    size_t total = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        Poly d = Poly::one(f);
        for (size_t j = 0; j < m.cols(); j++) {
            if (!m(i, j).is_causal()) {
                throw Error("realize: entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                            m(i, j).str() + " is not causal");
            }
            d = lcm(d, m(i, j).den());
        }
        d = d.scaled(d.coeff(0).inverse());
        size_t len = std::max(d.degree(), 0);
        std::vector<Poly> row;
        for (size_t j = 0; j < m.cols(); j++) {
            Poly n = m(i, j).num() * (d / m(i, j).den());
            len = std::max<size_t>(len, std::max(n.degree(), 0));
            row.push_back(std::move(n));
        }
        idx.offset.push_back(total);
        ss.row_lengths_.push_back(len);
        total += len;
        feedback.push_back(std::move(d));
        taps.push_back(std::move(row));
    }
    ss.state_dim_ = total;
    if (total * sb > 64 || m.cols() * sb > 64 || m.rows() * sb > 64) {
        throw DegreeCapError("realize: state or port width exceeds one 64-bit word");
    }
    ss.state_next_.assign(total * 4, 0);
    ss.state_out_.assign(total * 4, 0);
    ss.input_next_.assign(m.rows() * 4, 0);
    ss.input_out_.assign(m.rows() * 4, 0);

    unsigned q = field_size(f);
    for (unsigned v = 1; v < q; v++) {
        Gf4 x(static_cast<uint8_t>(v));
        for (size_t i = 0; i < m.rows(); i++) {
            size_t len = ss.row_lengths_[i];
            const Poly &d = feedback[i];
            // Input u_i: feeds w_t, which enters register 1 and the l=0 taps.
            Word nx = 0, out = 0;
            if (len > 0) {
                nx = with_symbol(nx, idx.at(i, 1), f, x);
            }
            for (size_t j = 0; j < m.cols(); j++) {
                out = with_symbol(out, j, f, taps[i][j].coeff(0) * x);
            }
            ss.input_next_[i * 4 + v] = nx;
            ss.input_out_[i * 4 + v] = out;
            // Register l holding w_{t-l}.
            for (size_t l = 1; l <= len; l++) {
                Gf4 dl = d.coeff(static_cast<int>(l));
                Word sn = 0, so = 0;
                sn = with_symbol(sn, idx.at(i, 1), f, dl * x);
                if (l < len) {
                    sn ^= with_symbol(0, idx.at(i, l + 1), f, x);
                }
                for (size_t j = 0; j < m.cols(); j++) {
                    Gf4 c = taps[i][j].coeff(static_cast<int>(l)) + taps[i][j].coeff(0) * dl;
                    so = with_symbol(so, j, f, c * x);
                }
                ss.state_next_[idx.at(i, l) * 4 + v] = sn;
                ss.state_out_[idx.at(i, l) * 4 + v] = so;
            }
        }
    }
    return ss;
}

std::pair<Word, Word> StateSpace::step(Word state, Word input) const {
    unsigned sb = symbol_bits(field_);
    Word mask = (Word{1} << sb) - 1;
    Word nx = 0, out = 0;
    for (size_t p = 0; state; p++, state >>= sb) {
        if (Word v = state & mask) {
            nx ^= state_next_[p * 4 + v];
            out ^= state_out_[p * 4 + v];
        }
    }
    for (size_t p = 0; input; p++, input >>= sb) {
        if (Word v = input & mask) {
            nx ^= input_next_[p * 4 + v];
            out ^= input_out_[p * 4 + v];
        }
    }
    return {nx, out};
}

std::string role_name(Role r) {
    switch (r) {
        case Role::SF:
            return "SF";
        case Role::ISF:
            return "ISF";
        case Role::GEN:
            return "GEN";
    }
    return "?";
}

TransferSystem TransferSystem::from_matrix(RatMatrix matrix, Role role) {
    TransferSystem t;
    t.advance_ = required_advance(matrix);
    t.ss_ = realize(matrix.times_power(t.advance_));
    t.matrix_ = std::move(matrix);
    t.role_ = role;
    return t;
}

Stream TransferSystem::run(const Stream &input, size_t steps) const {
    Stream out(steps);
    Word state = 0;
    for (size_t t = 0; t < steps; t++) {
        auto [nx, y] = ss_.step(state, t < input.size() ? input[t] : 0);
        out[t] = y;
        state = nx;
    }
    return out;
}

Stream TransferSystem::run_stream(const Stream &input, size_t flush) const {
    return run(input, input.size() + static_cast<size_t>(advance_) + flush);
}

}  // namespace qcc
