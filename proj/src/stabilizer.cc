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

#include "qcc/stabilizer.h"

#include <fstream>
#include <sstream>

namespace qcc {

namespace {

/// Rank over GF(2) of rows given as byte vectors.
size_t binary_rank(std::vector<std::vector<uint8_t>> rows) {
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < rows.size(); c++) {
        size_t p = rank;
        while (p < rows.size() && !rows[p][c]) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][c]) {
                for (size_t j = c; j < cols; j++) {
                    rows[r][j] ^= rows[rank][j];
                }
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

StabilizerSpec::StabilizerSpec(size_t n, size_t k, size_t m, std::vector<std::vector<PauliOp>> generators)
    : n_(n), k_(k), m_(m), generators_(std::move(generators)) {
    if (n_ == 0 || k_ >= n_) {
        throw ParseError("need 0 <= k < n, got n=" + std::to_string(n_) + " k=" + std::to_string(k_));
    }
    if (generators_.size() != n_ - k_) {
        throw ParseError("expected n-k=" + std::to_string(n_ - k_) + " generators, got " +
                         std::to_string(generators_.size()));
    }
    size_t len = n_ * (m_ + 1);
    std::vector<std::vector<uint8_t>> rows;
    for (size_t i = 0; i < generators_.size(); i++) {
        if (generators_[i].size() != len) {
            throw ParseError("generator " + std::to_string(i + 1) + " has " + std::to_string(generators_[i].size()) +
                             " symbols, expected n(m+1)=" + std::to_string(len));
        }
        std::vector<uint8_t> row(2 * len);
        for (size_t j = 0; j < len; j++) {
            uint8_t xz = symplectic_bits(generators_[i][j]);
            row[j] = xz & 1;
            row[len + j] = xz >> 1;
        }
        rows.push_back(std::move(row));
    }
    if (binary_rank(rows) < rows.size()) {
        throw ParseError("generators are not independent");
    }
    std::vector<std::vector<Poly>> p(n_ - k_), q(n_ - k_);
    for (size_t i = 0; i < n_ - k_; i++) {
        for (size_t c = 0; c < n_; c++) {
            std::vector<Gf4> pc(m_ + 1), qc(m_ + 1);
            for (size_t b = 0; b <= m_; b++) {
                uint8_t xz = symplectic_bits(symbol(i, b, c));
                pc[b] = Gf4(xz & 1);
                qc[b] = Gf4(xz >> 1);
            }
            p[i].emplace_back(Field::GF2, std::move(pc));
            q[i].emplace_back(Field::GF2, std::move(qc));
        }
    }
    p_ = RatMatrix::from_polys(p);
    q_ = RatMatrix::from_polys(q);
}

StabilizerSpec StabilizerSpec::from_strings(size_t n, size_t k, size_t m, const std::vector<std::string> &generators) {
    std::vector<std::vector<PauliOp>> gens;
    for (const auto &s : generators) {
        std::vector<PauliOp> g;
        for (char ch : s) {
            g.push_back(pauli_from_char(ch));
        }
        gens.push_back(std::move(g));
    }
    return StabilizerSpec(n, k, m, std::move(gens));
}

std::string StabilizerSpec::str() const {
    std::ostringstream out;
    out << "qcc n=" << n_ << " k=" << k_ << " m=" << m_ << "\n";
    for (const auto &g : generators_) {
        for (PauliOp p : g) {
            out << pauli_char(p);
        }
        out << "\n";
    }
    return out.str();
}

StabilizerSpec parse_stabilizer(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    long n = -1, k = -1, m = -1;
    std::vector<std::string> gens;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') {
            continue;
        }
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!have_header) {
            std::istringstream h(line);
            std::string tag;
            h >> tag;
            if (tag != "qcc") {
                throw ParseError("expected header 'qcc n=<int> k=<int> m=<int>', got '" + line + "'");
            }
            std::string kv;
            while (h >> kv) {
                size_t eq = kv.find('=');
                if (eq == std::string::npos) {
                    throw ParseError("bad header field '" + kv + "'");
                }
                std::string key = kv.substr(0, eq);
                long value;
                try {
                    size_t used = 0;
                    value = std::stol(kv.substr(eq + 1), &used);
                    if (used != kv.size() - eq - 1 || value < 0) {
                        throw ParseError("");
                    }
                } catch (const std::exception &) {
                    throw ParseError("bad header value '" + kv + "'");
                }
                if (key == "n") {
                    n = value;
                } else if (key == "k") {
                    k = value;
                } else if (key == "m") {
                    m = value;
                } else {
                    throw ParseError("unknown header field '" + key + "'");
                }
            }
            if (n < 0 || k < 0 || m < 0) {
                throw ParseError("header must set n, k and m");
            }
            have_header = true;
            continue;
        }
        gens.push_back(line);
    }
    if (!have_header) {
        throw ParseError("missing 'qcc' header");
    }
    return StabilizerSpec::from_strings(n, k, m, gens);
}

StabilizerSpec load_stabilizer(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open stabilizer file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_stabilizer(buf.str());
}

SymplecticReport check_symplectic(const StabilizerSpec &spec) {
    size_t r = spec.checks();
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) {
            LaurentPoly acc;
            for (size_t c = 0; c < spec.n(); c++) {
                LaurentPoly pi(spec.p()(i, c).num()), qi(spec.q()(i, c).num());
                LaurentPoly pj(spec.p()(j, c).num()), qj(spec.q()(j, c).num());
                acc = acc + pi * qj.inverted() + qi * pj.inverted();
            }
            if (!acc.is_zero()) {
                return {false, i, j, acc};
            }
        }
    }
    return {};
}

RatMatrix to_binary_transfer(const StabilizerSpec &spec) {
    RatMatrix d(1, 1, Field::GF2);
    d.set(0, 0, RationalFn(Poly::monomial(Field::GF2, 1)));
    RatMatrix p2 = substitute(spec.p(), Substitution::Square);
    RatMatrix q2 = substitute(spec.q(), Substitution::Square);
    RatMatrix out(spec.checks(), spec.n(), Field::GF2);
    for (size_t i = 0; i < spec.checks(); i++) {
        for (size_t c = 0; c < spec.n(); c++) {
            out.set(i, c, p2(i, c) + q2(i, c) * d(0, 0));
        }
    }
    return out;
}

RatMatrix to_syndrome_transfer(const RatMatrix &hb) {
    if (!hb.is_polynomial()) {
        throw Error("to_syndrome_transfer: H_b must be polynomial");
    }
    RatMatrix out(hb.rows(), 2 * hb.cols(), hb.field());
    for (size_t i = 0; i < hb.rows(); i++) {
        for (size_t c = 0; c < hb.cols(); c++) {
            const Poly &h = hb(i, c).num();
            out.set(i, 2 * c, RationalFn(h.decimated(2, 1)));
            out.set(i, 2 * c + 1, RationalFn(h.decimated(2, 0)));
        }
    }
    return out;
}

RatMatrix to_syndrome_transfer(const StabilizerSpec &spec) {
    return to_syndrome_transfer(to_binary_transfer(spec));
}

std::vector<std::vector<Poly>> quaternary_rows(const StabilizerSpec &spec) {
    std::vector<std::vector<Poly>> rows(spec.checks());
    for (size_t i = 0; i < spec.checks(); i++) {
        for (size_t c = 0; c < spec.n(); c++) {
            std::vector<Gf4> coeffs(spec.m() + 1);
            for (size_t b = 0; b <= spec.m(); b++) {
                coeffs[b] = pauli_to_gf4(spec.symbol(i, b, c));
            }
            rows[i].emplace_back(Field::GF4, std::move(coeffs));
        }
    }
    return rows;
}

namespace {

using GfRow = std::vector<Poly>;

GfRow combine(const std::vector<GfRow> &basis, const std::vector<Gf4> &alpha, size_t n) {
    GfRow out(n, Poly(Field::GF4));
    for (size_t r = 0; r < basis.size(); r++) {
        for (size_t c = 0; c < n; c++) {
            out[c] += basis[r][c].scaled(alpha[r]);
        }
    }
    return out;
}

/// Constant GF(4) coefficients expressing `target` in `basis`, or empty.
std::vector<Gf4> express(const std::vector<GfRow> &basis, const GfRow &target) {
    size_t count = 1;
    for (size_t i = 0; i < basis.size(); i++) {
        count *= 4;
    }
    std::vector<Gf4> alpha(basis.size());
    for (size_t code = 0; code < count; code++) {
        size_t x = code;
        for (auto &a : alpha) {
            a = Gf4(x & 3);
            x >>= 2;
        }
        if (combine(basis, alpha, target.size()) == target) {
            return alpha;
        }
    }
    return {};
}

GfRow normalized(GfRow row) {
    for (const auto &p : row) {
        if (!p.is_zero()) {
            Gf4 s = p.coeff(p.valuation()).inverse();
            for (auto &q : row) {
                q = q.scaled(s);
            }
            break;
        }
    }
    return row;
}

}  // namespace

QuaternaryTransfer to_quaternary_transfer(const StabilizerSpec &spec) {
    if (spec.checks() % 2) {
        throw NoQuaternaryEquivalentError("n-k is odd; the syndrome cannot be packed into GF(4) symbols");
    }
    auto rows = quaternary_rows(spec);
    std::vector<GfRow> basis;
    for (const auto &g : rows) {
        if (!basis.empty() && !express(basis, g).empty()) {
            continue;
        }
        basis.push_back(normalized(g));
        if (basis.size() > 4) {
            throw NoQuaternaryEquivalentError("too many independent GF(4) rows for the packing table");
        }
    }
    if (2 * basis.size() != spec.checks()) {
        throw NoQuaternaryEquivalentError(
            "generator span is not closed under multiplication by w; use the binary decoder");
    }
    QuaternaryTransfer out;
    out.hq = RatMatrix(basis.size(), spec.n(), Field::GF4);
    for (size_t r = 0; r < basis.size(); r++) {
        for (size_t c = 0; c < spec.n(); c++) {
            out.hq.set(r, c, RationalFn(basis[r][c]));
        }
    }
    for (const auto &g : rows) {
        out.alpha.push_back(express(basis, g));
    }
    return out;
}

Stream syndrome_of(const StabilizerSpec &spec, const ErrorFrame &frame) {
    size_t n = spec.n();
    if (frame.qubits() % n) {
        throw LengthError("frame of " + std::to_string(frame.qubits()) + " qubits is not a whole number of blocks");
    }
    size_t blocks = frame.qubits() / n;
    Stream out(blocks, 0);
    for (size_t u = 0; u < blocks; u++) {
        for (size_t i = 0; i < spec.checks(); i++) {
            uint8_t bit = 0;
            for (size_t b = 0; b <= spec.m() && b <= u; b++) {
                for (size_t c = 0; c < n; c++) {
                    bit ^= anticommute(spec.symbol(i, b, c), frame.pauli((u - b) * n + c));
                }
            }
            out[u] |= static_cast<Word>(bit) << i;
        }
    }
    return out;
}

}  // namespace qcc
