// Copyright 2026 The cwsqec Authors
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

#include "cwsqec/dense.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cwsqec {

namespace {

void check_dense_size(int n) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw std::invalid_argument("dense oracle supports 1.." + std::to_string(kMaxDenseQubits) + " qubits, got " +
                                    std::to_string(n));
    }
}

size_t dim_of(int n) {
    return size_t{1} << n;
}

}  // namespace

DenseState plus_state(int n) {
    check_dense_size(n);
    return DenseState{n, std::vector<ComplexDyadic>(dim_of(n), ComplexDyadic(1))};
}

DenseState state_vector(const Graph &g) {
    int n = g.num_vertices();
    check_dense_size(n);
    DenseState s{n, std::vector<ComplexDyadic>(dim_of(n))};
    for (size_t mu = 0; mu < s.amplitudes.size(); mu++) {
        s.amplitudes[mu] = (g.edges_within(static_cast<Mask>(mu)) & 1) ? -1 : 1;
    }
    return s;
}

DenseState state_vector_by_controlled_phase(const Graph &g) {
    int n = g.num_vertices();
    DenseState s = plus_state(n);
    Dyadic half = Dyadic::from_parts(1, 1);
    for (auto [a, b] : g.edges()) {
        DenseState za = apply_pauli(s, Pauli::z_on(n, bit_of(a)));
        DenseState zb = apply_pauli(s, Pauli::z_on(n, bit_of(b)));
        DenseState zab = apply_pauli(s, Pauli::z_on(n, bit_of(a) | bit_of(b)));
        for (size_t mu = 0; mu < s.amplitudes.size(); mu++) {
            ComplexDyadic sum = s.amplitudes[mu] + za.amplitudes[mu] + zb.amplitudes[mu] - zab.amplitudes[mu];
            s.amplitudes[mu] = sum * ComplexDyadic(half);
        }
    }
    return s;
}

DenseState apply_pauli(const DenseState &s, const Pauli &p) {
    if (p.num_qubits() != s.n) {
        throw std::invalid_argument("Pauli size does not match state size");
    }
    // In the X-then-Z normal form, X^x Z^z |mu> = (-1)^{z.mu} |mu ^ x>.
    int normal_phase = p.phase() + popcount(p.x_mask() & p.z_mask());
    DenseState out{s.n, std::vector<ComplexDyadic>(s.amplitudes.size())};
    for (size_t mu = 0; mu < s.amplitudes.size(); mu++) {
        int k = normal_phase + (parity(p.z_mask() & mu) ? 2 : 0);
        out.amplitudes[mu ^ p.x_mask()] = s.amplitudes[mu].times_i_pow(k);
    }
    return out;
}

ComplexDyadic inner_product(const DenseState &s, const DenseState &t) {
    if (s.n != t.n) {
        throw std::invalid_argument("state size mismatch");
    }
    ComplexDyadic acc;
    for (size_t mu = 0; mu < s.amplitudes.size(); mu++) {
        acc += s.amplitudes[mu].conj() * t.amplitudes[mu];
    }
    return {acc.re.times_pow2(-s.n), acc.im.times_pow2(-s.n)};
}

Dyadic norm_squared(const DenseState &s) {
    return inner_product(s, s).re;
}

std::vector<std::string> sign_strings(const DenseState &s) {
    std::string tail = "1/√" + std::to_string(dim_of(s.n));
    std::vector<std::string> out;
    out.reserve(s.amplitudes.size());
    for (const auto &a : s.amplitudes) {
        if (a == ComplexDyadic(1)) {
            out.push_back("+" + tail);
        } else if (a == ComplexDyadic(-1)) {
            out.push_back("-" + tail);
        } else {
            throw std::invalid_argument("amplitude " + a.str() + " is not a +-1 sign");
        }
    }
    return out;
}

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix m{dim, std::vector<GaussInt>(dim * dim)};
    for (size_t k = 0; k < dim; k++) {
        m.at(k, k) = {1, 0};
    }
    return m;
}

DenseMatrix dense_matrix(const Pauli &p) {
    check_dense_size(p.num_qubits());
    static const GaussInt letters[4][2][2] = {
        {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}},    // I
        {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}},    // X
        {{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}},   // Y
        {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}},   // Z
    };
    static const GaussInt phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    DenseMatrix m{1, {phases[p.phase()]}};
    for (int a = 1; a <= p.num_qubits(); a++) {
        Mask b = bit_of(a);
        bool x = p.x_mask() & b;
        bool z = p.z_mask() & b;
        int letter = x ? (z ? 2 : 1) : (z ? 3 : 0);
        DenseMatrix next{m.dim * 2, std::vector<GaussInt>(m.dim * m.dim * 4)};
        for (size_t ra = 0; ra < 2; ra++) {
            for (size_t ca = 0; ca < 2; ca++) {
                GaussInt f = letters[letter][ra][ca];
                if (f == GaussInt{}) {
                    continue;
                }
                for (size_t r = 0; r < m.dim; r++) {
                    for (size_t c = 0; c < m.dim; c++) {
                        next.at(ra * m.dim + r, ca * m.dim + c) = f * m.at(r, c);
                    }
                }
            }
        }
        m = std::move(next);
    }
    return m;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matrix size mismatch");
    }
    DenseMatrix out{a.dim, std::vector<GaussInt>(a.dim * a.dim)};
    for (size_t r = 0; r < a.dim; r++) {
        for (size_t k = 0; k < a.dim; k++) {
            GaussInt f = a.at(r, k);
            if (f == GaussInt{}) {
                continue;
            }
            for (size_t c = 0; c < a.dim; c++) {
                out.at(r, c) += f * b.at(k, c);
            }
        }
    }
    return out;
}

DenseState apply_matrix(const DenseMatrix &m, const DenseState &s) {
    if (m.dim != s.amplitudes.size()) {
        throw std::invalid_argument("matrix size does not match state size");
    }
    DenseState out{s.n, std::vector<ComplexDyadic>(m.dim)};
    for (size_t r = 0; r < m.dim; r++) {
        ComplexDyadic acc;
        for (size_t c = 0; c < m.dim; c++) {
            const GaussInt &e = m.at(r, c);
            if (e == GaussInt{}) {
                continue;
            }
            acc += ComplexDyadic(e.re, e.im) * s.amplitudes[c];
        }
        out.amplitudes[r] = acc;
    }
    return out;
}

int joint_fixed_space_dimension(const Graph &g) {
    int n = g.num_vertices();
    check_dense_size(n);
    size_t dim = dim_of(n);
    // Vertex stabilizers carry no Y factor, so the stacked system is real and
    // elimination runs over the integers.
    std::vector<std::vector<__int128>> rows;
    for (int a = 1; a <= n; a++) {
        DenseMatrix m = dense_matrix(vertex_stabilizer(g, a));
        for (size_t r = 0; r < dim; r++) {
            std::vector<__int128> row(dim);
            for (size_t c = 0; c < dim; c++) {
                const GaussInt &e = m.at(r, c);
                if (e.im != 0) {
                    throw std::logic_error("vertex stabilizer matrix is not real");
                }
                row[c] = e.re - (r == c ? 1 : 0);
            }
            rows.push_back(std::move(row));
        }
    }

    auto gcd128 = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };

    size_t rank = 0;
    for (size_t col = 0; col < dim && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const auto &p = rows[rank];
        for (size_t r = rank + 1; r < rows.size(); r++) {
            if (rows[r][col] == 0) {
                continue;
            }
            __int128 f = rows[r][col];
            __int128 h = p[col];
            __int128 gcd = 0;
            for (size_t c = 0; c < dim; c++) {
                rows[r][c] = rows[r][c] * h - p[c] * f;
                gcd = gcd128(gcd, rows[r][c]);
            }
            if (gcd > 1) {
                for (auto &v : rows[r]) {
                    v /= gcd;
                }
            }
        }
        rank++;
    }
    return static_cast<int>(dim - rank);
}

}  // namespace cwsqec
