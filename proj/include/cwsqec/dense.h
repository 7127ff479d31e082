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

// Dense state-vector oracle.
//
// Everything here is exponential in the qubit count and exists to validate
// the symplectic fast paths. Basis index mu has bit (a - 1) equal to the
// Z-eigenvalue bit of qubit a, so qubit 1 is the least significant bit.

#ifndef CWSQEC_DENSE_H
#define CWSQEC_DENSE_H

#include <cstdint>
#include <vector>

#include "cwsqec/dyadic.h"
#include "cwsqec/graph_state.h"
#include "cwsqec/pauli.h"

namespace cwsqec {

inline constexpr int kMaxDenseQubits = 14;

/// A state whose amplitude at basis index mu is amplitudes[mu] / sqrt(2^n).
struct DenseState {
    int n = 0;
    std::vector<ComplexDyadic> amplitudes;

    bool operator==(const DenseState &other) const = default;
};

/// Amplitudes (-1)^{edges inside mu} / sqrt(2^n). Throws for n > kMaxDenseQubits.
DenseState state_vector(const Graph &g);

/// Same state built as prod_{edges} (1 + Z_a + Z_b - Z_a Z_b) / 2 applied to |+>^n.
DenseState state_vector_by_controlled_phase(const Graph &g);

/// |+>^n.
DenseState plus_state(int n);

DenseState apply_pauli(const DenseState &s, const Pauli &p);

/// <s|t>.
ComplexDyadic inner_product(const DenseState &s, const DenseState &t);

/// <s|s>.
Dyadic norm_squared(const DenseState &s);

/// Amplitude strings such as "+1/√512"; requires every amplitude to be +-1.
std::vector<std::string> sign_strings(const DenseState &s);

/// Small exact Gaussian integer, used for dense Pauli matrices.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    GaussInt operator*(const GaussInt &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt &operator+=(const GaussInt &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool operator==(const GaussInt &other) const = default;
};

/// Row-major 2^n x 2^n matrix.
struct DenseMatrix {
    size_t dim = 0;
    std::vector<GaussInt> entries;

    GaussInt &at(size_t r, size_t c) {
        return entries[r * dim + c];
    }
    const GaussInt &at(size_t r, size_t c) const {
        return entries[r * dim + c];
    }
    static DenseMatrix identity(size_t dim);

    bool operator==(const DenseMatrix &other) const = default;
};

/// The matrix of p in the computational basis, built letter by letter.
DenseMatrix dense_matrix(const Pauli &p);

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);

/// M|s>.
DenseState apply_matrix(const DenseMatrix &m, const DenseState &s);

/// Dimension of the joint +1 eigenspace of all vertex stabilizers, from the
/// exact rank of the stacked matrices G_a - I.
int joint_fixed_space_dimension(const Graph &g);

}  // namespace cwsqec

#endif
