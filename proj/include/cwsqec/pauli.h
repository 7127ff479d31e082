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

#ifndef CWSQEC_PAULI_H
#define CWSQEC_PAULI_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cwsqec/bits.h"

namespace cwsqec {

/// An exact value from {0, +1, +i, -1, -i}.
///
/// This is the full range of graph-state expectation values of Pauli
/// operators, so verification results never touch floating point.
class UnitOrZero {
   public:
    constexpr UnitOrZero() = default;

    static constexpr UnitOrZero zero() {
        return UnitOrZero();
    }
    /// i^k, for any integer k.
    static constexpr UnitOrZero power_of_i(int k) {
        UnitOrZero u;
        u.nonzero_ = true;
        u.exponent_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
        return u;
    }

    constexpr bool is_zero() const {
        return !nonzero_;
    }
    /// Power of i; only meaningful when nonzero.
    constexpr int exponent() const {
        return exponent_;
    }
    constexpr bool is_one() const {
        return nonzero_ && exponent_ == 0;
    }

    constexpr UnitOrZero operator*(UnitOrZero other) const {
        if (!nonzero_ || !other.nonzero_) {
            return zero();
        }
        return power_of_i(exponent_ + other.exponent_);
    }

    constexpr bool operator==(const UnitOrZero &other) const {
        return nonzero_ == other.nonzero_ && (!nonzero_ || exponent_ == other.exponent_);
    }

    /// One of "0", "+1", "+i", "-1", "-i".
    std::string str() const;

   private:
    bool nonzero_ = false;
    std::uint8_t exponent_ = 0;
};

/// An n-qubit Pauli operator with an exact phase.
///
/// The operator is i^phase times the tensor product of Hermitian letters
/// I, X, Y, Z. Qubit a carries X when only its x bit is set, Z when only its
/// z bit is set and Y when both are set, with Y = iXZ. A phase of 0 therefore
/// always denotes a Hermitian letter product.
class Pauli {
   public:
    Pauli() = default;

    static Pauli identity(int n);
    /// Throws std::invalid_argument if a mask has bits beyond n or n is out of range.
    static Pauli from_masks(int n, Mask x, Mask z, int phase = 0);
    static Pauli x_on(int n, Mask support);
    static Pauli z_on(int n, Mask support);

    /// Parses the label grammar: optional phase token (`+`, `-`, `i`, `-i`)
    /// followed by `[XYZ]<index>` tokens with 1-based indices, or `I`.
    /// Throws std::invalid_argument on malformed labels, indices outside
    /// 1..n, and repeated qubits.
    static Pauli parse(std::string_view label, int n);

    int num_qubits() const {
        return n_;
    }
    Mask x_mask() const {
        return x_;
    }
    Mask z_mask() const {
        return z_;
    }
    /// Power of i in front of the Hermitian letter product, in 0..3.
    int phase() const {
        return phase_;
    }
    bool is_identity_up_to_phase() const {
        return x_ == 0 && z_ == 0;
    }

    /// Same operator with the phase replaced.
    Pauli with_phase(int phase) const;

    /// Canonical label, e.g. "-i Y1", "Z2 Z6 Z7", "I". Parses back to *this.
    std::string str() const;

    bool operator==(const Pauli &other) const = default;
    /// Orders by (n, x, z, phase); used for canonical containers.
    std::strong_ordering operator<=>(const Pauli &other) const = default;

   private:
    Pauli(int n, Mask x, Mask z, int phase) : n_(n), x_(x), z_(z), phase_(static_cast<std::uint8_t>(phase & 3)) {
    }

    int n_ = 0;
    Mask x_ = 0;
    Mask z_ = 0;
    std::uint8_t phase_ = 0;
};

/// Exact operator product p*q. Throws std::invalid_argument on size mismatch.
Pauli operator*(const Pauli &p, const Pauli &q);

/// True iff pq = qp, i.e. the symplectic form x_p.z_q + x_q.z_p vanishes.
bool commutes(const Pauli &p, const Pauli &q);

/// Number of qubits acted on nontrivially.
int weight(const Pauli &p);

bool is_hermitian(const Pauli &p);

/// Every phase-0 Pauli acting nontrivially on exactly d of n qubits.
///
/// Order: qubit subsets in lexicographic order of their sorted 1-based labels,
/// then letters X < Y < Z with the lowest qubit most significant. Yields
/// 3^d * C(n, d) operators. Throws std::invalid_argument unless 0 <= d <= n.
std::vector<Pauli> enumerate_errors(int n, int d);

/// Number of operators enumerate_errors(n, d) yields.
std::uint64_t error_count(int n, int d);

}  // namespace cwsqec

#endif
