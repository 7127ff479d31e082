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

#ifndef CWSQEC_PAULI_SUM_H
#define CWSQEC_PAULI_SUM_H

#include <compare>
#include <map>
#include <string>

#include "cwsqec/dense.h"
#include "cwsqec/dyadic.h"
#include "cwsqec/pauli.h"

namespace cwsqec {

/// Hermitian letter product identified by its masks; the map key of PauliSum.
struct PauliKey {
    Mask x = 0;
    Mask z = 0;

    auto operator<=>(const PauliKey &other) const = default;
};

/// A finite exact linear combination of Pauli operators.
///
/// Keys are phase-0 (Hermitian) letter products; a Pauli's phase is folded
/// into its coefficient. Zero coefficients are never stored, so equality is
/// plain map equality.
class PauliSum {
   public:
    explicit PauliSum(int n);

    static PauliSum identity(int n);
    /// coeff * p.
    static PauliSum term(const Pauli &p, ComplexDyadic coeff = 1);

    int num_qubits() const {
        return n_;
    }
    const std::map<PauliKey, ComplexDyadic> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }

    /// Coefficient c such that the sum contains c * p; p's phase is divided out.
    ComplexDyadic coefficient_of(const Pauli &p) const;

    void add_term(const Pauli &p, ComplexDyadic coeff);

    PauliSum operator+(const PauliSum &other) const;
    PauliSum operator-(const PauliSum &other) const;
    PauliSum operator*(const PauliSum &other) const;
    PauliSum scaled(ComplexDyadic factor) const;

    bool operator==(const PauliSum &other) const = default;

   private:
    void check_same(const PauliSum &other) const;
    void accumulate(PauliKey key, ComplexDyadic coeff);

    int n_;
    std::map<PauliKey, ComplexDyadic> terms_;
};

/// Conjugate transpose.
PauliSum adjoint(const PauliSum &x);

/// 2^n times the identity coefficient.
ComplexDyadic trace(const PauliSum &x);

/// x|s>, evaluated term by term on the dense oracle.
DenseState apply(const PauliSum &x, const DenseState &s);

/// The phase-0 Pauli for a key.
Pauli key_pauli(int n, const PauliKey &key);

}  // namespace cwsqec

#endif
