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

#ifndef CWSQEC_CODE_PROJECTOR_H
#define CWSQEC_CODE_PROJECTOR_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "cwsqec/cws_code.h"
#include "cwsqec/pauli_sum.h"

namespace cwsqec {

/// G_U on the 9-cycle as a one-term sum.
PauliSum loop9_stabilizer(Mask u);

/// The operator
///   G_14 (1 - G_36 + G_39 - G_69 + 2 G_369 + 2 G_9)
/// + G_17 (1 - G_39 + G_36 - G_69 + 2 G_369 + 2 G_6)
/// on the 9-cycle, expanded exactly.
PauliSum nine_qubit_a_operator();

/// The projector (1 + G_38)(1 + G_26)(1 + G_59) A (A + 8) / 2^10 onto the
/// 12-dimensional code, expanded exactly.
PauliSum nine_qubit_projector();

/// sum_i |w_i><w_i| in the Pauli basis: G_U gets coefficient
/// sum_i (-1)^{|U & c_i|} / 2^n.
PauliSum projector_from_codewords(const CwsCode &code);

/// For each codeword, whether the one-term operator x has eigenvalue +1 on it.
/// Throws std::invalid_argument unless x is a single Pauli with a unit coefficient.
std::vector<bool> stabilizes(const PauliSum &x, const CwsCode &code);

enum class EnumeratorMethod {
    /// Sum Tr(P E)^2 over every Hermitian Pauli E, one weight at a time.
    brute,
    /// Stream the 2^n subsets U with A_{wt(G_U)} += (sum_i (-1)^{|U & c_i|})^2.
    fast,
};

/// Parses "brute" or "fast"; throws std::invalid_argument otherwise.
EnumeratorMethod parse_enumerator_method(std::string_view name);

struct EnumeratorResult {
    /// A_0 .. A_n.
    std::vector<std::int64_t> a;

    std::int64_t total() const;
    bool operator==(const EnumeratorResult &other) const = default;
};

inline constexpr int kMaxBruteEnumeratorQubits = 12;
inline constexpr int kMaxFastEnumeratorQubits = 26;

/// A_d = sum over Hermitian weight-d Paulis E of Tr(P E)^2 for the code projector P.
EnumeratorResult weight_enumerator(const CwsCode &code, EnumeratorMethod method, unsigned threads = 1);

}  // namespace cwsqec

#endif
