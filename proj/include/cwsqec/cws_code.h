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

#ifndef CWSQEC_CWS_CODE_H
#define CWSQEC_CWS_CODE_H

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cwsqec/graph_state.h"
#include "cwsqec/pauli.h"

namespace cwsqec {

/// A codeword-stabilized code: basis state i is Z_{codewords[i]}|G>.
///
/// Distinct codewords give orthonormal basis states, so distinctness is the
/// only invariant; it is enforced on construction.
class CwsCode {
   public:
    /// Throws std::invalid_argument on duplicate codewords, subsets beyond the
    /// graph, or an empty codeword list.
    CwsCode(Graph graph, std::vector<Mask> codewords);

    const Graph &graph() const {
        return graph_;
    }
    const std::vector<Mask> &codewords() const {
        return codewords_;
    }
    int num_qubits() const {
        return graph_.num_vertices();
    }
    /// K, the code dimension.
    int size() const {
        return static_cast<int>(codewords_.size());
    }
    /// 1-based accessor.
    Mask codeword(int i) const;

    bool operator==(const CwsCode &other) const = default;

   private:
    Graph graph_;
    std::vector<Mask> codewords_;
};

/// The 12-dimensional distance-3 code on the 9-cycle, codewords in reference order.
CwsCode code_9_12_3();

/// <G| Z_{c_i} e Z_{c_j} |G> for 1-based i, j.
UnitOrZero matrix_element(const CwsCode &code, int i, int j, const Pauli &e);

struct KLViolation {
    Pauli error;
    int i = 0;  // 1-based
    int j = 0;
    UnitOrZero value;
};

struct KLReport {
    int checked_weight = 0;
    bool passed = true;
    /// Every diagonal element of every scanned error vanished.
    bool pure = true;
    /// Canonical order: error enumeration order, then (i, j) row-major.
    std::vector<KLViolation> violations;
    /// Set when more violations existed than were kept.
    bool truncated = false;
    std::uint64_t violation_count = 0;
    std::uint64_t errors_checked = 0;
    std::uint64_t elements_checked = 0;
};

struct KLOptions {
    size_t max_violations = 1000;
    unsigned threads = 1;
    /// Scan only weight == max_weight instead of 1..max_weight.
    bool single_weight = false;
};

/// Checks that every Hermitian error of weight 1..max_weight has a K x K
/// matrix of elements equal to a scalar times the identity.
///
/// Off-diagonal nonzeros are violations; when the diagonal is not constant,
/// every diagonal entry differing from the (1,1) entry is a violation.
/// Throws std::invalid_argument unless 0 <= max_weight <= n.
KLReport kl_verify(const CwsCode &code, int max_weight, const KLOptions &options = {});

/// Smallest weight d <= max_d at which the scalar condition fails, or
/// nullopt when the code passes through max_d (distance >= max_d + 1).
std::optional<int> distance(const CwsCode &code, int max_d, unsigned threads = 1);

/// Phase flip patterns reachable by errors of weight 1..2, grouped by size.
struct ErrorPatterns {
    std::set<Mask> all;
    /// by_class[k - 1] holds the patterns of size k for k = 1..6; filled only
    /// for loop graphs.
    std::array<std::set<Mask>, 6> by_class;
    bool tagged = false;
    /// Some weight-<=2 error reduces to the empty pattern.
    bool contains_empty = false;
};

/// Patterns of every Hermitian error of weight 1..2. On loop graphs the
/// patterns are tagged by size and each class is checked against its closed
/// form (throws std::logic_error if one escapes it).
ErrorPatterns error_patterns(const Graph &g);

/// The closed-form shapes of each size class on the n-cycle (all positions).
std::array<std::set<Mask>, 6> loop_pattern_shapes(int n);

/// { c_i xor c_j : i < j }.
std::set<Mask> transition_set(const CwsCode &code);

struct ReducedTransitions {
    std::set<Mask> transitions;
    /// False when the code lacks the coset structure c_k xor c_7 = c_{k+6}
    /// and `transitions` is the full transition set instead.
    bool reduced = false;
};

/// For a 12-codeword code whose second half is the first half shifted by c_7:
/// {c_7} together with c_i xor c_j and c_7 xor c_i xor c_j for i < j <= 6.
ReducedTransitions reduced_transitions(const CwsCode &code);

/// Combinatorial distance-3 certificate: no transition equals a weight-<=2
/// pattern and the empty pattern is unreachable. Equivalent to
/// kl_verify(code, 2) passing with purity.
bool pattern_proof_check(const CwsCode &code);

}  // namespace cwsqec

#endif
