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

#ifndef CWSQEC_BITS_H
#define CWSQEC_BITS_H

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cwsqec {

/// A subset of qubits (or graph vertices) packed into one machine word.
///
/// Bit `a - 1` is set iff 1-based qubit `a` is in the subset. All external
/// formats use 1-based labels; the bit offset never leaks out of this header.
using Mask = std::uint64_t;

inline constexpr int kMaxQubits = 64;

inline constexpr Mask bit_of(int qubit) {
    return Mask{1} << (qubit - 1);
}

inline constexpr Mask low_bits(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr int popcount(Mask m) {
    return std::popcount(m);
}

inline constexpr bool parity(Mask m) {
    return (std::popcount(m) & 1) != 0;
}

/// Builds a mask from 1-based labels. Labels are not range checked here.
inline constexpr Mask mask_of(std::initializer_list<int> qubits) {
    Mask m = 0;
    for (int q : qubits) {
        m |= bit_of(q);
    }
    return m;
}

/// 1-based labels of the set bits, ascending.
std::vector<int> members(Mask m);

/// Renders `{2,6,7}`; the empty set renders as `{}`.
std::string set_str(Mask m);

/// Renders the compact code-file form `2,6,7`; the empty set renders as `-`.
std::string codeword_str(Mask m);

}  // namespace cwsqec

#endif
