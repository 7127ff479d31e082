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

#include "cwsqec/pauli.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace cwsqec {

std::string UnitOrZero::str() const {
    if (!nonzero_) {
        return "0";
    }
    static constexpr const char *names[4] = {"+1", "+i", "-1", "-i"};
    return names[exponent_];
}

namespace {

void check_size(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in 1.." + std::to_string(kMaxQubits) + ", got " +
                                    std::to_string(n));
    }
}

void check_same_size(const Pauli &p, const Pauli &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch: " + std::to_string(p.num_qubits()) + " vs " +
                                    std::to_string(q.num_qubits()));
    }
}

}  // namespace

Pauli Pauli::identity(int n) {
    check_size(n);
    return Pauli(n, 0, 0, 0);
}

Pauli Pauli::from_masks(int n, Mask x, Mask z, int phase) {
    check_size(n);
    if (((x | z) & ~low_bits(n)) != 0) {
        throw std::invalid_argument("mask has bits beyond qubit " + std::to_string(n));
    }
    return Pauli(n, x, z, ((phase % 4) + 4) % 4);
}

Pauli Pauli::x_on(int n, Mask support) {
    return from_masks(n, support, 0);
}

Pauli Pauli::z_on(int n, Mask support) {
    return from_masks(n, 0, support);
}

Pauli Pauli::with_phase(int phase) const {
    return Pauli(n_, x_, z_, ((phase % 4) + 4) % 4);
}

Pauli Pauli::parse(std::string_view label, int n) {
    check_size(n);
    std::vector<std::string_view> tokens;
    size_t k = 0;
    while (k < label.size()) {
        while (k < label.size() && std::isspace(static_cast<unsigned char>(label[k]))) {
            k++;
        }
        size_t start = k;
        while (k < label.size() && !std::isspace(static_cast<unsigned char>(label[k]))) {
            k++;
        }
        if (k > start) {
            tokens.push_back(label.substr(start, k - start));
        }
    }

    auto fail = [&](const std::string &why) -> std::invalid_argument {
        return std::invalid_argument("bad Pauli label '" + std::string(label) + "': " + why);
    };

    int phase = 0;
    size_t first = 0;
    if (!tokens.empty()) {
        const auto &t = tokens[0];
        if (t == "+") {
            first = 1;
        } else if (t == "-") {
            phase = 2;
            first = 1;
        } else if (t == "i") {
            phase = 1;
            first = 1;
        } else if (t == "-i") {
            phase = 3;
            first = 1;
        }
    }
    if (first == tokens.size()) {
        throw fail("no operator tokens");
    }
    if (tokens.size() - first == 1 && tokens[first] == "I") {
        return Pauli(n, 0, 0, phase);
    }

    Mask x = 0;
    Mask z = 0;
    for (size_t t = first; t < tokens.size(); t++) {
        std::string_view tok = tokens[t];
        if (tok.size() < 2 || (tok[0] != 'X' && tok[0] != 'Y' && tok[0] != 'Z')) {
            throw fail("expected [XYZ]<index>, got '" + std::string(tok) + "'");
        }
        int index = 0;
        auto digits = tok.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw fail("bad qubit index in '" + std::string(tok) + "'");
        }
        if (index < 1 || index > n) {
            throw fail("qubit index " + std::to_string(index) + " outside 1.." + std::to_string(n));
        }
        Mask b = bit_of(index);
        if ((x | z) & b) {
            throw fail("qubit " + std::to_string(index) + " appears twice");
        }
        if (tok[0] != 'Z') {
            x |= b;
        }
        if (tok[0] != 'X') {
            z |= b;
        }
    }
    return Pauli(n, x, z, phase);
}

std::string Pauli::str() const {
    static constexpr const char *prefixes[4] = {"", "i ", "- ", "-i "};
    std::string out = prefixes[phase_];
    if ((x_ | z_) == 0) {
        return out + "I";
    }
    bool first = true;
    for (int a : members(x_ | z_)) {
        if (!first) {
            out += ' ';
        }
        first = false;
        Mask b = bit_of(a);
        out += (x_ & b) ? ((z_ & b) ? 'Y' : 'X') : 'Z';
        out += std::to_string(a);
    }
    return out;
}

Pauli operator*(const Pauli &p, const Pauli &q) {
    check_same_size(p, q);
    // Move to the X-then-Z normal form (Y = iXZ), where the product only
    // picks up (-1) for every Z of p that passes an X of q.
    int normal = p.phase() + popcount(p.x_mask() & p.z_mask()) + q.phase() + popcount(q.x_mask() & q.z_mask()) +
                 2 * popcount(p.z_mask() & q.x_mask());
    Mask x = p.x_mask() ^ q.x_mask();
    Mask z = p.z_mask() ^ q.z_mask();
    return Pauli::from_masks(p.num_qubits(), x, z, normal - popcount(x & z));
}

bool commutes(const Pauli &p, const Pauli &q) {
    check_same_size(p, q);
    return !parity((p.x_mask() & q.z_mask()) ^ (q.x_mask() & p.z_mask()));
}

int weight(const Pauli &p) {
    return popcount(p.x_mask() | p.z_mask());
}

bool is_hermitian(const Pauli &p) {
    return (p.phase() & 1) == 0;
}

std::uint64_t error_count(int n, int d) {
    if (d < 0 || d > n) {
        return 0;
    }
    std::uint64_t c = 1;
    for (int k = 0; k < d; k++) {
        c = c * static_cast<std::uint64_t>(n - k) / static_cast<std::uint64_t>(k + 1);
    }
    for (int k = 0; k < d; k++) {
        c *= 3;
    }
    return c;
}

std::vector<Pauli> enumerate_errors(int n, int d) {
    check_size(n);
    if (d < 0 || d > n) {
        throw std::invalid_argument("error weight " + std::to_string(d) + " outside 0.." + std::to_string(n));
    }
    std::vector<Pauli> out;
    out.reserve(error_count(n, d));

    std::vector<int> combo(d);
    for (int k = 0; k < d; k++) {
        combo[k] = k + 1;
    }
    std::vector<int> letters(d);
    while (true) {
        std::fill(letters.begin(), letters.end(), 0);
        while (true) {
            Mask x = 0;
            Mask z = 0;
            for (int k = 0; k < d; k++) {
                Mask b = bit_of(combo[k]);
                // 0 = X, 1 = Y, 2 = Z.
                if (letters[k] != 2) {
                    x |= b;
                }
                if (letters[k] != 0) {
                    z |= b;
                }
            }
            out.push_back(Pauli::from_masks(n, x, z, 0));
            int k = d - 1;
            while (k >= 0 && letters[k] == 2) {
                letters[k] = 0;
                k--;
            }
            if (k < 0) {
                break;
            }
            letters[k]++;
        }

        int k = d - 1;
        while (k >= 0 && combo[k] == n - d + k + 1) {
            k--;
        }
        if (k < 0) {
            break;
        }
        combo[k]++;
        for (int j = k + 1; j < d; j++) {
            combo[j] = combo[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace cwsqec
