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

#include "cwsqec/cws_code.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cwsqec/parallel.h"

namespace cwsqec {

CwsCode::CwsCode(Graph graph, std::vector<Mask> codewords) : graph_(std::move(graph)), codewords_(std::move(codewords)) {
    if (codewords_.empty()) {
        throw std::invalid_argument("a code needs at least one codeword");
    }
    std::set<Mask> seen;
    for (size_t i = 0; i < codewords_.size(); i++) {
        Mask c = codewords_[i];
        if (c & ~low_bits(graph_.num_vertices())) {
            throw std::invalid_argument("codeword " + std::to_string(i + 1) + " names a vertex beyond " +
                                        std::to_string(graph_.num_vertices()));
        }
        if (!seen.insert(c).second) {
            throw std::invalid_argument("duplicate codeword " + set_str(c) + " at position " + std::to_string(i + 1));
        }
    }
}

Mask CwsCode::codeword(int i) const {
    if (i < 1 || i > size()) {
        throw std::out_of_range("codeword index " + std::to_string(i) + " outside 1.." + std::to_string(size()));
    }
    return codewords_[i - 1];
}

CwsCode code_9_12_3() {
    return CwsCode(loop_graph(9), {
                                      0,
                                      mask_of({2, 6, 7}),
                                      mask_of({4, 5, 9}),
                                      mask_of({2, 3, 6, 8}),
                                      mask_of({3, 5, 8, 9}),
                                      mask_of({2, 3, 4, 5, 6, 7, 8, 9}),
                                      mask_of({1, 4, 7}),
                                      mask_of({1, 2, 4, 6}),
                                      mask_of({1, 5, 7, 9}),
                                      mask_of({1, 2, 3, 4, 6, 7, 8}),
                                      mask_of({1, 3, 4, 5, 7, 8, 9}),
                                      mask_of({1, 2, 3, 5, 6, 8, 9}),
                                  });
}

UnitOrZero matrix_element(const CwsCode &code, int i, int j, const Pauli &e) {
    if (e.num_qubits() != code.num_qubits()) {
        throw std::invalid_argument("error size does not match code size");
    }
    int n = code.num_qubits();
    Pauli op = Pauli::z_on(n, code.codeword(i)) * e * Pauli::z_on(n, code.codeword(j));
    return overlap(code.graph(), op);
}

namespace {

struct ScanChunk {
    std::vector<KLViolation> violations;
    std::uint64_t violation_count = 0;
    std::uint64_t elements = 0;
    bool pure = true;
};

ScanChunk scan_errors(const CwsCode &code, const std::vector<Pauli> &errors, size_t begin, size_t end,
                      size_t keep) {
    ScanChunk out;
    int n = code.num_qubits();
    int k = code.size();
    std::vector<Pauli> flips;
    flips.reserve(k);
    for (Mask c : code.codewords()) {
        flips.push_back(Pauli::z_on(n, c));
    }
    std::vector<UnitOrZero> m(static_cast<size_t>(k) * k);
    auto record = [&](const Pauli &e, int i, int j, UnitOrZero v) {
        out.violation_count++;
        if (out.violations.size() < keep) {
            out.violations.push_back({e, i + 1, j + 1, v});
        }
    };
    for (size_t t = begin; t < end; t++) {
        const Pauli &e = errors[t];
        for (int i = 0; i < k; i++) {
            Pauli left = flips[i] * e;
            for (int j = 0; j < k; j++) {
                m[i * k + j] = overlap(code.graph(), left * flips[j]);
            }
        }
        out.elements += m.size();
        UnitOrZero diag = m[0];
        bool constant_diag = true;
        for (int i = 0; i < k; i++) {
            if (!m[i * k + i].is_zero()) {
                out.pure = false;
            }
            if (!(m[i * k + i] == diag)) {
                constant_diag = false;
            }
        }
        for (int i = 0; i < k; i++) {
            for (int j = 0; j < k; j++) {
                UnitOrZero v = m[i * k + j];
                if (i != j ? !v.is_zero() : (!constant_diag && !(v == diag))) {
                    record(e, i, j, v);
                }
            }
        }
    }
    return out;
}

}  // namespace

KLReport kl_verify(const CwsCode &code, int max_weight, const KLOptions &options) {
    int n = code.num_qubits();
    if (max_weight < 0 || max_weight > n) {
        throw std::invalid_argument("weight " + std::to_string(max_weight) + " outside 0.." + std::to_string(n));
    }
    std::vector<Pauli> errors;
    for (int d = options.single_weight ? max_weight : 1; d <= max_weight; d++) {
        if (d == 0) {
            continue;
        }
        auto batch = enumerate_errors(n, d);
        errors.insert(errors.end(), batch.begin(), batch.end());
    }

    auto chunks = parallel_chunks(errors.size(), options.threads, [&](size_t begin, size_t end) {
        return scan_errors(code, errors, begin, end, options.max_violations);
    });

    KLReport report;
    report.checked_weight = max_weight;
    report.errors_checked = errors.size();
    for (auto &c : chunks) {
        report.elements_checked += c.elements;
        report.violation_count += c.violation_count;
        report.pure = report.pure && c.pure;
        for (auto &v : c.violations) {
            if (report.violations.size() < options.max_violations) {
                report.violations.push_back(std::move(v));
            }
        }
    }
    report.passed = report.violation_count == 0;
    report.truncated = report.violations.size() < report.violation_count;
    return report;
}

std::optional<int> distance(const CwsCode &code, int max_d, unsigned threads) {
    if (max_d < 0 || max_d > code.num_qubits()) {
        throw std::invalid_argument("max distance " + std::to_string(max_d) + " outside 0.." +
                                    std::to_string(code.num_qubits()));
    }
    KLOptions options;
    options.max_violations = 1;
    options.threads = threads;
    options.single_weight = true;
    for (int d = 1; d <= max_d; d++) {
        if (!kl_verify(code, d, options).passed) {
            return d;
        }
    }
    return std::nullopt;
}

std::array<std::set<Mask>, 6> loop_pattern_shapes(int n) {
    if (n < 3) {
        throw std::invalid_argument("loop graph needs at least 3 vertices");
    }
    auto v = [n](int a) { return bit_of(((a - 1) % n + n) % n + 1); };
    std::array<std::set<Mask>, 6> shapes;
    for (int a = 1; a <= n; a++) {
        for (int b = 1; b <= n; b++) {
            std::vector<std::pair<int, Mask>> cands = {
                {1, v(a)},
                {2, v(a) | v(b)},
                {3, v(a - 1) | v(b) | v(a + 1)},
                {4, v(a - 1) | v(a + 1) | v(b - 1) | v(b + 1)},
                {4, v(a - 1) | v(a) | v(a + 1) | v(b)},
                {4, v(a - 1) | v(a - 2) | v(a + 1) | v(a + 2)},
                {5, v(a - 1) | v(a) | v(a + 1) | v(b - 1) | v(b + 1)},
                {6, v(a - 1) | v(a) | v(a + 1) | v(b - 1) | v(b) | v(b + 1)},
            };
            for (int s1 : {-1, 1}) {
                for (int s3 : {-1, 1}) {
                    cands.emplace_back(3, v(a + s1) | v(a) | v(a + 3 * s3));
                }
            }
            // A shape only counts at its nominal size; degenerate choices of
            // (a, b) collapse into other classes.
            for (auto [size, m] : cands) {
                if (popcount(m) == size) {
                    shapes[size - 1].insert(m);
                }
            }
        }
    }
    return shapes;
}

ErrorPatterns error_patterns(const Graph &g) {
    ErrorPatterns out;
    int n = g.num_vertices();
    for (int d = 1; d <= std::min(2, n); d++) {
        for (const Pauli &e : enumerate_errors(n, d)) {
            Mask s = reduce_error(g, e).pattern;
            if (s == 0) {
                out.contains_empty = true;
            } else {
                out.all.insert(s);
            }
        }
    }
    if (!is_loop_graph(g)) {
        return out;
    }
    auto shapes = loop_pattern_shapes(n);
    for (Mask s : out.all) {
        int size = popcount(s);
        if (size > 6 || !shapes[size - 1].contains(s)) {
            throw std::logic_error("pattern " + set_str(s) + " escapes the closed-form class shapes");
        }
        out.by_class[size - 1].insert(s);
    }
    out.tagged = true;
    return out;
}

std::set<Mask> transition_set(const CwsCode &code) {
    std::set<Mask> out;
    const auto &c = code.codewords();
    for (size_t i = 0; i < c.size(); i++) {
        for (size_t j = i + 1; j < c.size(); j++) {
            out.insert(c[i] ^ c[j]);
        }
    }
    return out;
}

ReducedTransitions reduced_transitions(const CwsCode &code) {
    const auto &c = code.codewords();
    bool coset = c.size() == 12;
    for (size_t k = 0; coset && k < 6; k++) {
        coset = (c[k] ^ c[6]) == c[k + 6];
    }
    if (!coset) {
        return {transition_set(code), false};
    }
    ReducedTransitions out;
    out.reduced = true;
    out.transitions.insert(c[6]);
    for (size_t i = 0; i < 6; i++) {
        for (size_t j = i + 1; j < 6; j++) {
            out.transitions.insert(c[i] ^ c[j]);
            out.transitions.insert(c[6] ^ c[i] ^ c[j]);
        }
    }
    return out;
}

bool pattern_proof_check(const CwsCode &code) {
    ErrorPatterns patterns = error_patterns(code.graph());
    if (patterns.contains_empty) {
        return false;
    }
    for (Mask t : transition_set(code)) {
        if (patterns.all.contains(t)) {
            return false;
        }
    }
    return true;
}

}  // namespace cwsqec
