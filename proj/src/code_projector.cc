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

#include "cwsqec/code_projector.h"

#include <stdexcept>
#include <string>

#include "cwsqec/parallel.h"

namespace cwsqec {

PauliSum loop9_stabilizer(Mask u) {
    static const Graph g = loop_graph(9);
    return PauliSum::term(stabilizer_element(g, u));
}

PauliSum nine_qubit_a_operator() {
    const PauliSum one = PauliSum::identity(9);
    auto G = [](std::initializer_list<int> vs) { return loop9_stabilizer(mask_of(vs)); };

    PauliSum first = one - G({3, 6}) + G({3, 9}) - G({6, 9}) + G({3, 6, 9}).scaled(2) + G({9}).scaled(2);
    PauliSum second = one - G({3, 9}) + G({3, 6}) - G({6, 9}) + G({3, 6, 9}).scaled(2) + G({6}).scaled(2);
    return G({1, 4}) * first + G({1, 7}) * second;
}

PauliSum nine_qubit_projector() {
    const PauliSum one = PauliSum::identity(9);
    PauliSum a = nine_qubit_a_operator();
    PauliSum local = (one + loop9_stabilizer(mask_of({3, 8}))) * (one + loop9_stabilizer(mask_of({6, 2}))) *
                     (one + loop9_stabilizer(mask_of({9, 5})));
    PauliSum p = local * a * (a + one.scaled(8));
    return p.scaled(Dyadic::from_parts(1, 10));
}

PauliSum projector_from_codewords(const CwsCode &code) {
    int n = code.num_qubits();
    if (n > kMaxFastEnumeratorQubits) {
        throw std::invalid_argument("projector expansion supports at most " +
                                    std::to_string(kMaxFastEnumeratorQubits) + " qubits");
    }
    PauliSum out(n);
    for (Mask u = 0; u < (Mask{1} << n); u++) {
        std::int64_t t = 0;
        for (Mask c : code.codewords()) {
            t += parity(u & c) ? -1 : 1;
        }
        if (t != 0) {
            out.add_term(stabilizer_element(code.graph(), u), Dyadic::from_parts(t, n));
        }
    }
    return out;
}

std::vector<bool> stabilizes(const PauliSum &x, const CwsCode &code) {
    if (x.size() != 1) {
        throw std::invalid_argument("expected a single Pauli term, got " + std::to_string(x.size()) + " terms");
    }
    const auto &[key, coeff] = *x.terms().begin();
    int k = -1;
    for (int e = 0; e < 4; e++) {
        if (coeff == ComplexDyadic(1).times_i_pow(e)) {
            k = e;
        }
    }
    if (k < 0) {
        throw std::invalid_argument("coefficient " + coeff.str() + " is not a unit");
    }
    Pauli p = key_pauli(x.num_qubits(), key).with_phase(k);
    std::vector<bool> out;
    for (int i = 1; i <= code.size(); i++) {
        out.push_back(matrix_element(code, i, i, p).is_one());
    }
    return out;
}

EnumeratorMethod parse_enumerator_method(std::string_view name) {
    if (name == "brute") {
        return EnumeratorMethod::brute;
    }
    if (name == "fast") {
        return EnumeratorMethod::fast;
    }
    throw std::invalid_argument("unknown enumerator method '" + std::string(name) + "'");
}

std::int64_t EnumeratorResult::total() const {
    std::int64_t t = 0;
    for (auto v : a) {
        t += v;
    }
    return t;
}

namespace {

EnumeratorResult brute_enumerator(const CwsCode &code, unsigned threads) {
    int n = code.num_qubits();
    if (n > kMaxBruteEnumeratorQubits) {
        throw std::invalid_argument("brute enumerator supports at most " + std::to_string(kMaxBruteEnumeratorQubits) +
                                    " qubits");
    }
    PauliSum p = projector_from_codewords(code);
    EnumeratorResult out{std::vector<std::int64_t>(n + 1)};
    for (int d = 0; d <= n; d++) {
        std::vector<Pauli> errors = enumerate_errors(n, d);
        auto partial = parallel_chunks(errors.size(), threads, [&](size_t begin, size_t end) {
            Dyadic acc;
            for (size_t t = begin; t < end; t++) {
                ComplexDyadic c = p.coefficient_of(errors[t]);
                // Tr(P E) = 2^n * coefficient of E.
                ComplexDyadic tr{c.re.times_pow2(n), c.im.times_pow2(n)};
                ComplexDyadic sq = tr * tr;
                if (!sq.is_real()) {
                    throw std::logic_error("Tr(P E)^2 is not real for " + errors[t].str());
                }
                acc += sq.re;
            }
            return acc;
        });
        Dyadic total;
        for (const auto &v : partial) {
            total += v;
        }
        if (!total.is_integer()) {
            throw std::logic_error("weight enumerator entry is not an integer");
        }
        out.a[d] = total.numerator();
    }
    return out;
}

EnumeratorResult fast_enumerator(const CwsCode &code, unsigned threads) {
    int n = code.num_qubits();
    if (n > kMaxFastEnumeratorQubits) {
        throw std::invalid_argument("fast enumerator supports at most " + std::to_string(kMaxFastEnumeratorQubits) +
                                    " qubits");
    }
    const Graph &g = code.graph();
    const auto &cw = code.codewords();
    size_t count = size_t{1} << n;
    auto partial = parallel_chunks(count, threads, [&](size_t begin, size_t end) {
        std::vector<std::int64_t> a(n + 1);
        for (size_t k = begin; k < end; k++) {
            Mask u = k;
            std::int64_t t = 0;
            for (Mask c : cw) {
                t += parity(u & c) ? -1 : 1;
            }
            a[popcount(u | g.image(u))] += t * t;
        }
        return a;
    });
    EnumeratorResult out{std::vector<std::int64_t>(n + 1)};
    for (const auto &a : partial) {
        for (int d = 0; d <= n; d++) {
            out.a[d] += a[d];
        }
    }
    return out;
}

}  // namespace

EnumeratorResult weight_enumerator(const CwsCode &code, EnumeratorMethod method, unsigned threads) {
    return method == EnumeratorMethod::brute ? brute_enumerator(code, threads) : fast_enumerator(code, threads);
}

}  // namespace cwsqec
