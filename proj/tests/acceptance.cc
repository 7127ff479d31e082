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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cwsqec/code_projector.h"
#include "cwsqec/cws_code.h"
#include "cwsqec/search.h"
#include "test_util.h"

using namespace cwsqec;
using namespace cwsqec::oracle;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

/// `limit_ms` <= 0 means no runtime limit.
void criterion(int id, const char *name, double limit_ms, const std::function<Outcome()> &fn) {
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    bool in_time = limit_ms <= 0 || ms < limit_ms;
    bool ok = o.ok && in_time;
    failures += ok ? 0 : 1;
    std::string limit = limit_ms > 0 ? ", limit " + std::to_string(static_cast<long>(limit_ms)) + " ms" : "";
    std::printf("%s [%d] %s: %s (%.1f ms%s)%s\n", ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), ms,
                limit.c_str(), in_time ? "" : " over time limit");
    std::fflush(stdout);
}

Mask digits(const char *s) {
    Mask m = 0;
    for (; *s; s++) {
        m |= bit_of(*s - '0');
    }
    return m;
}

// Transition operators listed with the code.
const char *const kTransitionTable[] = {
    "147",     "126",      "1246",     "2368",    "12569",   "1234678", "12345689", "159",
    "1348",    "2569",     "23678",    "1235689", "12356789", "267",    "1378",     "3589",
    "34589",   "1245679",  "23456789", "348",     "1579",    "123468",  "1345789",  "378",
    "2467",    "135789",   "2345689",  "459",     "4579",    "245679",  "2356789",
};

/// Compares matrix_element with dense inner products on every error of weight <= 2.
bool dense_scan_agrees(const CwsCode &code, std::uint64_t &elements) {
    std::vector<Pauli> errors = errors_up_to(code.num_qubits(), 2);
    errors.insert(errors.begin(), Pauli::identity(code.num_qubits()));
    std::vector<UnitOrZero> dense = dense_matrix_elements(code, errors);
    size_t k = 0;
    for (const Pauli &e : errors) {
        for (int i = 1; i <= code.size(); i++) {
            for (int j = 1; j <= code.size(); j++) {
                if (matrix_element(code, i, j, e) != dense[k++]) {
                    return false;
                }
                elements++;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    const CwsCode code = code_9_12_3();

    criterion(1, "KL verification through weight 2", 1000, [&] {
        KLReport r = kl_verify(code, 2);
        bool counts = r.errors_checked == 27 + 324 && r.elements_checked == 12u * 12u * 351u;
        return Outcome{r.passed && r.pure && counts && r.violation_count == 0,
                       std::to_string(r.elements_checked) + " elements, " + std::to_string(r.violation_count) +
                           " nonzero, pure=" + (r.pure ? "yes" : "no")};
    });

    criterion(2, "distance is exactly 3", 2000, [&] {
        std::optional<int> d = distance(code, 4);
        KLOptions o;
        o.single_weight = true;
        o.max_violations = 1;
        KLReport w3 = kl_verify(code, 3, o);
        bool ok = d == 3 && kl_verify(code, 2).passed && !w3.passed && w3.errors_checked == 2268 &&
                  error_count(9, 3) == 2268;
        return Outcome{ok, "distance=" + (d ? std::to_string(*d) : std::string("none")) + ", " +
                               std::to_string(w3.violation_count) + " violations among " +
                               std::to_string(w3.errors_checked) + " weight-3 errors"};
    });

    criterion(3, "pattern proof path", 1000, [&] {
        ErrorPatterns p = error_patterns(code.graph());
        std::set<Mask> t = transition_set(code);
        bool disjoint = true;
        for (Mask m : t) {
            disjoint = disjoint && !p.all.contains(m);
        }
        std::set<Mask> table;
        for (const char *s : kTransitionTable) {
            table.insert(digits(s));
        }
        ReducedTransitions r = reduced_transitions(code);
        KLReport kl = kl_verify(code, 2);
        bool proof = pattern_proof_check(code);
        bool ok = disjoint && r.reduced && r.transitions.size() == 31 && r.transitions == table &&
                  proof == (kl.passed && kl.pure) && proof;
        return Outcome{ok, std::to_string(p.all.size()) + " patterns, " + std::to_string(t.size()) +
                               " transitions, " + std::to_string(r.transitions.size()) + " reduced, proof=" +
                               (proof ? "yes" : "no")};
    });

    criterion(4, "code projector", 5000, [&] {
        PauliSum p = nine_qubit_projector();
        bool idempotent = (p * p - p).is_zero();
        bool self_adjoint = adjoint(p) == p;
        bool trace12 = trace(p) == ComplexDyadic(12);
        bool equal = p == projector_from_codewords(code);
        DenseState g = state_vector(code.graph());
        bool fixes = true;
        for (Mask w : code.codewords()) {
            DenseState s = apply_pauli(g, Pauli::z_on(9, w));
            fixes = fixes && apply(p, s) == s;
        }
        return Outcome{idempotent && self_adjoint && trace12 && equal && fixes,
                       std::to_string(p.size()) + " terms, idempotent, self-adjoint, trace 12, fixes 12 codewords"};
    });

    // 2^9 * 12 * {3/128, 1/64, 1/4, 1/2, 27/128} at d = {0, 4, 6, 7, 8}.
    std::vector<std::int64_t> reference(10, 0);
    {
        Dyadic scale(512 * 12);
        const std::pair<int, Dyadic> coeffs[] = {{0, Dyadic::from_parts(3, 7)},
                                                 {4, Dyadic::from_parts(1, 6)},
                                                 {6, Dyadic::from_parts(1, 2)},
                                                 {7, Dyadic::from_parts(1, 1)},
                                                 {8, Dyadic::from_parts(27, 7)}};
        for (const auto &[d, c] : coeffs) {
            reference[d] = (scale * c).numerator();
        }
    }
    auto vec_str = [](const std::vector<std::int64_t> &a) {
        std::string s;
        for (auto x : a) {
            s += (s.empty() ? "" : " ") + std::to_string(x);
        }
        return s;
    };
    criterion(5, "weight enumerator (fast method)", 1000, [&] {
        EnumeratorResult r = weight_enumerator(code, EnumeratorMethod::fast);
        return Outcome{r.a == reference && r.total() == 6144, vec_str(r.a) + ", sum " + std::to_string(r.total())};
    });
    criterion(5, "weight enumerator (brute method)", 30000, [&] {
        EnumeratorResult r = weight_enumerator(code, EnumeratorMethod::brute);
        return Outcome{r.a == reference && r.total() == 6144, vec_str(r.a) + ", sum " + std::to_string(r.total())};
    });

    criterion(6, "local stabilizers G38 G62 G95", 1000, [&] {
        bool ok = true;
        for (Mask u : {mask_of({3, 8}), mask_of({6, 2}), mask_of({9, 5})}) {
            for (bool b : stabilizes(loop9_stabilizer(u), code)) {
                ok = ok && b;
            }
        }
        return Outcome{ok, "eigenvalue +1 on all 12 codewords"};
    });

    criterion(7, "search beats the stabilizer bound", 60000, [&] {
        SearchConfig cfg{loop_graph(9)};
        cfg.target_distance = 3;
        cfg.min_size = 12;
        cfg.time_budget = std::chrono::seconds(60);
        SearchResult r = compatibility_search(cfg);
        bool recheck = kl_verify(CwsCode(loop_graph(9), r.codewords), 2).passed;
        bool ok = r.certified && recheck && r.size >= 12 && r.size > 8;
        return Outcome{ok, "size " + std::to_string(r.size) + " > 8, certified=" + (r.certified ? "yes" : "no") +
                               ", exhausted=" + (r.exhausted ? "yes" : "no")};
    });

    criterion(8, "dense oracle equivalence", 0, [&] {
        std::uint64_t elements = 0;
        bool ok = dense_scan_agrees(code, elements);
        for (int trial = 0; trial < 100 && ok; trial++) {
            int n = 3 + trial % 4;
            Graph g = trial % 5 == 0 ? loop_graph(n) : random_graph(n);
            int k = 1 + static_cast<int>(rng()() % 6);
            ok = dense_scan_agrees(CwsCode(g, random_codewords(n, k)), elements);
        }
        return Outcome{ok, "9-qubit code plus 100 random codes, " + std::to_string(elements) + " elements agree"};
    });

    std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
