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

#include "cwsqec/pauli_sum.h"

#include <stdexcept>

namespace cwsqec {

PauliSum::PauliSum(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range");
    }
}

PauliSum PauliSum::identity(int n) {
    PauliSum s(n);
    s.terms_[PauliKey{}] = 1;
    return s;
}

PauliSum PauliSum::term(const Pauli &p, ComplexDyadic coeff) {
    PauliSum s(p.num_qubits());
    s.add_term(p, coeff);
    return s;
}

Pauli key_pauli(int n, const PauliKey &key) {
    return Pauli::from_masks(n, key.x, key.z, 0);
}

void PauliSum::check_same(const PauliSum &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("Pauli sum size mismatch");
    }
}

void PauliSum::accumulate(PauliKey key, ComplexDyadic coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void PauliSum::add_term(const Pauli &p, ComplexDyadic coeff) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match sum size");
    }
    accumulate({p.x_mask(), p.z_mask()}, coeff.times_i_pow(p.phase()));
}

ComplexDyadic PauliSum::coefficient_of(const Pauli &p) const {
    auto it = terms_.find({p.x_mask(), p.z_mask()});
    if (it == terms_.end()) {
        return {};
    }
    return it->second.times_i_pow(-p.phase());
}

PauliSum PauliSum::operator+(const PauliSum &other) const {
    check_same(other);
    PauliSum out = *this;
    for (const auto &[k, c] : other.terms_) {
        out.accumulate(k, c);
    }
    return out;
}

PauliSum PauliSum::operator-(const PauliSum &other) const {
    return *this + other.scaled(-1);
}

PauliSum PauliSum::scaled(ComplexDyadic factor) const {
    PauliSum out(n_);
    for (const auto &[k, c] : terms_) {
        out.accumulate(k, c * factor);
    }
    return out;
}

PauliSum PauliSum::operator*(const PauliSum &other) const {
    check_same(other);
    PauliSum out(n_);
    for (const auto &[ka, ca] : terms_) {
        Pauli pa = key_pauli(n_, ka);
        for (const auto &[kb, cb] : other.terms_) {
            Pauli prod = pa * key_pauli(n_, kb);
            out.accumulate({prod.x_mask(), prod.z_mask()}, (ca * cb).times_i_pow(prod.phase()));
        }
    }
    return out;
}

PauliSum adjoint(const PauliSum &x) {
    // Keys are Hermitian, so only the coefficients change.
    PauliSum out(x.num_qubits());
    for (const auto &[k, c] : x.terms()) {
        out.add_term(key_pauli(x.num_qubits(), k), c.conj());
    }
    return out;
}

ComplexDyadic trace(const PauliSum &x) {
    ComplexDyadic c = x.coefficient_of(Pauli::identity(x.num_qubits()));
    int n = x.num_qubits();
    return {c.re.times_pow2(n), c.im.times_pow2(n)};
}

DenseState apply(const PauliSum &x, const DenseState &s) {
    if (x.num_qubits() != s.n) {
        throw std::invalid_argument("Pauli sum size does not match state size");
    }
    DenseState out{s.n, std::vector<ComplexDyadic>(s.amplitudes.size())};
    for (const auto &[k, c] : x.terms()) {
        DenseState t = apply_pauli(s, key_pauli(s.n, k));
        for (size_t mu = 0; mu < t.amplitudes.size(); mu++) {
            out.amplitudes[mu] += c * t.amplitudes[mu];
        }
    }
    return out;
}

}  // namespace cwsqec
