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

#include "cwsqec/graph_state.h"

#include <stdexcept>
#include <string>

namespace cwsqec {

Graph::Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxQubits));
    }
}

void Graph::check_vertex(int a) const {
    if (a < 1 || a > n_) {
        throw std::invalid_argument("vertex " + std::to_string(a) + " outside 1.." + std::to_string(n_));
    }
}

void Graph::add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    }
    if (adjacent(a, b)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    rows_[a - 1] |= bit_of(b);
    rows_[b - 1] |= bit_of(a);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

Mask Graph::neighbors(int a) const {
    check_vertex(a);
    return rows_[a - 1];
}

bool Graph::adjacent(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return (rows_[a - 1] & bit_of(b)) != 0;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; a++) {
        for (int b : members(rows_[a - 1] & ~low_bits(a))) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

int Graph::num_edges() const {
    int twice = 0;
    for (Mask r : rows_) {
        twice += popcount(r);
    }
    return twice / 2;
}

Mask Graph::image(Mask u) const {
    Mask out = 0;
    while (u) {
        out ^= rows_[std::countr_zero(u)];
        u &= u - 1;
    }
    return out;
}

int Graph::edges_within(Mask u) const {
    int twice = 0;
    for (Mask v = u; v; v &= v - 1) {
        twice += popcount(rows_[std::countr_zero(v)] & u);
    }
    return twice / 2;
}

Graph loop_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("loop graph needs at least 3 vertices, got " + std::to_string(n));
    }
    Graph g(n);
    for (int a = 1; a <= n; a++) {
        g.add_edge(a, a % n + 1);
    }
    return g;
}

bool is_loop_graph(const Graph &g) {
    return g.num_vertices() >= 3 && g == loop_graph(g.num_vertices());
}

Pauli vertex_stabilizer(const Graph &g, int a) {
    return Pauli::from_masks(g.num_vertices(), bit_of(a), g.neighbors(a));
}

Pauli stabilizer_element(const Graph &g, Mask u) {
    int n = g.num_vertices();
    if (u & ~low_bits(n)) {
        throw std::invalid_argument("vertex subset exceeds graph size " + std::to_string(n));
    }
    Pauli acc = Pauli::identity(n);
    for (int v : members(u)) {
        acc = acc * vertex_stabilizer(g, v);
    }
    return acc;
}

UnitOrZero overlap(const Graph &g, const Pauli &p) {
    if (p.num_qubits() != g.num_vertices()) {
        throw std::invalid_argument("Pauli size does not match graph size");
    }
    if (p.z_mask() != g.image(p.x_mask())) {
        return UnitOrZero::zero();
    }
    Pauli s = stabilizer_element(g, p.x_mask());
    return UnitOrZero::power_of_i(p.phase() - s.phase());
}

UnitOrZero ReducedError::matrix_element(Mask left, Mask right) const {
    if ((left ^ pattern ^ right) != 0) {
        return UnitOrZero::zero();
    }
    return parity(x_support & right) ? sign * UnitOrZero::power_of_i(2) : sign;
}

ReducedError reduce_error(const Graph &g, const Pauli &e) {
    if (e.num_qubits() != g.num_vertices()) {
        throw std::invalid_argument("Pauli size does not match graph size");
    }
    // e * G_x has no X part left; G_x squares to the identity.
    Pauli flips = e * stabilizer_element(g, e.x_mask());
    return ReducedError{flips.z_mask(), e.x_mask(), UnitOrZero::power_of_i(flips.phase())};
}

}  // namespace cwsqec
