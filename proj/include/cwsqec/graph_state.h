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

#ifndef CWSQEC_GRAPH_STATE_H
#define CWSQEC_GRAPH_STATE_H

#include <utility>
#include <vector>

#include "cwsqec/bits.h"
#include "cwsqec/pauli.h"

namespace cwsqec {

/// A simple undirected graph on vertices 1..n, stored as the rows of its
/// symmetric GF(2) adjacency matrix.
class Graph {
   public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws std::invalid_argument on self-loops, duplicates and bad vertices.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);

    int num_vertices() const {
        return n_;
    }
    /// Neighborhood N_a as a mask.
    Mask neighbors(int a) const;
    bool adjacent(int a, int b) const;
    /// Edges (a, b) with a < b, sorted.
    std::vector<std::pair<int, int>> edges() const;
    int num_edges() const;

    /// Gamma * u over GF(2): XOR of the neighborhoods of the vertices in u.
    Mask image(Mask u) const;
    /// Number of edges with both endpoints in u.
    int edges_within(Mask u) const;

    void add_edge(int a, int b);

    bool operator==(const Graph &other) const = default;

   private:
    void check_vertex(int a) const;

    int n_ = 0;
    std::vector<Mask> rows_;
};

/// The n-cycle with a adjacent to a-1 and a+1, wrapping around. Requires n >= 3.
Graph loop_graph(int n);

/// True iff g is exactly loop_graph(g.num_vertices()).
bool is_loop_graph(const Graph &g);

/// G_a = X_a Z_{N_a}.
Pauli vertex_stabilizer(const Graph &g, int a);

/// G_U, the product of G_v over v in u, with its exact phase.
Pauli stabilizer_element(const Graph &g, Mask u);

/// <G|p|G>, exactly.
///
/// Nonzero iff p equals a stabilizer element up to a phase i^k, in which case
/// the result is i^k.
UnitOrZero overlap(const Graph &g, const Pauli &p);

/// An error rewritten as a phase flip pattern.
///
/// The error equals sign * Z_pattern * G_x where x is the error's X support,
/// so on the basis states Z_c|G> it acts like Z_pattern up to sign and the
/// codeword-dependent factor (-1)^{|x & c|} picked up by G_x.
struct ReducedError {
    Mask pattern = 0;
    Mask x_support = 0;
    UnitOrZero sign;

    /// <G| Z_left e Z_right |G> computed from the reduction alone.
    UnitOrZero matrix_element(Mask left, Mask right) const;

    bool operator==(const ReducedError &other) const = default;
};

/// pattern = z(e) xor Gamma x(e).
ReducedError reduce_error(const Graph &g, const Pauli &e);

}  // namespace cwsqec

#endif
