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

#include "gtest/gtest.h"

#include "cwsqec/dense.h"
#include "test_util.h"

using namespace cwsqec;
using namespace cwsqec::oracle;

TEST(graph, loop_graph) {
    Graph g = loop_graph(9);
    ASSERT_EQ(g.neighbors(1), mask_of({2, 9}));
    ASSERT_EQ(g.neighbors(5), mask_of({4, 6}));
    ASSERT_EQ(g.num_edges(), 9);
    ASSERT_TRUE(is_loop_graph(g));

    Graph t = loop_graph(3);
    for (int a = 1; a <= 3; a++) {
        for (int b = 1; b <= 3; b++) {
            ASSERT_EQ(t.adjacent(a, b), a != b);
        }
    }
    ASSERT_THROW(loop_graph(2), std::invalid_argument);
    ASSERT_FALSE(is_loop_graph(Graph(9)));
}

TEST(graph, rejects_bad_edges) {
    ASSERT_THROW(Graph::from_edges(4, {{2, 2}}), std::invalid_argument);
    ASSERT_THROW(Graph::from_edges(4, {{1, 2}, {2, 1}}), std::invalid_argument);
    ASSERT_THROW(Graph::from_edges(4, {{1, 5}}), std::invalid_argument);
    Graph g = Graph::from_edges(4, {{1, 2}, {3, 4}});
    ASSERT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}));
}

TEST(graph, image_and_edges_within) {
    Graph g = loop_graph(9);
    ASSERT_EQ(g.image(mask_of({1})), mask_of({2, 9}));
    ASSERT_EQ(g.image(mask_of({1, 3})), mask_of({4, 9}));
    ASSERT_EQ(g.edges_within(mask_of({1, 2, 3})), 2);
    ASSERT_EQ(g.edges_within(low_bits(9)), 9);
}

TEST(graph_state, vertex_stabilizer) {
    Graph g = loop_graph(9);
    ASSERT_EQ(vertex_stabilizer(g, 1), Pauli::parse("Z9 X1 Z2", 9));
    ASSERT_EQ(vertex_stabilizer(g, 5), Pauli::parse("Z4 X5 Z6", 9));
    ASSERT_EQ(vertex_stabilizer(Graph(4), 3), Pauli::parse("X3", 4));
    ASSERT_THROW(vertex_stabilizer(g, 10), std::invalid_argument);
    ASSERT_THROW(vertex_stabilizer(g, 0), std::invalid_argument);
}

TEST(graph_state, stabilizer_element) {
    Graph g = loop_graph(9);
    ASSERT_EQ(stabilizer_element(g, 0), Pauli::identity(9));
    Pauli g38 = stabilizer_element(g, mask_of({3, 8}));
    ASSERT_EQ(g38, Pauli::parse("Z2 X3 Z4 Z7 X8 Z9", 9));

    Pauli all = stabilizer_element(g, low_bits(9));
    ASSERT_EQ(all.x_mask(), low_bits(9));
    DenseMatrix folded = DenseMatrix::identity(512);
    for (int a = 1; a <= 9; a++) {
        folded = folded * dense_matrix(vertex_stabilizer(g, a));
    }
    ASSERT_EQ(dense_matrix(all), folded);

    // Known closed form: G_U = (-1)^{edges inside U} X_U Z_{Gamma U} in the
    // X-then-Z normal form.
    for (int trial = 0; trial < 200; trial++) {
        Graph r = random_graph(8);
        Mask u = random_mask(8);
        Pauli s = stabilizer_element(r, u);
        ASSERT_EQ(s.x_mask(), u);
        ASSERT_EQ(s.z_mask(), r.image(u));
        int normal = s.phase() + popcount(s.x_mask() & s.z_mask());
        ASSERT_EQ(normal % 4, (r.edges_within(u) & 1) * 2);
    }
}

TEST(graph_state, overlap_examples) {
    Graph g = loop_graph(9);
    ASSERT_TRUE(overlap(g, Pauli::identity(9)).is_one());
    ASSERT_TRUE(overlap(g, Pauli::z_on(9, mask_of({2, 6, 7}))).is_zero());
    for (int trial = 0; trial < 50; trial++) {
        Mask u = random_mask(9);
        Pauli s = stabilizer_element(g, u);
        ASSERT_TRUE(overlap(g, s).is_one());
        ASSERT_TRUE(dense_overlap(g, s).is_one());
        ASSERT_EQ(overlap(g, s.with_phase(s.phase() + 1)), UnitOrZero::power_of_i(1));
    }
    ASSERT_THROW(overlap(g, Pauli::identity(8)), std::invalid_argument);
}

TEST(graph_state, overlap_matches_dense_oracle) {
    Graph g = loop_graph(9);
    for (int trial = 0; trial < 200; trial++) {
        Pauli p = random_pauli(9);
        if (trial % 2 == 0) {
            // Half the samples hit the stabilizer group so nonzero values get exercised.
            p = stabilizer_element(g, random_mask(9)).with_phase(static_cast<int>(rng()() % 4));
        }
        ASSERT_EQ(overlap(g, p), dense_overlap(g, p)) << p.str();
    }
}

TEST(graph_state, overlap_nonzero_only_on_stabilizer_group) {
    for (int trial = 0; trial < 30; trial++) {
        int n = 2 + static_cast<int>(rng()() % 5);
        Graph g = random_graph(n);
        for (Mask x = 0; x < (Mask{1} << n); x++) {
            for (Mask z = 0; z < (Mask{1} << n); z++) {
                Pauli p = Pauli::from_masks(n, x, z);
                UnitOrZero v = dense_overlap(g, p);
                ASSERT_EQ(overlap(g, p), v);
                if (!v.is_zero()) {
                    Pauli s = stabilizer_element(g, x);
                    ASSERT_EQ(s.with_phase(0), p.with_phase(0));
                }
            }
        }
    }
}

TEST(graph_state, reduce_error_examples) {
    Graph g = loop_graph(9);
    for (int a = 1; a <= 9; a++) {
        ReducedError r = reduce_error(g, Pauli::z_on(9, bit_of(a)));
        ASSERT_EQ(r.pattern, bit_of(a));
        ASSERT_TRUE(r.sign.is_one());
    }
    ASSERT_EQ(reduce_error(g, Pauli::parse("X1", 9)).pattern, mask_of({2, 9}));
    ASSERT_EQ(reduce_error(g, Pauli::parse("Y4", 9)).pattern, mask_of({3, 4, 5}));
    ASSERT_THROW(reduce_error(g, Pauli::identity(3)), std::invalid_argument);
}

TEST(graph_state, reduce_error_matches_dense_matrix_elements) {
    Graph g = loop_graph(9);
    DenseState s = state_vector(g);
    for (int trial = 0; trial < 40; trial++) {
        Pauli e = random_low_weight_pauli(9, 3);
        ReducedError r = reduce_error(g, e);
        ASSERT_EQ(r.pattern, e.z_mask() ^ g.image(e.x_mask()));
        for (int pair = 0; pair < 20; pair++) {
            Mask a = random_mask(9);
            Mask b = random_mask(9);
            if (pair % 4 == 0) {
                b = a ^ r.pattern;  // force a nonzero element
            }
            IntState bra = dense_codeword(g, a);
            IntState ket = to_int_state(apply_pauli(apply_pauli(s, Pauli::z_on(9, b)), e));
            UnitOrZero dense = unit_from_scaled(scaled_inner(bra, ket), 9);
            ASSERT_EQ(r.matrix_element(a, b), dense) << e.str();
            // Same element through Z_pattern alone, then adjusted.
            IntState zket = to_int_state(apply_pauli(apply_pauli(s, Pauli::z_on(9, b)), Pauli::z_on(9, r.pattern)));
            UnitOrZero via_z = unit_from_scaled(scaled_inner(bra, zket), 9);
            UnitOrZero adjust = parity(e.x_mask() & b) ? UnitOrZero::power_of_i(2) : UnitOrZero::power_of_i(0);
            ASSERT_EQ(dense, r.sign * adjust * via_z);
        }
    }
}
