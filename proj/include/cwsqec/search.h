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

// Codeword search over Z-flip patterns.
//
// A set C of subsets is a pure code against errors of weight < d exactly when
// no difference c xor c' (c != c') is the reduced pattern of such an error.
// The condition is invariant under translating C, so every search fixes the
// empty codeword and looks for a maximum clique among the remaining subsets
// in the compatibility graph.

#ifndef CWSQEC_SEARCH_H
#define CWSQEC_SEARCH_H

#include <chrono>
#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "cwsqec/graph_state.h"

namespace cwsqec {

struct ForbiddenDifferences {
    /// Nonempty reduced patterns of errors with weight 1..max_weight.
    std::set<Mask> patterns;
    /// Some error reduces to the empty pattern (a degenerate direction).
    bool contains_empty = false;
    /// X supports of the errors reducing to the empty pattern, deduplicated.
    std::vector<Mask> empty_pattern_x_supports;
};

/// Throws std::invalid_argument unless 0 <= max_weight <= n.
ForbiddenDifferences forbidden_differences(const Graph &g, int max_weight);

enum class SearchStrategy { greedy, branch_and_bound };

/// Parses "greedy" or "bb"; throws std::invalid_argument otherwise.
SearchStrategy parse_strategy(std::string_view name);

struct SearchConfig {
    Graph graph;
    int target_distance = 3;
    int min_size = 1;
    std::chrono::milliseconds time_budget{60'000};
    SearchStrategy strategy = SearchStrategy::branch_and_bound;
    /// Stop branch-and-bound as soon as the incumbent reaches min_size.
    bool stop_at_min_size = false;
};

struct SearchResult {
    /// Ascending by mask, starting with the empty codeword.
    std::vector<Mask> codewords;
    int size = 0;
    /// kl_verify at weight target_distance - 1 passed on `codewords`.
    bool certified = false;
    /// The search space was fully explored, so `size` is the maximum.
    bool exhausted = false;
    bool reached_min_size = false;
    std::chrono::milliseconds elapsed{0};
    std::uint64_t nodes = 0;
    /// Number of compatibility-graph vertices besides the empty codeword.
    size_t candidates = 0;
};

/// Throws std::invalid_argument for target_distance < 2, min_size < 1, or
/// graphs beyond kMaxSearchVertices.
SearchResult compatibility_search(const SearchConfig &config);

inline constexpr int kMaxSearchVertices = 20;

/// kl_verify(code, d - 1).passed for the candidate codeword set; false for
/// duplicate or empty candidates.
bool certify(const std::vector<Mask> &candidate, const Graph &g, int d);

/// The search's own acceptance test: pairwise differences avoid the forbidden
/// patterns and every codeword passes the degenerate-direction parity filter.
bool differences_avoid(const std::vector<Mask> &candidate, const ForbiddenDifferences &forbidden);

}  // namespace cwsqec

#endif
