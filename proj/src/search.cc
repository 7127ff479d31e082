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

#include "cwsqec/search.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cwsqec/cws_code.h"

namespace cwsqec {

ForbiddenDifferences forbidden_differences(const Graph &g, int max_weight) {
    int n = g.num_vertices();
    if (max_weight < 0 || max_weight > n) {
        throw std::invalid_argument("weight " + std::to_string(max_weight) + " outside 0.." + std::to_string(n));
    }
    ForbiddenDifferences out;
    std::set<Mask> empty_x;
    for (int d = 1; d <= max_weight; d++) {
        for (const Pauli &e : enumerate_errors(n, d)) {
            ReducedError r = reduce_error(g, e);
            if (r.pattern == 0) {
                out.contains_empty = true;
                empty_x.insert(r.x_support);
            } else {
                out.patterns.insert(r.pattern);
            }
        }
    }
    out.empty_pattern_x_supports.assign(empty_x.begin(), empty_x.end());
    return out;
}

SearchStrategy parse_strategy(std::string_view name) {
    if (name == "greedy") {
        return SearchStrategy::greedy;
    }
    if (name == "bb" || name == "branch-and-bound") {
        return SearchStrategy::branch_and_bound;
    }
    throw std::invalid_argument("unknown search strategy '" + std::string(name) + "'");
}

namespace {

bool difference_allowed(Mask delta, const ForbiddenDifferences &f) {
    if (f.patterns.contains(delta)) {
        return false;
    }
    for (Mask x : f.empty_pattern_x_supports) {
        if (parity(x & delta)) {
            return false;
        }
    }
    return true;
}

class Bitset {
   public:
    explicit Bitset(size_t bits = 0) : words_((bits + 63) / 64, 0) {
    }
    void set(size_t k) {
        words_[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    void reset(size_t k) {
        words_[k / 64] &= ~(std::uint64_t{1} << (k % 64));
    }
    bool test(size_t k) const {
        return (words_[k / 64] >> (k % 64)) & 1;
    }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    /// Lowest set index; requires any().
    size_t first() const {
        for (size_t w = 0; w < words_.size(); w++) {
            if (words_[w]) {
                return w * 64 + std::countr_zero(words_[w]);
            }
        }
        return words_.size() * 64;
    }
    Bitset operator&(const Bitset &o) const {
        Bitset r = *this;
        for (size_t w = 0; w < words_.size(); w++) {
            r.words_[w] &= o.words_[w];
        }
        return r;
    }
    void and_not(const Bitset &o) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] &= ~o.words_[w];
        }
    }

   private:
    std::vector<std::uint64_t> words_;
};

/// Max clique by branch and bound with greedy coloring bounds.
class CliqueSearch {
   public:
    CliqueSearch(const std::vector<Bitset> &adj, std::chrono::steady_clock::time_point deadline, size_t stop_at)
        : adj_(adj), deadline_(deadline), stop_at_(stop_at) {
    }

    void run(const std::vector<size_t> &seed) {
        best_ = seed;
        Bitset all(adj_.size());
        for (size_t v = 0; v < adj_.size(); v++) {
            all.set(v);
        }
        std::vector<size_t> current;
        if (best_.size() >= stop_at_) {
            stopped_ = true;
        } else {
            expand(current, all);
        }
        complete_ = !aborted_ && !stopped_;
    }

    const std::vector<size_t> &best() const {
        return best_;
    }
    bool complete() const {
        return complete_;
    }
    std::uint64_t nodes() const {
        return nodes_;
    }

   private:
    void expand(std::vector<size_t> &current, Bitset candidates) {
        if (aborted_ || stopped_) {
            return;
        }
        if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() >= deadline_) {
            aborted_ = true;
            return;
        }
        std::vector<size_t> order;
        std::vector<size_t> colors;
        color_sort(candidates, order, colors);
        for (size_t k = order.size(); k-- > 0;) {
            if (current.size() + colors[k] <= best_.size()) {
                return;
            }
            size_t v = order[k];
            current.push_back(v);
            Bitset next = candidates & adj_[v];
            if (next.any()) {
                expand(current, next);
            } else if (current.size() > best_.size()) {
                best_ = current;
                if (best_.size() >= stop_at_) {
                    stopped_ = true;
                }
            }
            current.pop_back();
            if (aborted_ || stopped_) {
                return;
            }
            candidates.reset(v);
        }
    }

    /// Greedy sequential coloring; order lists vertices by nondecreasing color.
    void color_sort(const Bitset &candidates, std::vector<size_t> &order, std::vector<size_t> &colors) const {
        Bitset uncolored = candidates;
        size_t color = 0;
        while (uncolored.any()) {
            color++;
            Bitset available = uncolored;
            while (available.any()) {
                size_t v = available.first();
                available.reset(v);
                available.and_not(adj_[v]);
                uncolored.reset(v);
                order.push_back(v);
                colors.push_back(color);
            }
        }
    }

    const std::vector<Bitset> &adj_;
    std::chrono::steady_clock::time_point deadline_;
    size_t stop_at_;
    std::vector<size_t> best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool stopped_ = false;
    bool complete_ = false;
};

}  // namespace

bool differences_avoid(const std::vector<Mask> &candidate, const ForbiddenDifferences &forbidden) {
    for (size_t i = 0; i < candidate.size(); i++) {
        for (size_t j = i + 1; j < candidate.size(); j++) {
            if (candidate[i] == candidate[j] || !difference_allowed(candidate[i] ^ candidate[j], forbidden)) {
                return false;
            }
        }
    }
    return true;
}

bool certify(const std::vector<Mask> &candidate, const Graph &g, int d) {
    if (candidate.empty() || d < 1 || d - 1 > g.num_vertices()) {
        return false;
    }
    std::set<Mask> distinct(candidate.begin(), candidate.end());
    if (distinct.size() != candidate.size()) {
        return false;
    }
    KLOptions options;
    options.max_violations = 1;
    return kl_verify(CwsCode(g, candidate), d - 1, options).passed;
}

SearchResult compatibility_search(const SearchConfig &config) {
    auto start = std::chrono::steady_clock::now();
    int n = config.graph.num_vertices();
    if (config.target_distance < 2) {
        throw std::invalid_argument("target distance must be at least 2");
    }
    if (config.target_distance - 1 > n) {
        throw std::invalid_argument("target distance exceeds qubit count + 1");
    }
    if (config.min_size < 1) {
        throw std::invalid_argument("min size must be at least 1");
    }
    if (n > kMaxSearchVertices) {
        throw std::invalid_argument("search supports at most " + std::to_string(kMaxSearchVertices) + " qubits");
    }

    ForbiddenDifferences forbidden = forbidden_differences(config.graph, config.target_distance - 1);

    // Vertices of the compatibility graph: subsets that may join the empty codeword.
    std::vector<Mask> verts;
    for (Mask t = 1; t < (Mask{1} << n); t++) {
        if (difference_allowed(t, forbidden)) {
            verts.push_back(t);
        }
    }
    std::vector<size_t> degree(verts.size(), 0);
    for (size_t i = 0; i < verts.size(); i++) {
        for (size_t j = i + 1; j < verts.size(); j++) {
            if (difference_allowed(verts[i] ^ verts[j], forbidden)) {
                degree[i]++;
                degree[j]++;
            }
        }
    }
    // Degree descending, ties by ascending mask.
    std::vector<size_t> perm(verts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return degree[a] > degree[b]; });
    std::vector<Mask> ordered(verts.size());
    for (size_t k = 0; k < perm.size(); k++) {
        ordered[k] = verts[perm[k]];
    }

    std::vector<Bitset> adj(ordered.size(), Bitset(ordered.size()));
    for (size_t i = 0; i < ordered.size(); i++) {
        for (size_t j = i + 1; j < ordered.size(); j++) {
            if (difference_allowed(ordered[i] ^ ordered[j], forbidden)) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }

    std::vector<size_t> greedy;
    for (size_t v = 0; v < ordered.size(); v++) {
        bool ok = std::all_of(greedy.begin(), greedy.end(), [&](size_t u) { return adj[v].test(u); });
        if (ok) {
            greedy.push_back(v);
        }
    }

    SearchResult result;
    result.candidates = ordered.size();
    std::vector<size_t> chosen = greedy;
    if (config.strategy == SearchStrategy::branch_and_bound) {
        // The clique excludes the empty codeword, hence the -1.
        size_t stop_at = config.stop_at_min_size ? static_cast<size_t>(config.min_size - 1) : ordered.size() + 1;
        CliqueSearch bb(adj, start + config.time_budget, std::max<size_t>(stop_at, 1));
        bb.run(greedy);
        chosen = bb.best();
        result.exhausted = bb.complete();
        result.nodes = bb.nodes();
    }

    result.codewords.push_back(0);
    for (size_t v : chosen) {
        result.codewords.push_back(ordered[v]);
    }
    std::sort(result.codewords.begin(), result.codewords.end());
    result.size = static_cast<int>(result.codewords.size());
    result.reached_min_size = result.size >= config.min_size;
    result.certified = certify(result.codewords, config.graph, config.target_distance);
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace cwsqec
