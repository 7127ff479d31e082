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

#ifndef CWSQEC_PARALLEL_H
#define CWSQEC_PARALLEL_H

#include <algorithm>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace cwsqec {

/// Splits [0, count) into contiguous chunks, runs fn(begin, end) on each,
/// and returns the results in chunk order. The chunk layout depends on the
/// thread count, so callers must reduce the results associatively to stay
/// independent of it.
template <typename Fn>
auto parallel_chunks(size_t count, unsigned threads, Fn fn) -> std::vector<std::invoke_result_t<Fn, size_t, size_t>> {
    using Result = std::invoke_result_t<Fn, size_t, size_t>;
    size_t workers = std::max<size_t>(1, std::min<size_t>(threads == 0 ? 1 : threads, count));
    std::vector<Result> results(workers);
    if (workers == 1) {
        results[0] = fn(0, count);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        size_t begin = count * w / workers;
        size_t end = count * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                results[w] = fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

}  // namespace cwsqec

#endif
