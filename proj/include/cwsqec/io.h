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


// Text formats for graphs and codes.
//
// Graph file:
//   n 9
//   1 2
//   ...
// Code file:
//   graph loop9.graph      (path relative to the code file), or graph loop 9
//   2,6,7
//   -                      (the empty codeword)
// Blank lines and `#` comments are ignored in both.

#ifndef CWSQEC_IO_H
#define CWSQEC_IO_H

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cwsqec/cws_code.h"
#include "cwsqec/graph_state.h"

namespace cwsqec {

/// Malformed input. what() reads "source:line:column: message"; line and
/// column are 1-based, 0 when not applicable.
class InputError : public std::runtime_error {
   public:
    InputError(const std::string &source, int line, int column, const std::string &message);

    int line() const {
        return line_;
    }
    int column() const {
        return column_;
    }

   private:
    int line_;
    int column_;
};

/// Whole file contents; throws InputError if unreadable.
std::string read_text_file(const std::filesystem::path &path);

Graph parse_graph(std::string_view text, const std::string &source = "<graph>");
Graph load_graph(const std::filesystem::path &path);

/// `base_dir` resolves relative `graph <path>` references. A non-empty
/// `graph_override` replaces the file's graph line, which then becomes optional.
CwsCode parse_code(std::string_view text, const std::string &source = "<code>",
                   const std::filesystem::path &base_dir = ".", const std::optional<Graph> &graph_override = {});
CwsCode load_code(const std::filesystem::path &path, const std::optional<Graph> &graph_override = {});

/// The graph file a code file points at, resolved against `base_dir`;
/// nullopt for `graph loop <n>` or a missing graph line.
std::optional<std::filesystem::path> referenced_graph_path(std::string_view code_text,
                                                           const std::filesystem::path &base_dir);

std::string format_graph(const Graph &g);

/// `graph_ref` is written after `graph `; "loop <n>" for the built-in cycle.
std::string format_code(const CwsCode &code, std::string_view graph_ref);

}  // namespace cwsqec

#endif
