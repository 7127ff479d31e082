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


#include "cwsqec/io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace cwsqec {

InputError::InputError(const std::string &source, int line, int column, const std::string &message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path.string(), 0, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

/// One logical line with comments stripped, split on whitespace.
struct Line {
    int number;
    std::vector<Token> tokens;
};

std::vector<Line> lex(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        number++;
        if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
                i++;
            }
            size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
                i++;
            }
            if (i > start) {
                line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
            }
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return lines;
}

std::optional<int> to_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

int vertex(const std::string &source, int line, int column, std::string_view s, int n) {
    std::optional<int> v = to_int(s);
    if (!v) {
        throw InputError(source, line, column, "expected a vertex index, got '" + std::string(s) + "'");
    }
    if (*v < 1 || *v > n) {
        throw InputError(source, line, column,
                         "vertex " + std::to_string(*v) + " out of range 1.." + std::to_string(n));
    }
    return *v;
}

Graph parse_graph_line(const std::string &source, const Line &line, const std::filesystem::path &base_dir) {
    const auto &t = line.tokens;
    if (t.size() == 3 && t[1].text == "loop") {
        std::optional<int> n = to_int(t[2].text);
        if (!n || *n < 3 || *n > kMaxQubits) {
            throw InputError(source, line.number, t[2].column, "loop size must be an integer in 3..64");
        }
        return loop_graph(*n);
    }
    if (t.size() != 2) {
        throw InputError(source, line.number, t[0].column, "expected 'graph <path>' or 'graph loop <n>'");
    }
    std::filesystem::path p(t[1].text);
    if (p.is_relative()) {
        p = base_dir / p;
    }
    return load_graph(p);
}

}  // namespace

Graph parse_graph(std::string_view text, const std::string &source) {
    std::vector<Line> lines = lex(text);
    if (lines.empty()) {
        throw InputError(source, 1, 1, "empty graph file");
    }
    const Line &head = lines[0];
    if (head.tokens.size() != 2 || head.tokens[0].text != "n") {
        throw InputError(source, head.number, head.tokens[0].column, "first line must be 'n <count>'");
    }
    std::optional<int> n = to_int(head.tokens[1].text);
    if (!n || *n < 1 || *n > kMaxQubits) {
        throw InputError(source, head.number, head.tokens[1].column, "vertex count must be an integer in 1..64");
    }
    Graph g(*n);
    std::map<std::pair<int, int>, int> seen;
    for (size_t k = 1; k < lines.size(); k++) {
        const Line &line = lines[k];
        if (line.tokens.size() != 2) {
            throw InputError(source, line.number, line.tokens[0].column, "expected an edge 'a b'");
        }
        int a = vertex(source, line.number, line.tokens[0].column, line.tokens[0].text, *n);
        int b = vertex(source, line.number, line.tokens[1].column, line.tokens[1].text, *n);
        if (a == b) {
            throw InputError(source, line.number, line.tokens[0].column,
                             "self-loop " + std::to_string(a) + " " + std::to_string(b));
        }
        if (a > b) {
            throw InputError(source, line.number, line.tokens[0].column, "edge endpoints must satisfy a < b");
        }
        auto [it, fresh] = seen.emplace(std::pair{a, b}, line.number);
        if (!fresh) {
            throw InputError(source, line.number, line.tokens[0].column,
                             "duplicate edge " + std::to_string(a) + " " + std::to_string(b) + " (first on line " +
                                 std::to_string(it->second) + ")");
        }
        g.add_edge(a, b);
    }
    return g;
}

Graph load_graph(const std::filesystem::path &path) {
    return parse_graph(read_text_file(path), path.string());
}

CwsCode parse_code(std::string_view text, const std::string &source, const std::filesystem::path &base_dir,
                   const std::optional<Graph> &graph_override) {
    std::vector<Line> lines = lex(text);
    size_t k = 0;
    std::optional<Graph> graph = graph_override;
    if (k < lines.size() && lines[k].tokens[0].text == "graph") {
        if (!graph) {
            graph = parse_graph_line(source, lines[k], base_dir);
        }
        k++;
    }
    if (!graph) {
        throw InputError(source, lines.empty() ? 1 : lines[0].number, 1, "missing 'graph' line");
    }
    int n = graph->num_vertices();
    std::vector<Mask> codewords;
    std::map<Mask, int> seen;
    for (; k < lines.size(); k++) {
        const Line &line = lines[k];
        if (line.tokens.size() != 1) {
            throw InputError(source, line.number, line.tokens[1].column,
                             "codeword must be one comma-separated token");
        }
        std::string_view tok = line.tokens[0].text;
        int col = line.tokens[0].column;
        Mask c = 0;
        if (tok != "-") {
            size_t pos = 0;
            while (true) {
                size_t comma = tok.find(',', pos);
                std::string_view part = tok.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                        : comma - pos);
                int column = col + static_cast<int>(pos);
                int a = vertex(source, line.number, column, part, n);
                if (c & bit_of(a)) {
                    throw InputError(source, line.number, column, "repeated vertex " + std::to_string(a));
                }
                c |= bit_of(a);
                if (comma == std::string_view::npos) {
                    break;
                }
                pos = comma + 1;
            }
        }
        auto [it, fresh] = seen.emplace(c, line.number);
        if (!fresh) {
            throw InputError(source, line.number, col,
                             "duplicate codeword " + set_str(c) + " (first on line " + std::to_string(it->second) +
                                 ")");
        }
        codewords.push_back(c);
    }
    if (codewords.empty()) {
        throw InputError(source, lines.empty() ? 1 : lines.back().number, 1, "no codewords");
    }
    return CwsCode(std::move(*graph), std::move(codewords));
}

CwsCode load_code(const std::filesystem::path &path, const std::optional<Graph> &graph_override) {
    return parse_code(read_text_file(path), path.string(), path.parent_path(), graph_override);
}

std::optional<std::filesystem::path> referenced_graph_path(std::string_view code_text,
                                                           const std::filesystem::path &base_dir) {
    std::vector<Line> lines = lex(code_text);
    if (lines.empty() || lines[0].tokens[0].text != "graph" || lines[0].tokens.size() != 2) {
        return std::nullopt;
    }
    std::filesystem::path p(lines[0].tokens[1].text);
    return p.is_relative() ? base_dir / p : p;
}

std::string format_graph(const Graph &g) {
    std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
    for (auto [a, b] : g.edges()) {
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
}

std::string format_code(const CwsCode &code, std::string_view graph_ref) {
    std::string out = "graph " + std::string(graph_ref) + "\n";
    for (Mask c : code.codewords()) {
        out += codeword_str(c) + "\n";
    }
    return out;
}

}  // namespace cwsqec
