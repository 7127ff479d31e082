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


#include "cwsqec/cli.h"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "cwsqec/code_projector.h"
#include "cwsqec/cws_code.h"
#include "cwsqec/dense.h"
#include "cwsqec/io.h"
#include "cwsqec/search.h"
#include "json.hpp"

#ifndef CWSQEC_VERSION
#define CWSQEC_VERSION "0.0.0"
#endif

namespace cwsqec {

std::chrono::milliseconds parse_budget(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() || value < 0) {
        throw std::invalid_argument("bad budget '" + std::string(text) + "'");
    }
    std::string_view unit(ptr, text.data() + text.size() - ptr);
    if (unit == "ms") {
        return std::chrono::milliseconds(value);
    }
    if (unit == "s" || unit.empty()) {
        return std::chrono::seconds(value);
    }
    if (unit == "m") {
        return std::chrono::minutes(value);
    }
    throw std::invalid_argument("bad budget unit in '" + std::string(text) + "' (use ms, s or m)");
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned int k = 0; k < len; k++) {
        std::snprintf(buf, sizeof buf, "%02x", digest[k]);
        hex += buf;
    }
    return hex;
}

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const std::vector<std::int64_t> kReferenceEnumerator = {144, 0, 0, 0, 96, 0, 1536, 3072, 1296, 0};

struct Options {
    std::string graph_path;
    std::string code_path;
    std::string out_path;
    std::string method = "both";
    std::string strategy = "bb";
    std::string budget = "60s";
    int weight = 2;
    int max = 4;
    int target_distance = 3;
    int min_size = 1;
    unsigned threads = 1;
    bool pretty = false;
    bool stop_at_min_size = false;
};

std::string millis(Clock::duration d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::chrono::duration<double, std::milli>(d).count());
    return buf;
}

json set_list(const std::vector<Mask> &masks) {
    json out = json::array();
    for (Mask m : masks) {
        out.push_back(set_str(m));
    }
    return out;
}

json set_list(const std::set<Mask> &masks) {
    return set_list(std::vector<Mask>(masks.begin(), masks.end()));
}

json violations_json(const KLReport &r) {
    json out = json::array();
    for (const KLViolation &v : r.violations) {
        out.push_back({{"error", v.error.str()}, {"i", v.i}, {"j", v.j}, {"value", v.value.str()}});
    }
    return out;
}

/// Inputs, report assembly and exit status for one invocation.
class Run {
   public:
    Run(std::string subcommand, const Options &opt, std::ostream &out, std::ostream &err)
        : subcommand_(std::move(subcommand)), opt_(opt), out_(out), err_(err), start_(Clock::now()) {}

    json &parameters() {
        return parameters_;
    }

    Graph graph() {
        if (opt_.graph_path.empty()) {
            builtin_.push_back("loop_graph(9)");
            return loop_graph(9);
        }
        std::string text = read_text_file(opt_.graph_path);
        add_file("graph", opt_.graph_path, text);
        return parse_graph(text, opt_.graph_path);
    }

    CwsCode code() {
        std::optional<Graph> override;
        if (!opt_.graph_path.empty()) {
            override = graph();
        }
        if (opt_.code_path.empty()) {
            builtin_.push_back("code_9_12_3");
            CwsCode c = code_9_12_3();
            return override ? CwsCode(*override, c.codewords()) : c;
        }
        std::filesystem::path path(opt_.code_path);
        std::string text = read_text_file(path);
        add_file("code", opt_.code_path, text);
        if (!override) {
            if (auto ref = referenced_graph_path(text, path.parent_path())) {
                add_file("graph", ref->string(), read_text_file(*ref));
            }
        }
        return parse_code(text, opt_.code_path, path.parent_path(), override);
    }

    /// Emits the report; `rows` feed the --pretty table.
    int finish(json verdict, bool passed, const std::vector<std::pair<std::string, std::string>> &rows = {}) {
        json report;
        report["tool"] = "cwsqec";
        report["version"] = CWSQEC_VERSION;
        report["subcommand"] = subcommand_;
        report["inputs"] = {{"files", files_}, {"builtin", builtin_}, {"parameters", parameters_}};
        verdict["passed"] = passed;
        report["verdict"] = std::move(verdict);
        report["exit_code"] = passed ? kExitPass : kExitFail;
        report["timing"] = {{"elapsed_ms", millis(Clock::now() - start_)}};
        out_ << report.dump(opt_.pretty ? 2 : -1) << "\n";
        if (opt_.pretty) {
            size_t width = 0;
            for (const auto &[k, v] : rows) {
                width = std::max(width, k.size());
            }
            err_ << subcommand_ << ": " << (passed ? "PASS" : "FAIL") << "\n";
            for (const auto &[k, v] : rows) {
                err_ << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
            }
        }
        return passed ? kExitPass : kExitFail;
    }

   private:
    void add_file(const std::string &role, const std::string &path, const std::string &text) {
        files_.push_back({{"role", role}, {"path", path}, {"sha256", sha256_hex(text)}, {"bytes", text.size()}});
    }

    std::string subcommand_;
    const Options &opt_;
    std::ostream &out_;
    std::ostream &err_;
    Clock::time_point start_;
    json files_ = json::array();
    json builtin_ = json::array();
    json parameters_ = json::object();
};

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

int cmd_verify(Run &run, const Options &opt) {
    CwsCode code = run.code();
    run.parameters() = {{"weight", opt.weight}, {"threads", opt.threads}};
    KLOptions o;
    o.threads = opt.threads;
    KLReport r = kl_verify(code, opt.weight, o);
    json v = {{"pure", r.pure},
              {"checked_weight", r.checked_weight},
              {"violations", violations_json(r)},
              {"truncated", r.truncated},
              {"counts",
               {{"codewords", code.size()},
                {"errors_checked", r.errors_checked},
                {"elements_checked", r.elements_checked},
                {"violations", r.violation_count}}}};
    return run.finish(std::move(v), r.passed,
                      {{"codewords", std::to_string(code.size())},
                       {"checked weight", std::to_string(r.checked_weight)},
                       {"errors", std::to_string(r.errors_checked)},
                       {"violations", std::to_string(r.violation_count)},
                       {"pure", yes_no(r.pure)}});
}

int cmd_distance(Run &run, const Options &opt) {
    CwsCode code = run.code();
    run.parameters() = {{"max", opt.max}, {"threads", opt.threads}};
    std::optional<int> d = distance(code, opt.max, opt.threads);
    int below = d ? *d - 1 : opt.max;
    KLOptions o;
    o.threads = opt.threads;
    KLReport clean = kl_verify(code, below, o);
    KLReport witness;
    if (d) {
        o.max_violations = 10;
        o.single_weight = true;
        witness = kl_verify(code, *d, o);
    }
    json v = {{"distance", d ? json(*d) : json(nullptr)},
              {"pure", clean.pure},
              {"checked_weight", d ? *d : opt.max},
              {"violations", violations_json(witness)},
              {"truncated", witness.truncated},
              {"counts",
               {{"codewords", code.size()},
                {"errors_checked", clean.errors_checked + witness.errors_checked},
                {"violations", witness.violation_count}}}};
    std::string shown = d ? std::to_string(*d) : "> " + std::to_string(opt.max);
    return run.finish(std::move(v), d.has_value(),
                      {{"distance", shown}, {"pure below distance", yes_no(clean.pure)}});
}

int cmd_patterns(Run &run, const Options &opt) {
    Graph g = opt.code_path.empty() ? run.graph() : run.code().graph();
    ErrorPatterns p = error_patterns(g);
    json classes = json::object();
    json counts = {{"patterns", p.all.size()}};
    std::vector<std::pair<std::string, std::string>> rows = {{"patterns", std::to_string(p.all.size())}};
    if (p.tagged) {
        for (int k = 1; k <= 6; k++) {
            classes[std::to_string(k)] = set_list(p.by_class[k - 1]);
            counts["size_" + std::to_string(k)] = p.by_class[k - 1].size();
            rows.push_back({"size " + std::to_string(k), std::to_string(p.by_class[k - 1].size())});
        }
    }
    json v = {{"pure", !p.contains_empty},
              {"checked_weight", 2},
              {"violations", json::array()},
              {"tagged", p.tagged},
              {"contains_empty", p.contains_empty},
              {"patterns", set_list(p.all)},
              {"classes", classes},
              {"counts", counts}};
    rows.push_back({"empty pattern", yes_no(p.contains_empty)});
    return run.finish(std::move(v), !p.contains_empty, rows);
}

int cmd_proofcheck(Run &run, const Options &opt) {
    CwsCode code = run.code();
    run.parameters() = {{"threads", opt.threads}};
    ErrorPatterns p = error_patterns(code.graph());
    std::set<Mask> t = transition_set(code);
    ReducedTransitions reduced = reduced_transitions(code);
    bool verdict = pattern_proof_check(code);
    KLOptions o;
    o.threads = opt.threads;
    KLReport kl = kl_verify(code, 2, o);
    bool kl_verdict = kl.passed && kl.pure;
    json hits = json::array();
    for (Mask m : t) {
        if (p.all.count(m)) {
            hits.push_back(set_str(m));
        }
    }
    json v = {{"pure", !p.contains_empty},
              {"checked_weight", 2},
              {"violations", hits},
              {"proof_check", verdict},
              {"kl_verdict", kl_verdict},
              {"agrees_with_kl", verdict == kl_verdict},
              {"reduced", reduced.reduced},
              {"reduced_transitions", set_list(reduced.transitions)},
              {"counts",
               {{"patterns", p.all.size()},
                {"transitions", t.size()},
                {"reduced_transitions", reduced.transitions.size()},
                {"violations", hits.size()}}}};
    return run.finish(std::move(v), verdict && verdict == kl_verdict,
                      {{"patterns", std::to_string(p.all.size())},
                       {"transitions", std::to_string(t.size())},
                       {"reduced transitions", std::to_string(reduced.transitions.size())},
                       {"proof check", yes_no(verdict)},
                       {"agrees with KL scan", yes_no(verdict == kl_verdict)}});
}

std::string coeff_str(const ComplexDyadic &c) {
    return c.is_real() ? c.re.str() : c.str();
}

int cmd_projector(Run &run, const Options &opt) {
    bool builtin = opt.code_path.empty() && opt.graph_path.empty();
    CwsCode code = run.code();
    PauliSum p = builtin ? nine_qubit_projector() : projector_from_codewords(code);
    json terms = json::array();
    for (const auto &[key, coeff] : p.terms()) {
        terms.push_back(coeff_str(coeff) + " " + key_pauli(p.num_qubits(), key).str());
    }
    bool idempotent = (p * p - p).is_zero();
    bool hermitian = adjoint(p) == p;
    ComplexDyadic tr = trace(p);
    bool trace_ok = tr == ComplexDyadic(code.size());
    bool equals = !builtin || p == projector_from_codewords(code);
    json v = {{"terms", terms},
              {"term_count", p.size()},
              {"idempotent", idempotent},
              {"hermitian", hermitian},
              {"trace", coeff_str(tr)},
              {"expected_trace", code.size()},
              {"equals_codeword_projector", equals}};
    return run.finish(std::move(v), idempotent && hermitian && trace_ok && equals,
                      {{"terms", std::to_string(p.size())},
                       {"idempotent", yes_no(idempotent)},
                       {"hermitian", yes_no(hermitian)},
                       {"trace", coeff_str(tr)},
                       {"equals codeword projector", yes_no(equals)}});
}

json vector_json(const std::vector<std::int64_t> &a) {
    return json(a);
}

std::string vector_str(const std::vector<std::int64_t> &a) {
    std::string s;
    for (auto x : a) {
        s += (s.empty() ? "" : " ") + std::to_string(x);
    }
    return s;
}

int cmd_enumerator(Run &run, const Options &opt) {
    if (opt.method != "both") {
        parse_enumerator_method(opt.method);
    }
    CwsCode code = run.code();
    run.parameters() = {{"method", opt.method}, {"threads", opt.threads}};
    std::int64_t parseval = (std::int64_t{1} << code.num_qubits()) * code.size();
    json v;
    std::vector<std::pair<std::string, std::string>> rows;
    bool passed = true;
    std::vector<std::int64_t> shown;
    if (opt.method == "both") {
        EnumeratorResult brute = weight_enumerator(code, EnumeratorMethod::brute, opt.threads);
        EnumeratorResult fast = weight_enumerator(code, EnumeratorMethod::fast, opt.threads);
        passed = brute == fast;
        v = {{"a", vector_json(fast.a)}, {"brute", vector_json(brute.a)}, {"fast", vector_json(fast.a)},
             {"agree", passed}};
        rows = {{"brute", vector_str(brute.a)}, {"fast", vector_str(fast.a)}, {"agree", yes_no(passed)}};
        shown = fast.a;
    } else {
        EnumeratorResult r = weight_enumerator(code, parse_enumerator_method(opt.method), opt.threads);
        v = {{"a", vector_json(r.a)}};
        rows = {{opt.method, vector_str(r.a)}};
        shown = r.a;
    }
    std::int64_t total = 0;
    for (auto x : shown) {
        total += x;
    }
    v["total"] = total;
    v["parseval"] = total == parseval;
    rows.push_back({"total", std::to_string(total) + " (expected " + std::to_string(parseval) + ")"});
    return run.finish(std::move(v), passed && total == parseval, rows);
}

int cmd_statevec(Run &run, const Options &) {
    Graph g = run.graph();
    std::vector<std::string> signs = sign_strings(state_vector(g));
    size_t minus = std::count_if(signs.begin(), signs.end(), [](const std::string &s) { return s[0] == '-'; });
    json v = {{"n", g.num_vertices()}, {"amplitudes", signs}, {"negative", minus}};
    return run.finish(std::move(v), true,
                      {{"qubits", std::to_string(g.num_vertices())},
                       {"amplitudes", std::to_string(signs.size())},
                       {"negative", std::to_string(minus)}});
}

int cmd_search(Run &run, const Options &opt) {
    SearchConfig cfg{run.graph()};
    cfg.target_distance = opt.target_distance;
    cfg.min_size = opt.min_size;
    cfg.time_budget = parse_budget(opt.budget);
    cfg.strategy = parse_strategy(opt.strategy);
    cfg.stop_at_min_size = opt.stop_at_min_size;
    run.parameters() = {{"distance", opt.target_distance},
                        {"min_size", opt.min_size},
                        {"budget_ms", cfg.time_budget.count()},
                        {"strategy", opt.strategy},
                        {"stop_at_min_size", opt.stop_at_min_size}};
    SearchResult r = compatibility_search(cfg);
    std::string ref = is_loop_graph(cfg.graph) ? "loop " + std::to_string(cfg.graph.num_vertices())
                                               : std::filesystem::absolute(opt.graph_path).string();
    std::string code_file = format_code(CwsCode(cfg.graph, r.codewords), ref);
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!(f << code_file)) {
            throw InputError(opt.out_path, 0, 0, "cannot write file");
        }
    }
    json v = {{"size", r.size},
              {"certified", r.certified},
              {"exhausted", r.exhausted},
              {"reached_min_size", r.reached_min_size},
              {"codewords", set_list(r.codewords)},
              {"code_file", code_file},
              {"counts", {{"candidates", r.candidates}, {"nodes", r.nodes}}},
              {"search_ms", r.elapsed.count()}};
    return run.finish(std::move(v), r.certified && r.reached_min_size,
                      {{"size", std::to_string(r.size)},
                       {"certified", yes_no(r.certified)},
                       {"exhausted", yes_no(r.exhausted)},
                       {"candidates", std::to_string(r.candidates)},
                       {"nodes", std::to_string(r.nodes)}});
}

int cmd_demo(Run &run, const Options &opt, std::ostream &err) {
    CwsCode code = code_9_12_3();
    run.parameters() = {{"threads", opt.threads}};
    struct Check {
        std::string name;
        bool passed;
        std::string detail;
        Clock::duration elapsed;
    };
    std::vector<Check> checks;
    auto check = [&](std::string name, const std::function<std::pair<bool, std::string>()> &fn) {
        auto t0 = Clock::now();
        auto [ok, detail] = fn();
        checks.push_back({std::move(name), ok, std::move(detail), Clock::now() - t0});
    };
    KLOptions o;
    o.threads = opt.threads;

    check("KL conditions through weight 2", [&] {
        KLReport r = kl_verify(code, 2, o);
        return std::pair{r.passed && r.pure, std::to_string(r.errors_checked) + " errors, " +
                                                 std::to_string(r.violation_count) + " violations, " +
                                                 (r.pure ? "pure" : "impure")};
    });
    check("distance is 3", [&] {
        std::optional<int> d = distance(code, 4, opt.threads);
        return std::pair{d == 3, "distance " + (d ? std::to_string(*d) : std::string("> 4"))};
    });
    check("pattern proof agrees with KL scan", [&] {
        bool proof = pattern_proof_check(code);
        KLReport r = kl_verify(code, 2, o);
        ReducedTransitions t = reduced_transitions(code);
        bool ok = proof && proof == (r.passed && r.pure) && t.reduced && t.transitions.size() == 31;
        return std::pair{ok, std::to_string(error_patterns(code.graph()).all.size()) + " patterns, " +
                                 std::to_string(t.transitions.size()) + " reduced transitions"};
    });
    check("projector", [&] {
        PauliSum p = nine_qubit_projector();
        bool ok = (p * p - p).is_zero() && adjoint(p) == p && trace(p) == ComplexDyadic(12) &&
                  p == projector_from_codewords(code);
        return std::pair{ok, std::to_string(p.size()) + " terms, trace " + coeff_str(trace(p))};
    });
    check("local stabilizers G38 G62 G95", [&] {
        bool ok = true;
        for (Mask u : {mask_of({3, 8}), mask_of({6, 2}), mask_of({9, 5})}) {
            for (bool b : stabilizes(loop9_stabilizer(u), code)) {
                ok = ok && b;
            }
        }
        return std::pair{ok, std::string(ok ? "+1 on all 12 codewords" : "not stabilizing")};
    });
    check("weight enumerator", [&] {
        EnumeratorResult fast = weight_enumerator(code, EnumeratorMethod::fast, opt.threads);
        EnumeratorResult brute = weight_enumerator(code, EnumeratorMethod::brute, opt.threads);
        bool ok = fast == brute && fast.a == kReferenceEnumerator;
        return std::pair{ok, vector_str(fast.a)};
    });

    bool all = true;
    json list = json::array();
    for (const Check &c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"elapsed_ms", millis(c.elapsed)}});
    }
    if (opt.pretty) {
        size_t width = 0;
        for (const Check &c : checks) {
            width = std::max(width, c.name.size());
        }
        for (const Check &c : checks) {
            err << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
                << c.detail << "  (" << millis(c.elapsed) << " ms)\n";
        }
    }
    return run.finish({{"checks", list}}, all);
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Exact verification and search for codeword-stabilized quantum codes", "cwsqec"};
    app.set_version_flag("--version", CWSQEC_VERSION);
    app.require_subcommand(1);

    auto code_flags = [&](CLI::App *s) {
        s->add_option("--code", opt.code_path, "Code file (default: built-in 9-qubit code)");
        s->add_option("--graph", opt.graph_path, "Graph file overriding the code's graph line");
    };
    auto common = [&](CLI::App *s) {
        s->add_flag("--pretty", opt.pretty, "Indent JSON and print a table to stderr");
        s->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    };

    CLI::App *verify = app.add_subcommand("verify", "Check the KL conditions through a weight");
    code_flags(verify);
    verify->add_option("--weight", opt.weight, "Largest error weight to scan")->check(CLI::NonNegativeNumber);

    CLI::App *dist = app.add_subcommand("distance", "Find the code distance");
    code_flags(dist);
    dist->add_option("--max", opt.max, "Largest weight to try")->check(CLI::NonNegativeNumber);

    CLI::App *patterns = app.add_subcommand("patterns", "List flip patterns of weight-2 errors");
    code_flags(patterns);

    CLI::App *proof = app.add_subcommand("proofcheck", "Pattern-based distance-3 certificate");
    code_flags(proof);

    CLI::App *projector = app.add_subcommand("projector", "Expand the code projector");
    code_flags(projector);

    CLI::App *enumerator = app.add_subcommand("enumerator", "Weight enumerator");
    code_flags(enumerator);
    enumerator->add_option("--method", opt.method, "brute, fast or both")
        ->check(CLI::IsMember({"brute", "fast", "both"}));

    CLI::App *statevec = app.add_subcommand("statevec", "Graph state amplitudes");
    statevec->add_option("--graph", opt.graph_path, "Graph file (default: 9-cycle)");

    CLI::App *search = app.add_subcommand("search", "Search for codeword sets");
    search->add_option("--graph", opt.graph_path, "Graph file (default: 9-cycle)");
    search->add_option("--distance", opt.target_distance, "Target distance")->check(CLI::Range(2, 64));
    search->add_option("--min-size", opt.min_size, "Required number of codewords")->check(CLI::PositiveNumber);
    search->add_option("--budget", opt.budget, "Time budget such as 60s, 500ms or 2m");
    search->add_option("--strategy", opt.strategy, "bb or greedy")->check(CLI::IsMember({"bb", "greedy"}));
    search->add_option("--out", opt.out_path, "Also write the found code to this file");
    search->add_flag("--stop-at-min-size", opt.stop_at_min_size, "Stop once min-size codewords are found");

    CLI::App *demo = app.add_subcommand("paper-demo", "Run every check on the built-in 9-qubit code");

    for (CLI::App *s : {verify, dist, patterns, proof, projector, enumerator, statevec, search, demo}) {
        common(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInputError;
    }

    CLI::App *sub = app.get_subcommands().front();
    Run run(sub->get_name(), opt, out, err);
    try {
        if (sub == verify) return cmd_verify(run, opt);
        if (sub == dist) return cmd_distance(run, opt);
        if (sub == patterns) return cmd_patterns(run, opt);
        if (sub == proof) return cmd_proofcheck(run, opt);
        if (sub == projector) return cmd_projector(run, opt);
        if (sub == enumerator) return cmd_enumerator(run, opt);
        if (sub == statevec) return cmd_statevec(run, opt);
        if (sub == search) return cmd_search(run, opt);
        return cmd_demo(run, opt, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace cwsqec
