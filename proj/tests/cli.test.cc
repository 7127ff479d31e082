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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "cwsqec/io.h"
#include "json.hpp"

using namespace cwsqec;
using json = nlohmann::json;

namespace {

const std::filesystem::path kData = CWSQEC_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
    json report() const {
        return json::parse(out);
    }
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "cwsqec");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
   public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("cwsqec_cli_" + std::to_string(counter_++))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::filesystem::remove_all(path_);
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path_ / name) << text;
        return (path_ / name).string();
    }
    std::filesystem::path path() const {
        return path_;
    }

   private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

std::string code_file() {
    return (kData / "code_9_12_3.code").string();
}

}  // namespace

TEST(cli, report_schema) {
    Result r = run({"verify", "--code", code_file()});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = r.report();
    for (const char *key : {"tool", "version", "subcommand", "inputs", "verdict", "exit_code", "timing"}) {
        ASSERT_TRUE(j.contains(key)) << key;
    }
    ASSERT_EQ(j["tool"], "cwsqec");
    ASSERT_EQ(j["subcommand"], "verify");
    ASSERT_EQ(j["inputs"]["files"].size(), 2u);
    std::string text = read_text_file(code_file());
    ASSERT_EQ(j["inputs"]["files"][0]["sha256"], sha256_hex(text));
}

TEST(cli, verify_code_file) {
    json v = run({"verify", "--code", code_file(), "--weight", "2"}).report()["verdict"];
    ASSERT_EQ(v["passed"], true);
    ASSERT_EQ(v["pure"], true);
    ASSERT_EQ(v["checked_weight"], 2);
    ASSERT_TRUE(v["violations"].empty());
    ASSERT_EQ(v["counts"]["errors_checked"], 351);
    ASSERT_EQ(v["counts"]["elements_checked"], 351 * 144);
}

TEST(cli, verify_builtin_matches_file) {
    json a = run({"verify"}).report()["verdict"];
    json b = run({"verify", "--code", code_file()}).report()["verdict"];
    ASSERT_EQ(a, b);
}

TEST(cli, verify_failure_exit_1) {
    Result r = run({"verify", "--code", code_file(), "--weight", "3"});
    ASSERT_EQ(r.code, 1);
    json v = r.report()["verdict"];
    ASSERT_EQ(v["passed"], false);
    ASSERT_FALSE(v["violations"].empty());
    ASSERT_EQ(r.report()["exit_code"], 1);
}

TEST(cli, verify_threads_do_not_change_report) {
    json a = run({"verify", "--weight", "3", "--threads", "1"}).report()["verdict"];
    json b = run({"verify", "--weight", "3", "--threads", "4"}).report()["verdict"];
    ASSERT_EQ(a, b);
}

TEST(cli, duplicate_codeword_exit_2) {
    TempDir dir;
    std::string path = dir.write("dup.code", "graph loop 9\n-\n2,6,7\n4,5,9\n2,6,7\n");
    Result r = run({"verify", "--code", path});
    ASSERT_EQ(r.code, 2);
    ASSERT_NE(r.err.find("duplicate codeword {2,6,7}"), std::string::npos) << r.err;
    ASSERT_NE(r.err.find(":5:1:"), std::string::npos) << r.err;
    ASSERT_TRUE(r.out.empty());
}

TEST(cli, input_errors_exit_2) {
    TempDir dir;
    ASSERT_EQ(run({"verify", "--code", (dir.path() / "missing.code").string()}).code, 2);
    std::string loop = dir.write("loop.graph", "n 9\n5 5\n");
    Result r = run({"statevec", "--graph", loop});
    ASSERT_EQ(r.code, 2);
    ASSERT_NE(r.err.find("self-loop"), std::string::npos);
    ASSERT_EQ(run({}).code, 2);
    ASSERT_EQ(run({"frobnicate"}).code, 2);
    ASSERT_EQ(run({"verify", "--weight", "x"}).code, 2);
    ASSERT_EQ(run({"verify", "--weight", "10"}).code, 2);
    ASSERT_EQ(run({"verify", "--threads", "0"}).code, 2);
    ASSERT_EQ(run({"enumerator", "--method", "slow"}).code, 2);
    ASSERT_EQ(run({"search", "--budget", "soon"}).code, 2);
    ASSERT_EQ(run({"search", "--strategy", "anneal"}).code, 2);
}

TEST(cli, help_and_version) {
    Result h = run({"--help"});
    ASSERT_EQ(h.code, 0);
    ASSERT_NE(h.out.find("paper-demo"), std::string::npos);
    Result v = run({"--version"});
    ASSERT_EQ(v.code, 0);
    ASSERT_NE(v.out.find("1.0.0"), std::string::npos);
}

TEST(cli, distance) {
    json v = run({"distance", "--code", code_file(), "--max", "4"}).report()["verdict"];
    ASSERT_EQ(v["distance"], 3);
    ASSERT_EQ(v["passed"], true);
    ASSERT_FALSE(v["violations"].empty());

    Result r = run({"distance", "--max", "2"});
    ASSERT_EQ(r.code, 1);
    ASSERT_TRUE(r.report()["verdict"]["distance"].is_null());
}

TEST(cli, patterns) {
    json v = run({"patterns", "--graph", (kData / "loop9.graph").string()}).report()["verdict"];
    ASSERT_EQ(v["counts"]["patterns"], 243);
    ASSERT_EQ(v["counts"]["size_1"], 9);
    ASSERT_EQ(v["counts"]["size_6"], 18);
    ASSERT_EQ(v["tagged"], true);
    ASSERT_EQ(v["contains_empty"], false);
}

TEST(cli, proofcheck) {
    Result ok = run({"proofcheck", "--code", code_file()});
    ASSERT_EQ(ok.code, 0);
    json v = ok.report()["verdict"];
    ASSERT_EQ(v["counts"]["reduced_transitions"], 31);
    ASSERT_EQ(v["agrees_with_kl"], true);

    TempDir dir;
    Result bad = run({"proofcheck", "--code", dir.write("bad.code", "graph loop 9\n-\n1\n")});
    ASSERT_EQ(bad.code, 1);
    ASSERT_EQ(bad.report()["verdict"]["agrees_with_kl"], true);
    ASSERT_EQ(bad.report()["verdict"]["violations"], json::array({"{1}"}));
}

TEST(cli, projector) {
    Result r = run({"projector"});
    ASSERT_EQ(r.code, 0);
    json v = r.report()["verdict"];
    ASSERT_EQ(v["term_count"], 176);
    ASSERT_EQ(v["terms"][0], "3/128 I");
    ASSERT_EQ(v["trace"], "12/1");
    ASSERT_EQ(v["idempotent"], true);
    ASSERT_EQ(v["hermitian"], true);
    ASSERT_EQ(v["equals_codeword_projector"], true);

    json f = run({"projector", "--code", code_file()}).report()["verdict"];
    ASSERT_EQ(f["terms"], v["terms"]);
}

TEST(cli, enumerator) {
    json v = run({"enumerator", "--method", "both"}).report()["verdict"];
    std::vector<int> expected = {144, 0, 0, 0, 96, 0, 1536, 3072, 1296, 0};
    ASSERT_EQ(v["brute"], json(expected));
    ASSERT_EQ(v["fast"], json(expected));
    ASSERT_EQ(v["agree"], true);
    ASSERT_EQ(v["total"], 6144);
    ASSERT_EQ(run({"enumerator", "--method", "fast"}).report()["verdict"]["a"], json(expected));
}

TEST(cli, statevec) {
    TempDir dir;
    json v = run({"statevec", "--graph", dir.write("tri.graph", "n 3\n1 2\n2 3\n1 3\n")}).report()["verdict"];
    std::vector<std::string> expected = {"+1/√8", "+1/√8", "+1/√8", "-1/√8",
                                         "+1/√8", "-1/√8", "-1/√8", "-1/√8"};
    ASSERT_EQ(v["amplitudes"], json(expected));
    json loop9 = run({"statevec"}).report()["verdict"];
    ASSERT_EQ(loop9["amplitudes"].size(), 512u);
    ASSERT_EQ(loop9["amplitudes"][0], "+1/√512");
}

TEST(cli, search_writes_loadable_code) {
    TempDir dir;
    std::string out = (dir.path() / "found.code").string();
    Result r = run({"search", "--graph", (kData / "loop9.graph").string(), "--distance", "3", "--min-size", "12",
                    "--budget", "60s", "--strategy", "bb", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    json v = r.report()["verdict"];
    ASSERT_EQ(v["size"], 12);
    ASSERT_EQ(v["certified"], true);
    ASSERT_EQ(v["code_file"], read_text_file(out));
    Result check = run({"verify", "--code", out, "--weight", "2"});
    ASSERT_EQ(check.code, 0);
}

TEST(cli, search_non_loop_graph_references_file) {
    TempDir dir;
    std::string graph = dir.write("path.graph", "n 4\n1 2\n2 3\n3 4\n");
    std::string out = (dir.path() / "found.code").string();
    Result r = run({"search", "--graph", graph, "--distance", "2", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(load_code(out).graph(), load_graph(graph));
}

TEST(cli, search_unreachable_min_size_exit_1) {
    Result r = run({"search", "--strategy", "greedy", "--min-size", "13"});
    ASSERT_EQ(r.code, 1);
    ASSERT_EQ(r.report()["verdict"]["reached_min_size"], false);
}

TEST(cli, paper_demo) {
    Result r = run({"paper-demo", "--pretty"});
    ASSERT_EQ(r.code, 0);
    json v = r.report()["verdict"];
    ASSERT_EQ(v["checks"].size(), 6u);
    for (const auto &c : v["checks"]) {
        ASSERT_EQ(c["passed"], true) << c["name"];
    }
    ASSERT_NE(r.err.find("PASS  weight enumerator"), std::string::npos) << r.err;
}

TEST(cli, budget_parsing) {
    ASSERT_EQ(parse_budget("60s"), std::chrono::seconds(60));
    ASSERT_EQ(parse_budget("500ms"), std::chrono::milliseconds(500));
    ASSERT_EQ(parse_budget("2m"), std::chrono::minutes(2));
    ASSERT_EQ(parse_budget("7"), std::chrono::seconds(7));
    ASSERT_THROW(parse_budget("s"), std::invalid_argument);
    ASSERT_THROW(parse_budget("5h"), std::invalid_argument);
    ASSERT_THROW(parse_budget("-1s"), std::invalid_argument);
}

TEST(cli, sha256) {
    ASSERT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    ASSERT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
