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


#ifndef CWSQEC_CLI_H
#define CWSQEC_CLI_H

#include <chrono>
#include <ostream>
#include <string>
#include <string_view>

namespace cwsqec {

/// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the command-line tool. The JSON report goes to `out`,
/// diagnostics and `--pretty` tables to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// "60s", "500ms", "2m" or a bare number of seconds; throws
/// std::invalid_argument otherwise.
std::chrono::milliseconds parse_budget(std::string_view text);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace cwsqec

#endif
