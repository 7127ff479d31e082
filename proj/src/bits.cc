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

#include "cwsqec/bits.h"

namespace cwsqec {

std::vector<int> members(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

std::string set_str(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int a : members(m)) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(a);
    }
    out += '}';
    return out;
}

std::string codeword_str(Mask m) {
    if (m == 0) {
        return "-";
    }
    std::string out;
    for (int a : members(m)) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(a);
    }
    return out;
}

}  // namespace cwsqec
