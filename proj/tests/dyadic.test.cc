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

#include "cwsqec/dyadic.h"

#include <limits>

#include "gtest/gtest.h"

using namespace cwsqec;

TEST(dyadic, normalizes) {
    Dyadic a = Dyadic::from_parts(12, 9);
    ASSERT_EQ(a.numerator(), 3);
    ASSERT_EQ(a.denominator(), 128);
    ASSERT_EQ(a.str(), "3/128");
    ASSERT_EQ(Dyadic::from_parts(0, 7), Dyadic(0));
    ASSERT_EQ(Dyadic::from_parts(8, 3), Dyadic(1));
    ASSERT_EQ(Dyadic::from_parts(3, -2), Dyadic(12));
}

TEST(dyadic, arithmetic) {
    Dyadic half = Dyadic::from_parts(1, 1);
    Dyadic quarter = Dyadic::from_parts(1, 2);
    ASSERT_EQ(half + quarter, Dyadic::from_parts(3, 2));
    ASSERT_EQ(half - half, Dyadic(0));
    ASSERT_EQ(half * half, quarter);
    ASSERT_EQ(Dyadic(12).times_pow2(-9), Dyadic::from_parts(12, 9));
    ASSERT_EQ(Dyadic::from_parts(12, 9).times_pow2(9), Dyadic(12));
    ASSERT_TRUE(quarter < half);
    ASSERT_FALSE(half < quarter);
    ASSERT_EQ((-half).sign(), -1);
}

TEST(dyadic, overflow_throws) {
    Dyadic big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
    ASSERT_THROW(big * Dyadic(4), std::overflow_error);
    ASSERT_THROW(big + big, std::overflow_error);
}

TEST(complex_dyadic, units) {
    ComplexDyadic one(1);
    ASSERT_EQ(one.times_i_pow(1), ComplexDyadic(0, 1));
    ASSERT_EQ(one.times_i_pow(2), ComplexDyadic(-1));
    ASSERT_EQ(one.times_i_pow(-1), ComplexDyadic(0, -1));
    ASSERT_EQ(ComplexDyadic(0, 1) * ComplexDyadic(0, 1), ComplexDyadic(-1));
    ASSERT_EQ(ComplexDyadic(2, 3).conj(), ComplexDyadic(2, -3));
    ASSERT_EQ(ComplexDyadic::from_unit(UnitOrZero::power_of_i(3)), ComplexDyadic(0, -1));
    ASSERT_EQ(ComplexDyadic::from_unit(UnitOrZero::zero()), ComplexDyadic());
    ASSERT_EQ(ComplexDyadic(Dyadic::from_parts(1, 1), Dyadic(-1)).str(), "1/2-1/1i");
}
