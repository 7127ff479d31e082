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

#ifndef CWSQEC_DYADIC_H
#define CWSQEC_DYADIC_H

#include <cstdint>
#include <string>

#include "cwsqec/pauli.h"

namespace cwsqec {

/// An exact rational num / 2^exp.
///
/// Always normalized: the numerator is odd, or the value is zero and stored
/// as 0 / 1. Arithmetic throws std::overflow_error instead of wrapping.
class Dyadic {
   public:
    constexpr Dyadic() = default;
    constexpr Dyadic(std::int64_t integer) : num_(integer) {  // NOLINT(google-explicit-constructor)
    }
    /// num / 2^exp with exp >= 0.
    static Dyadic from_parts(std::int64_t num, int exp);

    std::int64_t numerator() const {
        return num_;
    }
    /// Denominator is 2^exponent.
    int exponent() const {
        return exp_;
    }
    std::int64_t denominator() const {
        return std::int64_t{1} << exp_;
    }
    bool is_zero() const {
        return num_ == 0;
    }
    bool is_integer() const {
        return exp_ == 0;
    }
    int sign() const {
        return (num_ > 0) - (num_ < 0);
    }

    Dyadic operator-() const;
    Dyadic operator+(const Dyadic &other) const;
    Dyadic operator-(const Dyadic &other) const;
    Dyadic operator*(const Dyadic &other) const;
    Dyadic &operator+=(const Dyadic &other) {
        return *this = *this + other;
    }
    /// Exact multiplication by 2^k; k may be negative.
    Dyadic times_pow2(int k) const;

    bool operator==(const Dyadic &other) const = default;
    bool operator<(const Dyadic &other) const;

    /// "num/den", with "/1" kept for integers so the format is uniform.
    std::string str() const;

   private:
    void normalize();

    std::int64_t num_ = 0;
    int exp_ = 0;
};

/// re + i*im with dyadic parts.
struct ComplexDyadic {
    Dyadic re;
    Dyadic im;

    constexpr ComplexDyadic() = default;
    constexpr ComplexDyadic(Dyadic real) : re(real) {  // NOLINT(google-explicit-constructor)
    }
    constexpr ComplexDyadic(std::int64_t real) : re(real) {  // NOLINT(google-explicit-constructor)
    }
    ComplexDyadic(Dyadic real, Dyadic imag) : re(real), im(imag) {
    }

    /// 0, 1, i, -1 or -i.
    static ComplexDyadic from_unit(UnitOrZero u);

    bool is_zero() const {
        return re.is_zero() && im.is_zero();
    }
    bool is_real() const {
        return im.is_zero();
    }
    ComplexDyadic conj() const {
        return {re, -im};
    }
    /// Multiplies by i^k.
    ComplexDyadic times_i_pow(int k) const;

    ComplexDyadic operator-() const {
        return {-re, -im};
    }
    ComplexDyadic operator+(const ComplexDyadic &o) const {
        return {re + o.re, im + o.im};
    }
    ComplexDyadic operator-(const ComplexDyadic &o) const {
        return {re - o.re, im - o.im};
    }
    ComplexDyadic operator*(const ComplexDyadic &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexDyadic &operator+=(const ComplexDyadic &o) {
        return *this = *this + o;
    }

    bool operator==(const ComplexDyadic &other) const = default;

    /// "3/512" for reals, "0/1+1/2i" style otherwise.
    std::string str() const;
};

}  // namespace cwsqec

#endif
