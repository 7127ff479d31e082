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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cwsqec {

namespace {

constexpr int kMaxExponent = 62;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    return r;
}

std::int64_t shift_up(std::int64_t a, int k) {
    if (k == 0) {
        return a;
    }
    if (k >= 63) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    return checked_mul(a, std::int64_t{1} << k);
}

}  // namespace

Dyadic Dyadic::from_parts(std::int64_t num, int exp) {
    Dyadic d;
    d.num_ = num;
    d.exp_ = exp;
    if (exp < 0) {
        d.num_ = shift_up(num, -exp);
        d.exp_ = 0;
    }
    d.normalize();
    return d;
}

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    int tz = std::min(std::countr_zero(static_cast<std::uint64_t>(num_)), exp_);
    num_ >>= tz;
    exp_ -= tz;
    if (exp_ > kMaxExponent) {
        throw std::overflow_error("dyadic denominator overflow");
    }
}

Dyadic Dyadic::operator-() const {
    Dyadic d = *this;
    d.num_ = checked_mul(num_, -1);
    return d;
}

Dyadic Dyadic::operator+(const Dyadic &other) const {
    int e = std::max(exp_, other.exp_);
    return from_parts(checked_add(shift_up(num_, e - exp_), shift_up(other.num_, e - other.exp_)), e);
}

Dyadic Dyadic::operator-(const Dyadic &other) const {
    return *this + (-other);
}

Dyadic Dyadic::operator*(const Dyadic &other) const {
    return from_parts(checked_mul(num_, other.num_), exp_ + other.exp_);
}

Dyadic Dyadic::times_pow2(int k) const {
    return from_parts(num_, exp_ - k);
}

bool Dyadic::operator<(const Dyadic &other) const {
    return (*this - other).num_ < 0;
}

std::string Dyadic::str() const {
    return std::to_string(num_) + "/" + std::to_string(denominator());
}

ComplexDyadic ComplexDyadic::from_unit(UnitOrZero u) {
    if (u.is_zero()) {
        return {};
    }
    return ComplexDyadic(1).times_i_pow(u.exponent());
}

ComplexDyadic ComplexDyadic::times_i_pow(int k) const {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return *this;
        case 1:
            return {-im, re};
        case 2:
            return {-re, -im};
        default:
            return {im, -re};
    }
}

std::string ComplexDyadic::str() const {
    if (is_real()) {
        return re.str();
    }
    std::string out = re.str();
    if (im.sign() >= 0) {
        out += '+';
    }
    return out + im.str() + "i";
}

}  // namespace cwsqec
