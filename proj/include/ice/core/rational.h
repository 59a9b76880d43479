// Copyright 2026 The ICE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICE_CORE_RATIONAL_H_
#define ICE_CORE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace ice {

// Exact rational number backed by a normalized int64 fraction. Every
// arithmetic step is carried out in 128 bits and checked on the way back
// down; an unrepresentable result throws ice::OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Accepts "7", "-3/4", "1.25" (finite decimals are converted exactly).
  static Rational parse(std::string_view text);
  // Always "num/den", e.g. "3/2" or "1/1".
  std::string to_string() const;
  // "3/2" for fractions and "3" for integers.
  std::string to_short_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // Largest integer <= value, smallest integer >= value.
  int64_t floor() const;
  int64_t ceil() const;

 __extension__ using Wide = __int128;

 private:
  static Rational from_wide(Wide num, Wide den);

  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// gcd over the positive rationals: the largest g such that a/g and b/g are
// both integers. gcd(0, b) = b.
Rational rational_gcd(const Rational& a, const Rational& b);

// Smallest integer e such that base^e >= value (value > 0, base >= 2).
int ceil_log(const Rational& value, int64_t base);

// base^exponent for possibly negative exponents.
Rational rational_pow(int64_t base, int exponent);

}  // namespace ice

template <>
struct std::hash<ice::Rational> {
  std::size_t operator()(const ice::Rational& r) const noexcept {
    return std::hash<int64_t>()(r.num()) * 1000003u ^
           std::hash<int64_t>()(r.den());
  }
};

#endif  // ICE_CORE_RATIONAL_H_
