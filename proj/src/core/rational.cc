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

#include "ice/core/rational.h"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "ice/core/errors.h"

namespace ice {
namespace {

using i128 = Rational::Wide;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

int64_t parse_int(std::string_view s, std::string_view whole) {
  int64_t value = 0;
  if (s.empty()) throw DomainError("empty number in '" + std::string(whole) + "'");
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) {
    throw OverflowError("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<int64_t>(num);
  r.den_ = static_cast<int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text),
                    parse_int(text.substr(slash + 1), text));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 18) throw DomainError("too many decimals: " + std::string(text));
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    const int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    const int64_t fraction = frac.empty() ? 0 : parse_int(frac, text);
    if (whole < 0 || fraction < 0) throw DomainError("bad decimal: " + std::string(text));
    int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(whole) + Rational(fraction, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_short_string() const {
  return den_ == 1 ? std::to_string(num_) : to_string();
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = from_wide(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int64_t Rational::floor() const {
  int64_t q = num_ / den_;
  if ((num_ % den_ != 0) && (num_ < 0)) --q;
  return q;
}

int64_t Rational::ceil() const {
  int64_t q = num_ / den_;
  if ((num_ % den_ != 0) && (num_ > 0)) ++q;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_short_string();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b < Rational(0) ? -b : b;
  if (b.is_zero()) return a < Rational(0) ? -a : a;
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s), then normalized.
  const i128 num = gcd128(static_cast<i128>(a.num()) * b.den(),
                          static_cast<i128>(b.num()) * a.den());
  const i128 den = static_cast<i128>(a.den()) * b.den();
  const i128 g = gcd128(num, den);
  const i128 n = num / g;
  const i128 d = den / g;
  if (!fits64(n) || !fits64(d)) throw OverflowError("rational gcd overflow");
  return Rational(static_cast<int64_t>(n), static_cast<int64_t>(d));
}

Rational rational_pow(int64_t base, int exponent) {
  Rational r(1);
  const Rational b(base);
  for (int i = 0; i < std::abs(exponent); ++i) r *= b;
  return exponent >= 0 ? r : Rational(1) / r;
}

int ceil_log(const Rational& value, int64_t base) {
  if (value <= Rational(0)) throw DomainError("ceil_log of a non-positive value");
  if (base < 2) throw DomainError("ceil_log base must be >= 2");
  int e = 0;
  Rational p(1);
  const Rational b(base);
  if (p >= value) {
    // Walk down while base^(e-1) still reaches value.
    while (true) {
      const Rational lower = p / b;
      if (lower < value) return e;
      p = lower;
      --e;
    }
  }
  while (p < value) {
    p *= b;
    ++e;
  }
  return e;
}

}  // namespace ice
