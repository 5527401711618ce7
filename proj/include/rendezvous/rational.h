// Copyright 2026 The rdvlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RENDEZVOUS_RATIONAL_H_
#define RENDEZVOUS_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rendezvous {

// Raised on division by zero and on malformed rational text.
class RationalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact fraction in canonical form (den > 0, gcd(|num|, den) = 1, zero is
// 0/1). Values whose numerator and denominator fit in 64 bits are stored
// inline and use overflow-checked 128-bit arithmetic; anything larger moves
// to a shared, immutable GMP rational. A value is stored big iff it does not
// fit the inline form, so equality never has to compare across forms.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(runtime/explicit)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  // Accepts "p", "p/q", and decimal forms such as "-0.618" or "1e-3".
  static Rational Parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  // Canonical numerator/denominator as GMP integers (always valid).
  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  // "p/q", or "p" when the denominator is one.
  std::string ToString() const;
  // Decimal rendering with the given number of significant digits,
  // rounded half away from zero, trailing zeros stripped.
  std::string ToDecimal(int significant_digits = 12) const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  size_t Hash() const;

 private:
  static Rational FromMpq(mpq_class q);
  static Rational FromWide(__int128 n, __int128 d);  // d > 0, canonical

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace rendezvous

template <>
struct std::hash<rendezvous::Rational> {
  size_t operator()(const rendezvous::Rational& r) const { return r.Hash(); }
};

#endif  // RENDEZVOUS_RATIONAL_H_
