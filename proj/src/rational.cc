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

#include "rendezvous/rational.h"

#include <cctype>
#include <limits>
#include <ostream>

namespace rendezvous {
namespace {

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool FitsSmall(__int128 v) { return v <= kMax && v >= -kMax; }

uint64_t Gcd64(uint64_t a, uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

uint64_t UAbs(int64_t v) {
  return v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v);
}

unsigned __int128 UAbs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1
               : static_cast<unsigned __int128>(v);
}

// gcd(|n|, g) for a 128-bit n and a 64-bit g > 0.
uint64_t GcdWide(__int128 n, uint64_t g) {
  const auto r = static_cast<uint64_t>(UAbs128(n) % g);
  return Gcd64(r, g);
}

mpz_class WideToMpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = UAbs128(v);
  const auto hi = static_cast<uint64_t>(u >> 64);
  const auto lo = static_cast<uint64_t>(u);
  mpz_class r = mpz_class(static_cast<unsigned long>(hi));  // NOLINT
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(lo));  // NOLINT
  return neg ? mpz_class(-r) : r;
}

mpz_class Int64ToMpz(int64_t v) { return mpz_class(static_cast<long>(v)); }  // NOLINT

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw RationalError("rational with zero denominator");
  __int128 nn = n;
  __int128 dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  const uint64_t g = GcdWide(nn, static_cast<uint64_t>(dd));
  *this = FromWide(nn / g, dd / g);
}

Rational::Rational(const mpq_class& q) { *this = FromMpq(q); }

Rational Rational::FromWide(__int128 n, __int128 d) {
  Rational r;
  if (FitsSmall(n) && d <= kMax) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  mpq_class q(WideToMpz(n), WideToMpz(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::FromMpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() &&
      n.get_si() != std::numeric_limits<long>::min()) {  // NOLINT
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? big_->get_num() : Int64ToMpz(num_);
}

mpz_class Rational::denominator() const {
  return big_ ? big_->get_den() : Int64ToMpz(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(Int64ToMpz(num_), Int64ToMpz(den_));
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  if (big_) return FromMpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw RationalError("division by zero");
  if (big_) return FromMpq(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::FromMpq(a.to_mpq() + b.to_mpq());
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  if (a.den_ == b.den_) {
    const __int128 n = static_cast<__int128>(a.num_) + b.num_;
    const uint64_t g = GcdWide(n, static_cast<uint64_t>(a.den_));
    return Rational::FromWide(n / g, static_cast<__int128>(a.den_) / g);
  }
  const uint64_t g = Gcd64(a.den_, b.den_);
  if (g == 1) {
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
    return Rational::FromWide(n, static_cast<__int128>(a.den_) * b.den_);
  }
  const int64_t ad = a.den_ / static_cast<int64_t>(g);
  const int64_t bd = b.den_ / static_cast<int64_t>(g);
  const __int128 t = static_cast<__int128>(a.num_) * bd +
                     static_cast<__int128>(b.num_) * ad;
  const uint64_t g2 = GcdWide(t, g);
  return Rational::FromWide(t / g2, static_cast<__int128>(ad) *
                                        (b.den_ / static_cast<int64_t>(g2)));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::FromMpq(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  const auto g1 = static_cast<int64_t>(Gcd64(UAbs(a.num_), b.den_));
  const auto g2 = static_cast<int64_t>(Gcd64(UAbs(b.num_), a.den_));
  const __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
  const __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
  return Rational::FromWide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

size_t Rational::Hash() const {
  if (big_) {
    return std::hash<std::string>()(big_->get_str());
  }
  const uint64_t h = static_cast<uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
  return static_cast<size_t>(h ^ (static_cast<uint64_t>(den_) + (h << 6) + (h >> 2)));
}

std::string Rational::ToString() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToDecimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";
  const mpz_class num = ::abs(numerator());
  const mpz_class den = denominator();

  // exponent = floor(log10(|x|)), estimated from digit counts then fixed up.
  long exponent = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -  // NOLINT
                  static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));    // NOLINT
  auto pow10 = [](long e) {  // NOLINT
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));  // NOLINT
    return p;
  };
  // |x| >= 10^e  <=>  num * 10^-e >= den
  auto at_least = [&](long e) {  // NOLINT
    if (e >= 0) return num >= den * pow10(e);
    return num * pow10(-e) >= den;
  };
  while (!at_least(exponent)) --exponent;
  while (at_least(exponent + 1)) ++exponent;

  mpz_class digits;
  for (;;) {
    const long shift = significant_digits - 1 - exponent;  // NOLINT
    mpz_class n = num;
    mpz_class d = den;
    if (shift >= 0) {
      n *= pow10(shift);
    } else {
      d *= pow10(-shift);
    }
    // round half away from zero: floor((2n + d) / 2d)
    digits = (2 * n + d) / (2 * d);
    if (digits == pow10(significant_digits)) {
      ++exponent;
      continue;
    }
    break;
  }

  std::string s = digits.get_str();
  std::string out;
  if (exponent >= -5 && exponent < significant_digits) {
    if (exponent >= 0) {
      out = s.substr(0, exponent + 1);
      std::string frac = s.substr(exponent + 1);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    } else {
      std::string frac = std::string(-exponent - 1, '0') + s;
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out = "0." + frac;
    }
  } else {
    std::string frac = s.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = s.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += (exponent < 0 ? "e-" : "e+");
    const long e = exponent < 0 ? -exponent : exponent;  // NOLINT
    if (e < 10) out += "0";
    out += std::to_string(e);
  }
  return sign() < 0 ? "-" + out : out;
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw RationalError("malformed rational: '" + std::string(text) + "'");
  };
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  const std::string_view t = text.substr(i, j - i);
  if (t.empty()) return fail();

  const size_t slash = t.find('/');
  if (slash != std::string_view::npos) {
    const std::string_view ns = t.substr(0, slash);
    const std::string_view ds = t.substr(slash + 1);
    auto integral = [](std::string_view s) {
      size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (k == s.size()) return false;
      for (; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
      }
      return true;
    };
    if (!integral(ns) || !integral(ds)) return fail();
    mpz_class n(std::string(ns[0] == '+' ? ns.substr(1) : ns), 10);
    mpz_class d(std::string(ds[0] == '+' ? ds.substr(1) : ds), 10);
    if (d == 0) throw RationalError("rational with zero denominator");
    return FromMpq(mpq_class(n, d));
  }

  size_t k = 0;
  bool negative = false;
  if (t[k] == '-' || t[k] == '+') {
    negative = t[k] == '-';
    ++k;
  }
  std::string mantissa;
  long frac_digits = 0;  // NOLINT
  bool seen_point = false;
  bool seen_digit = false;
  for (; k < t.size(); ++k) {
    const char c = t[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail();
  long exponent = 0;  // NOLINT
  if (k < t.size()) {
    if (t[k] != 'e' && t[k] != 'E') return fail();
    ++k;
    bool eneg = false;
    if (k < t.size() && (t[k] == '-' || t[k] == '+')) {
      eneg = t[k] == '-';
      ++k;
    }
    if (k == t.size()) return fail();
    for (; k < t.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return fail();
      exponent = exponent * 10 + (t[k] - '0');
      if (exponent > 100000) return fail();
    }
    if (eneg) exponent = -exponent;
  }
  mpz_class n(mantissa, 10);
  if (negative) n = -n;
  const long e = exponent - frac_digits;  // NOLINT
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));  // NOLINT
  if (e >= 0) return FromMpq(mpq_class(n * p));
  return FromMpq(mpq_class(n, p));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace rendezvous
