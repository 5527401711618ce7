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

#include "rendezvous/polynomial.h"

#include <algorithm>
#include <utility>

namespace rendezvous {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  Trim();
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::ToString(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[d];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (!unit || d == 0) out += mag.ToString();
    if (d >= 1) {
      if (!unit) out += "*";
      out += var;
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

Bracket IsolateRoot(const Polynomial& p, Bracket bracket,
                    const Rational& width) {
  if (p.is_zero()) throw RationalError("root isolation of zero polynomial");
  if (bracket.hi < bracket.lo) throw RationalError("inverted bracket");
  if (width.sign() <= 0) throw RationalError("bracket width must be > 0");
  const int slo = p(bracket.lo).sign();
  const int shi = p(bracket.hi).sign();
  if (slo == 0) return {bracket.lo, bracket.lo};
  if (shi == 0) return {bracket.hi, bracket.hi};
  if (slo == shi) {
    throw RationalError("polynomial has the same sign at both bracket ends");
  }
  const Rational half(1, 2);
  while (bracket.width() > width) {
    const Rational mid = (bracket.lo + bracket.hi) * half;
    const int sm = p(mid).sign();
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      bracket.lo = mid;
    } else {
      bracket.hi = mid;
    }
  }
  return bracket;
}

}  // namespace rendezvous
