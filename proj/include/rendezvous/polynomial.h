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

#ifndef RENDEZVOUS_POLYNOMIAL_H_
#define RENDEZVOUS_POLYNOMIAL_H_

#include <span>
#include <string>
#include <vector>

#include "rendezvous/rational.h"

namespace rendezvous {

// Dense polynomial with rational coefficients in ascending degree order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Human-readable form in the variable `var`, highest degree first.
  std::string ToString(const std::string& var = "v") const;

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

struct Bracket {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  bool Contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Shrinks [lo, hi] by exact bisection until it is at most `width` wide while
// still containing a sign change of `p` (or an exact root, in which case the
// bracket collapses to that point). Throws RationalError if p is zero, if
// lo > hi, if width <= 0, or if p has the same strict sign at both ends.
Bracket IsolateRoot(const Polynomial& p, Bracket bracket,
                    const Rational& width);

inline Bracket IsolateRoot(std::span<const Rational> coeffs, Bracket bracket,
                           const Rational& width) {
  return IsolateRoot(Polynomial({coeffs.begin(), coeffs.end()}), bracket,
                     width);
}

}  // namespace rendezvous

#endif  // RENDEZVOUS_POLYNOMIAL_H_
