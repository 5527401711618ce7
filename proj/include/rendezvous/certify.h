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

// Known closed-form optima, matching them against sweep tables, and interval
// certification over a grid.

#ifndef RENDEZVOUS_CERTIFY_H_
#define RENDEZVOUS_CERTIFY_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rendezvous/polynomial.h"
#include "rendezvous/rational.h"
#include "rendezvous/sweep.h"

namespace rendezvous {

struct RationalFunction {
  Polynomial num;
  Polynomial den;

  // Throws std::domain_error when the denominator vanishes at v.
  Rational operator()(const Rational& v) const;
};

enum class ClosedFormName { kExactLt, kExactGt, kMarkerSlow, kMarkerFast };

const char* ToString(ClosedFormName name);
// Accepts "exact_lt", "exact_gt", "marker_slow", "marker_fast".
ClosedFormName ParseClosedFormName(const std::string& text);

// Rendezvous times and their sum as rational functions of v. Values are
// sums of the four times, not averages.
struct ClosedForm {
  ClosedFormName name;
  std::optional<RationalFunction> z;  // drop time, marker forms only
  std::array<RationalFunction, 4> t;
  RationalFunction sum;
  Rational valid_lo;  // interval over which the form is claimed optimal
  Rational valid_hi;
};

std::span<const ClosedForm> ClosedForms();
const ClosedForm& GetClosedForm(ClosedFormName name);

struct ClosedFormValue {
  std::optional<Rational> z;
  std::array<Rational, 4> t;
  Rational sum;
};

// Throws std::invalid_argument for v outside [0, 1].
ClosedFormValue EvalClosedForm(ClosedFormName name, const Rational& v);

struct CertifiedInterval {
  Rational v_lo;
  Rational v_hi;
  std::string signature;
  std::string strategy_id;  // optimal assignment at v_lo
  std::optional<ClosedFormName> closed_form;
  Rational opt_lo;  // opt at v_lo
  Rational opt_hi;  // opt at v_hi
};

// Maximal runs of grid rows in which every consecutive pair satisfies
// opt(v) < next_to_opt(v + dv) with equal optimal signatures. Runs of a single
// row certify nothing and are dropped. Each run carries the first closed form
// (registry order) that equals opt exactly at every row of the run.
std::vector<CertifiedInterval> Certify(const SweepTable& table);

// Closed form whose sum equals `value` at v, if any (registry order).
std::optional<ClosedFormName> MatchClosedForm(const Rational& v,
                                              const Rational& value);

// Numerator of sum(a) - sum(b) over the common denominator.
Polynomial DifferenceNumerator(ClosedFormName a, ClosedFormName b);

// Encloses the point in `bracket` where the two sum curves cross, by exact
// bisection to the given width. Throws std::domain_error when the difference
// does not change sign on the bracket.
Bracket Crossover(ClosedFormName a, ClosedFormName b, const Bracket& bracket,
                  const Rational& width);

}  // namespace rendezvous

#endif  // RENDEZVOUS_CERTIFY_H_
