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

#include "rendezvous/certify.h"

#include <stdexcept>

namespace rendezvous {
namespace {

// Ascending coefficients.
Polynomial P(std::initializer_list<int> c) {
  std::vector<Rational> r;
  for (int x : c) r.emplace_back(x);
  return Polynomial(std::move(r));
}

RationalFunction F(Polynomial num, Polynomial den) {
  return {std::move(num), std::move(den)};
}

std::vector<ClosedForm> MakeRegistry() {
  const Polynomial one = P({1});
  const Polynomial v1 = P({1, 1});         // v + 1
  const Polynomial v1sq = v1 * v1;
  const Polynomial v1cu = v1sq * v1;
  const Polynomial v3 = P({3, 1});         // v + 3
  const Polynomial w = P({1, 3});          // 3v + 1
  std::vector<ClosedForm> forms;

  forms.push_back({ClosedFormName::kExactLt,
                   std::nullopt,
                   {F(one, one), F(one, one), F(P({3, 1}), v1),
                    F(P({3, 8, 1}), v1sq)},
                   F(P({8, 16, 4}), v1sq),
                   Rational(1, 1000),
                   Rational(618, 1000)});
  forms.push_back({ClosedFormName::kExactGt,
                   std::nullopt,
                   {F(one, v1), F(P({1, 3}), v1sq), F(P({3, 5}), v1sq),
                    F(P({3, 14, 7}), v1cu)},
                   F(P({8, 28, 16}), v1cu),
                   Rational(619, 1000),
                   Rational(990, 1000)});
  forms.push_back({ClosedFormName::kMarkerSlow,
                   F(one, v3),
                   {F(P({3}), v3), F(P({3, 5}), v1 * v3),
                    F(P({9, 12, 7}), v1sq * v3), F(P({9, 35, 27, 9}), v1cu * v3)},
                   F(P({24, 76, 68, 24}), v1cu * v3),
                   Rational(17, 1000),
                   Rational(1)});
  forms.push_back({ClosedFormName::kMarkerFast,
                   F(one, w),
                   {F(P({3}), w), F(P({5, 3}), v1 * w), F(P({5, 9}), v1 * w),
                    F(P({7, 3}), v1sq)},
                   F(P({20, 52, 24}), v1sq * w),
                   Rational(807, 1000),
                   Rational(966, 1000)});
  return forms;
}

}  // namespace

Rational RationalFunction::operator()(const Rational& v) const {
  const Rational d = den(v);
  if (d.is_zero()) throw std::domain_error("denominator vanishes");
  return num(v) / d;
}

const char* ToString(ClosedFormName name) {
  switch (name) {
    case ClosedFormName::kExactLt: return "exact_lt";
    case ClosedFormName::kExactGt: return "exact_gt";
    case ClosedFormName::kMarkerSlow: return "marker_slow";
    case ClosedFormName::kMarkerFast: return "marker_fast";
  }
  return "?";
}

ClosedFormName ParseClosedFormName(const std::string& text) {
  for (const ClosedForm& f : ClosedForms()) {
    if (text == ToString(f.name)) return f.name;
  }
  throw std::invalid_argument("unknown closed form '" + text + "'");
}

std::span<const ClosedForm> ClosedForms() {
  static const std::vector<ClosedForm> registry = MakeRegistry();
  return registry;
}

const ClosedForm& GetClosedForm(ClosedFormName name) {
  for (const ClosedForm& f : ClosedForms()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("closed form not registered");
}

ClosedFormValue EvalClosedForm(ClosedFormName name, const Rational& v) {
  if (v < Rational(0) || v > Rational(1)) {
    throw std::invalid_argument("v must lie in [0, 1], got " + v.ToString());
  }
  const ClosedForm& f = GetClosedForm(name);
  ClosedFormValue out;
  if (f.z) out.z = (*f.z)(v);
  for (int i = 0; i < 4; ++i) out.t[i] = f.t[i](v);
  out.sum = f.sum(v);
  return out;
}

std::optional<ClosedFormName> MatchClosedForm(const Rational& v,
                                              const Rational& value) {
  for (const ClosedForm& f : ClosedForms()) {
    if (f.sum(v) == value) return f.name;
  }
  return std::nullopt;
}

std::vector<CertifiedInterval> Certify(const SweepTable& table) {
  std::vector<CertifiedInterval> out;
  const std::vector<SweepRow>& rows = table.rows;
  auto emit = [&](size_t a, size_t b) {
    if (b <= a) return;
    CertifiedInterval c;
    c.v_lo = rows[a].v;
    c.v_hi = rows[b].v;
    c.signature = rows[a].best.signature;
    c.strategy_id = rows[a].best.id;
    c.opt_lo = rows[a].opt;
    c.opt_hi = rows[b].opt;
    for (const ClosedForm& f : ClosedForms()) {
      bool all = true;
      for (size_t i = a; i <= b && all; ++i) all = f.sum(rows[i].v) == rows[i].opt;
      if (all) {
        c.closed_form = f.name;
        break;
      }
    }
    out.push_back(std::move(c));
  };
  size_t start = 0;
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    const bool ok = rows[i].opt < rows[i + 1].next_to_opt &&
                    rows[i].best.signature == rows[i + 1].best.signature;
    if (!ok) {
      emit(start, i);
      start = i + 1;
    }
  }
  if (!rows.empty()) emit(start, rows.size() - 1);
  return out;
}

Polynomial DifferenceNumerator(ClosedFormName a, ClosedFormName b) {
  const RationalFunction& fa = GetClosedForm(a).sum;
  const RationalFunction& fb = GetClosedForm(b).sum;
  return fa.num * fb.den - fb.num * fa.den;
}

Bracket Crossover(ClosedFormName a, ClosedFormName b, const Bracket& bracket,
                  const Rational& width) {
  const Polynomial p = DifferenceNumerator(a, b);
  if (p.is_zero()) {
    throw std::domain_error(std::string(ToString(a)) + " and " + ToString(b) +
                            " coincide; no sign change");
  }
  const Rational lo = p(bracket.lo);
  const Rational hi = p(bracket.hi);
  if ((lo > Rational(0) && hi > Rational(0)) ||
      (lo < Rational(0) && hi < Rational(0))) {
    throw std::domain_error("no sign change of " + std::string(ToString(a)) +
                            " - " + ToString(b) + " on [" +
                            bracket.lo.ToString() + ", " +
                            bracket.hi.ToString() + "]");
  }
  return IsolateRoot(p, bracket, width);
}

}  // namespace rendezvous
