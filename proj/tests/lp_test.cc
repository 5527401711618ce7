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

#include "rendezvous/lp.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace rendezvous {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

TEST(LpTest, SmallKnownOptimum) {
  // min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6, x, y >= 0  ->  (8/5, 6/5)
  LinearProgram lp;
  const int x = lp.AddVariable("x");
  const int y = lp.AddVariable("y");
  lp.AddLessEqual({{x, 1}, {y, 2}}, 4);
  lp.AddLessEqual({{x, 3}, {y, 1}}, 6);
  lp.SetObjective({{x, -1}, {y, -1}});
  const LpResult r = Solve(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.primal[x], Rational(8, 5));
  EXPECT_EQ(r.primal[y], Rational(6, 5));
  EXPECT_EQ(r.objective, Rational(-14, 5));
  EXPECT_TRUE(VerifyOptimality(lp, r));
}

TEST(LpTest, EqualitiesFreeAndBoundedVariables) {
  // min x + y  s.t.  x - y = 3, y free, -2 <= x <= 5  ->  x = -2, y = -5
  LinearProgram lp;
  const int x = lp.AddVariable("x", Rational(-2), Rational(5));
  const int y = lp.AddVariable("y", std::nullopt);
  lp.AddEquality({{x, 1}, {y, -1}}, 3);
  lp.SetObjective({{x, 1}, {y, 1}});
  const LpResult r = Solve(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.primal[x], Rational(-2));
  EXPECT_EQ(r.primal[y], Rational(-5));
  EXPECT_TRUE(VerifyOptimality(lp, r));
}

TEST(LpTest, UpperOnlyVariable) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", std::nullopt, Rational(3));
  lp.AddGreaterEqual({{x, 1}}, -1);
  lp.SetObjective({{x, -2}});
  const LpResult r = Solve(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.primal[x], Rational(3));
  EXPECT_TRUE(VerifyOptimality(lp, r));
}

TEST(LpTest, InfeasibleAndUnbounded) {
  LinearProgram inf;
  const int x = inf.AddVariable("x");
  inf.AddLessEqual({{x, 1}}, -1);
  inf.SetObjective({{x, 1}});
  EXPECT_EQ(Solve(inf).status, LpStatus::kInfeasible);

  LinearProgram unb;
  const int u = unb.AddVariable("u");
  unb.AddGreaterEqual({{u, 1}}, 1);
  unb.SetObjective({{u, -1}});
  EXPECT_EQ(Solve(unb).status, LpStatus::kUnbounded);
}

TEST(LpTest, DegenerateCycleProneProgram) {
  // Beale's example cycles under the textbook largest-coefficient rule.
  LinearProgram lp;
  std::vector<int> v;
  for (int i = 0; i < 4; ++i) v.push_back(lp.AddVariable("x" + std::to_string(i)));
  lp.AddLessEqual({{v[0], Rational(1, 4)}, {v[1], -8}, {v[2], -1}, {v[3], 9}}, 0);
  lp.AddLessEqual({{v[0], Rational(1, 2)}, {v[1], -12}, {v[2], Rational(-1, 2)}, {v[3], 3}}, 0);
  lp.AddLessEqual({{v[2], 1}}, 1);
  lp.SetObjective({{v[0], Rational(-3, 4)}, {v[1], 20}, {v[2], Rational(-1, 2)}, {v[3], 6}});
  const LpResult r = Solve(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, Rational(-5, 4));
  EXPECT_TRUE(VerifyOptimality(lp, r));
}

TEST(LpTest, ValidateRejectsMalformed) {
  LinearProgram lp;
  lp.AddVariable("x", Rational(2), Rational(1));
  lp.SetObjective({{0, 1}});
  EXPECT_THROW(Solve(lp), LpError);
  LinearProgram empty;
  empty.AddVariable("x");
  EXPECT_THROW(Solve(empty), LpError);
  LinearProgram unknown;
  unknown.AddVariable("x");
  unknown.SetObjective({{3, 1}});
  EXPECT_THROW(Solve(unknown), LpError);
}

TEST(LpTest, TamperedCertificateIsRejected) {
  LinearProgram lp;
  const int x = lp.AddVariable("x");
  const int y = lp.AddVariable("y");
  lp.AddLessEqual({{x, 1}, {y, 2}}, 4);
  lp.AddLessEqual({{x, 3}, {y, 1}}, 6);
  lp.SetObjective({{x, -1}, {y, -1}});
  LpResult r = Solve(lp);
  ASSERT_TRUE(VerifyOptimality(lp, r));
  LpResult bad = r;
  bad.objective += Rational(1, 1000);
  EXPECT_FALSE(VerifyOptimality(lp, bad));
  bad = r;
  bad.inequality_duals[0] = -bad.inequality_duals[0];
  EXPECT_FALSE(VerifyOptimality(lp, bad));
  bad = r;
  bad.primal[x] += Rational(1);
  EXPECT_FALSE(VerifyOptimality(lp, bad));
}

// Gaussian elimination on an n x n system; nullopt when singular.
std::optional<std::vector<Rational>> SolveSquare(Matrix a, std::vector<Rational> b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Reference optimum by vertex enumeration of {A x <= b, 0 <= x <= 5}.
std::optional<Rational> VertexOptimum(const Matrix& A, const std::vector<Rational>& b,
                                      const std::vector<Rational>& c) {
  const size_t n = c.size();
  Matrix rows = A;
  std::vector<Rational> rhs = b;
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rational> lo(n), hi(n);
    lo[j] = -1;
    hi[j] = 1;
    rows.push_back(lo);
    rhs.push_back(0);
    rows.push_back(hi);
    rhs.push_back(5);
  }
  std::optional<Rational> best;
  const size_t m = rows.size();
  std::vector<size_t> pick(n);
  for (size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    Matrix sa;
    std::vector<Rational> sb;
    for (size_t i : pick) {
      sa.push_back(rows[i]);
      sb.push_back(rhs[i]);
    }
    if (auto x = SolveSquare(sa, sb)) {
      bool ok = true;
      for (size_t r = 0; r < m && ok; ++r) {
        Rational s;
        for (size_t j = 0; j < n; ++j) s += rows[r][j] * (*x)[j];
        ok = s <= rhs[r];
      }
      if (ok) {
        Rational val;
        for (size_t j = 0; j < n; ++j) val += c[j] * (*x)[j];
        if (!best || val < *best) best = val;
      }
    }
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && pick[i] == m - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (size_t k = i + 1; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

TEST(LpTest, MatchesVertexEnumerationOnRandomPrograms) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  int optimal = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 3, m = 4;
    Matrix A(m, std::vector<Rational>(n));
    std::vector<Rational> b(m), c(n);
    LinearProgram lp;
    for (int j = 0; j < n; ++j) {
      lp.AddVariable("x" + std::to_string(j), Rational(0), Rational(5));
      c[j] = coef(rng);
    }
    if (std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); })) {
      c[0] = 1;
    }
    for (int i = 0; i < m; ++i) {
      std::vector<Term> terms;
      for (int j = 0; j < n; ++j) {
        A[i][j] = Rational(coef(rng), 1 + rng() % 3);
        terms.push_back({j, A[i][j]});
      }
      b[i] = coef(rng);
      if (iter % 2 == 0 && i == 0) {
        lp.AddEquality(terms, b[i]);
        continue;
      }
      lp.AddLessEqual(terms, b[i]);
    }
    std::vector<Term> obj;
    for (int j = 0; j < n; ++j) obj.push_back({j, c[j]});
    lp.SetObjective(obj);
    Matrix Aref = A;
    std::vector<Rational> bref = b;
    if (iter % 2 == 0) {  // equality as a pair of inequalities
      std::vector<Rational> neg(n);
      for (int j = 0; j < n; ++j) neg[j] = -A[0][j];
      Aref.push_back(neg);
      bref.push_back(-b[0]);
    }
    const auto ref = VertexOptimum(Aref, bref, c);
    const LpResult r = Solve(lp);
    if (!ref) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible) << iter;
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::kOptimal) << iter;
    EXPECT_EQ(r.objective, *ref) << iter;
    EXPECT_TRUE(VerifyOptimality(lp, r)) << iter;
    ++optimal;
  }
  EXPECT_GT(optimal, 50);
}

}  // namespace
}  // namespace rendezvous
