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

#include "rendezvous/oracle.h"

#include <gtest/gtest.h>

#include <optional>

#include "rendezvous/sweep.h"

namespace rendezvous {
namespace {

using R = Rational;

GridStrategySpec Spec(int resolution, int horizon = 4) {
  GridStrategySpec s;
  s.resolution = resolution;
  s.horizon = R(horizon);
  return s;
}

int Pieces(const std::vector<int>& seq) {
  int n = 1;
  for (size_t k = 1; k < seq.size(); ++k) n += seq[k] != seq[k - 1];
  return n;
}

// Replays every plan on the grid through the simulator and keeps the least
// sum among those meeting all agents by the horizon.
std::optional<R> ExhaustiveMinimum(Variant variant, const R& v, int resolution,
                                   int horizon) {
  const int n = resolution * horizon;
  std::vector<int> one_choices;
  if (variant == Variant::kMarkerFast) {
    one_choices = {1, -1};
  } else if (v.is_zero()) {
    one_choices = {0};
  } else {
    one_choices = {1, 0, -1};
  }
  std::vector<std::optional<int>> drops = {std::nullopt};
  if (HasMarker(variant)) {
    for (int k = 0; k < n; ++k) drops.push_back(k);
  }
  const GameConfig config{v, R(1), variant};
  std::optional<R> best;
  GridPlan plan;
  plan.step = R(1, resolution);
  plan.player_one.assign(n, 0);
  plan.player_two.assign(n, 0);
  std::vector<int> a(n, 0), b(n, 0);
  auto next = [](std::vector<int>& digits, int base) {
    for (int& d : digits) {
      if (++d < base) return true;
      d = 0;
    }
    return false;
  };
  const int base1 = static_cast<int>(one_choices.size());
  do {
    for (int k = 0; k < n; ++k) plan.player_one[k] = one_choices[a[k]];
    const int p1 = Pieces(plan.player_one);
    std::fill(b.begin(), b.end(), 0);
    do {
      for (int k = 0; k < n; ++k) plan.player_two[k] = b[k] ? -1 : 1;
      if (Pieces(plan.player_two) > 4) continue;
      for (const auto& drop : drops) {
        if (p1 > 4 + (drop ? 1 : 0)) continue;
        plan.drop_step = drop;
        const SimulationAttempt s = ReplayGridPlan(config, plan);
        if (!s.result) continue;
        if (s.result->outcome.ordered_times[3] > R(horizon)) continue;
        if (!best || s.result->outcome.sum < *best) best = s.result->outcome.sum;
      }
    } while (next(b, 2));
  } while (next(a, base1));
  return best;
}

TEST(OracleTest, NoMarkerEqualSpeedOnCoarseGrid) {
  const OracleResult r = BruteForceOpt(Variant::kNoMarker, R(1), Spec(8));
  EXPECT_EQ(r.value, R(13, 2));
  EXPECT_EQ(r.replay.outcome.sum, R(13, 2));
}

TEST(OracleTest, WaitingAtZeroSpeed) {
  for (int n : {1, 4, 8}) {
    EXPECT_EQ(BruteForceOpt(Variant::kNoMarker, R(0), Spec(n)).value, R(8)) << n;
  }
}

TEST(OracleTest, MarkerGamesAtEqualSpeed) {
  const OracleResult slow = BruteForceOpt(Variant::kMarkerSlow, R(1), Spec(8));
  EXPECT_EQ(slow.value, R(6));
  ASSERT_TRUE(slow.plan.drop_step);
  EXPECT_EQ(R(*slow.plan.drop_step) * slow.plan.step, R(1, 4));
  EXPECT_EQ(BruteForceOpt(Variant::kMarkerFast, R(1), Spec(8)).value, R(6));
}

TEST(OracleTest, MatchesExhaustiveReplay) {
  struct Case {
    Variant variant;
    R v;
    int resolution;
    int horizon;
  };
  const Case cases[] = {
      {Variant::kNoMarker, R(1, 2), 1, 4},  {Variant::kNoMarker, R(1), 1, 4},
      {Variant::kNoMarker, R(1, 3), 2, 3},  {Variant::kMarkerSlow, R(1, 2), 1, 4},
      {Variant::kMarkerFast, R(1, 2), 1, 4}, {Variant::kMarkerSlow, R(1), 2, 2},
  };
  for (const Case& c : cases) {
    SCOPED_TRACE(std::string(ToString(c.variant)) + " v=" + c.v.ToString());
    const auto expected = ExhaustiveMinimum(c.variant, c.v, c.resolution, c.horizon);
    if (!expected) {
      EXPECT_THROW(BruteForceOpt(c.variant, c.v, Spec(c.resolution, c.horizon)),
                   OracleError);
      continue;
    }
    EXPECT_EQ(BruteForceOpt(c.variant, c.v, Spec(c.resolution, c.horizon)).value,
              *expected);
  }
}

TEST(OracleTest, RefiningNeverRaisesAndStaysAboveGameValue) {
  for (Variant variant : {Variant::kNoMarker, Variant::kMarkerSlow}) {
    const R v(1, 2);
    const R lp = GameValue(variant, v);
    std::optional<R> prev;
    for (int n : {1, 2, 4, 8}) {
      const R value = BruteForceOpt(variant, v, Spec(n)).value;
      EXPECT_GE(value, lp) << n;
      if (prev) EXPECT_LE(value, *prev) << n;
      prev = value;
    }
  }
}

TEST(OracleTest, DistanceScalesValue) {
  const R one = BruteForceOpt(Variant::kNoMarker, R(1, 2), Spec(4)).value;
  const OracleResult two =
      BruteForceOpt(Variant::kNoMarker, R(1, 2), Spec(4), R(2));
  EXPECT_EQ(two.value, one * R(2));
  EXPECT_EQ(two.replay.outcome.sum, one * R(2));
}

TEST(OracleTest, PlanToString) {
  const OracleResult r = BruteForceOpt(Variant::kNoMarker, R(1), Spec(8));
  const std::string s = r.plan.ToString();
  EXPECT_EQ(s.rfind("I: [0,", 0), 0u) << s;
  EXPECT_NE(s.find("; II: "), std::string::npos) << s;
}

TEST(OracleTest, Errors) {
  EXPECT_THROW(BruteForceOpt(Variant::kNoMarker, R(1), Spec(0)),
               std::invalid_argument);
  EXPECT_THROW(BruteForceOpt(Variant::kNoMarker, R(2), Spec(4)),
               std::invalid_argument);
  EXPECT_THROW(BruteForceOpt(Variant::kNoMarker, R(1), Spec(4), R(0)),
               std::invalid_argument);
  // Agents at distance 1 cannot all be met within one time unit.
  EXPECT_THROW(BruteForceOpt(Variant::kNoMarker, R(1, 2), Spec(4, 1)),
               OracleError);
}

}  // namespace
}  // namespace rendezvous
