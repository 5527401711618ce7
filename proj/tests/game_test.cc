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

#include "rendezvous/game.h"

#include <gtest/gtest.h>

namespace rendezvous {
namespace {

MeetingOrder Order(const char* digits) {
  MeetingOrder o;
  for (int i = 0; i < 4; ++i) o[i] = AgentId::FromNumber(digits[i] - '0');
  return o;
}

PlayerOneStrategy Velocities(const Rational& v, std::array<int, 4> signs) {
  PlayerOneStrategy s;
  for (int i = 0; i < 4; ++i) s.velocity[i] = v * Rational(signs[i]);
  return s;
}

TEST(GameTest, AgentNumbering) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(AgentId::FromNumber(n).number(), n);
  EXPECT_EQ(AgentId::FromNumber(1).Mirrored().number(), 4);
  EXPECT_EQ(AgentId::FromNumber(2).Mirrored().number(), 3);
  EXPECT_THROW(AgentId::FromNumber(5), std::invalid_argument);
  EXPECT_FALSE(IsValidOrder(Order("1123")));
  EXPECT_EQ(OrderString(Order("2314")), "2314");
}

TEST(GameTest, VariantNames) {
  EXPECT_EQ(ParseVariant("none"), Variant::kNoMarker);
  EXPECT_EQ(ParseVariant("slow-marker"), Variant::kMarkerSlow);
  EXPECT_EQ(ParseVariant("fast-marker"), Variant::kMarkerFast);
  EXPECT_THROW(ParseVariant("medium"), std::invalid_argument);
}

// Stay put until two agents arrive, then sweep left and right.
TEST(GameTest, WaitThenSweepAtHalfSpeed) {
  const GameConfig cfg{Rational(1, 2), Rational(1), Variant::kNoMarker};
  const auto one = Velocities(cfg.v, {0, 0, -1, 1});
  const PlayerTwoStrategy two{{1, 1, -1, -1}};
  const SimulationResult r = Simulate(cfg, one, two, Order("2341"));
  const RendezvousOutcome& o = r.outcome;
  EXPECT_EQ(o.ordered_times[0], Rational(1));
  EXPECT_EQ(o.ordered_times[1], Rational(1));
  EXPECT_EQ(o.ordered_times[2], Rational(7, 3));
  EXPECT_EQ(o.ordered_times[3], Rational(29, 9));
  EXPECT_EQ(o.sum, Rational(68, 9));
  // The simultaneous pair may be declared in either order.
  EXPECT_EQ(Simulate(cfg, one, two, Order("3241")).outcome.sum, Rational(68, 9));
  EXPECT_EQ(Simulate(cfg, one, two, std::nullopt).outcome.sum, Rational(68, 9));
}

TEST(GameTest, ZigZagAtEqualSpeed) {
  const GameConfig cfg{Rational(1), Rational(1), Variant::kNoMarker};
  const SimulationResult r =
      Simulate(cfg, Velocities(cfg.v, {1, -1, 1, -1}),
               PlayerTwoStrategy{{1, 1, -1, -1}}, Order("2314"));
  EXPECT_EQ(r.outcome.sum, Rational(13, 2));
  EXPECT_EQ(r.outcome.average(), Rational(13, 8));
  EXPECT_EQ(r.outcome.agent_times[3], Rational(3));
  Rational covered;
  for (const MotionPiece& p : r.trace) covered += p.end - p.start;
  EXPECT_EQ(covered, Rational(3));
}

TEST(GameTest, WrongDeclaredOrderReportsSlot) {
  const GameConfig cfg{Rational(1), Rational(1), Variant::kNoMarker};
  try {
    Simulate(cfg, Velocities(cfg.v, {1, -1, 1, -1}),
             PlayerTwoStrategy{{1, 1, -1, -1}}, Order("3214"));
    FAIL() << "expected SimulationError";
  } catch (const SimulationError& e) {
    EXPECT_EQ(e.slot(), 1);
  }
}

TEST(GameTest, RejectsSpeedViolationsAndBadConfig) {
  const GameConfig cfg{Rational(1, 2), Rational(1), Variant::kNoMarker};
  EXPECT_THROW(Simulate(cfg, Velocities(Rational(1), {1, 1, 1, 1}),
                        PlayerTwoStrategy{}, std::nullopt),
               SimulationError);
  const GameConfig bad{Rational(3, 2), Rational(1), Variant::kNoMarker};
  EXPECT_FALSE(TrySimulate(bad, PlayerOneStrategy{}, PlayerTwoStrategy{},
                           std::nullopt).result);
  const GameConfig neg_d{Rational(1, 2), Rational(-1), Variant::kNoMarker};
  EXPECT_FALSE(TrySimulate(neg_d, PlayerOneStrategy{}, PlayerTwoStrategy{},
                           std::nullopt).result);
}

TEST(GameTest, NeverMeetingHitsHorizon) {
  // Player II runs away from everyone forever: agents 1 and 4 never return.
  const GameConfig cfg{Rational(0), Rational(1), Variant::kNoMarker};
  const SimulationAttempt a = TrySimulate(
      cfg, PlayerOneStrategy{}, PlayerTwoStrategy{{1, 1, 1, 1}}, std::nullopt);
  EXPECT_FALSE(a.result);
  EXPECT_NE(a.error.find("horizon"), std::string::npos);
}

// Slow holder at v = 1: back off, drop at -1/4, sweep. The agent starting at
// -1 reaches the marker exactly at the first rendezvous and keeps going.
TEST(GameTest, MarkerFoundAtFirstRendezvous) {
  const GameConfig cfg{Rational(1), Rational(1), Variant::kMarkerSlow};
  PlayerOneStrategy one = Velocities(cfg.v, {1, -1, 1, -1});
  one.drop = DropPlan{1, Rational(1, 4), Rational(-1)};
  const PlayerTwoStrategy two{{1, -1, -1, -1}};
  const SimulationResult r = Simulate(cfg, one, two, Order("2314"));
  EXPECT_EQ(r.outcome.ordered_times[0], Rational(3, 4));
  EXPECT_EQ(r.outcome.ordered_times[1], Rational(1));
  EXPECT_EQ(r.outcome.ordered_times[2], Rational(7, 4));
  EXPECT_EQ(r.outcome.ordered_times[3], Rational(5, 2));
  EXPECT_EQ(r.outcome.sum, Rational(6));
  EXPECT_TRUE(r.marker.dropped);
  EXPECT_EQ(r.marker.drop_position, Rational(-1, 4));
  ASSERT_TRUE(r.marker.finds[2].has_value());
  EXPECT_EQ(r.marker.finds[2]->time, Rational(3, 4));
  EXPECT_EQ(r.marker.finds[2]->interval, 1);
}

TEST(GameTest, ScalingMultipliesTimes) {
  const GameConfig cfg{Rational(1), Rational(1), Variant::kNoMarker};
  const SimulationResult r =
      Simulate(cfg, Velocities(cfg.v, {1, -1, 1, -1}),
               PlayerTwoStrategy{{1, 1, -1, -1}}, Order("2314"));
  const RendezvousOutcome s = ScaleOutcome(r.outcome, Rational(3));
  EXPECT_EQ(s.sum, Rational(39, 2));
  EXPECT_EQ(s.ordered_times[0], Rational(3, 2));
  EXPECT_THROW(ScaleOutcome(r.outcome, Rational(0)), std::invalid_argument);

  // Direct simulation at D = 3 agrees.
  const GameConfig big{Rational(1), Rational(3), Variant::kNoMarker};
  EXPECT_EQ(Simulate(big, Velocities(big.v, {1, -1, 1, -1}),
                     PlayerTwoStrategy{{1, 1, -1, -1}}, Order("2314"))
                .outcome.sum,
            Rational(39, 2));
}

}  // namespace
}  // namespace rendezvous
