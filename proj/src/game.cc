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

#include <algorithm>

#include "game_engine.h"

namespace rendezvous {

const char* ToString(Variant variant) {
  switch (variant) {
    case Variant::kNoMarker:
      return "none";
    case Variant::kMarkerSlow:
      return "slow-marker";
    case Variant::kMarkerFast:
      return "fast-marker";
  }
  return "?";
}

Variant ParseVariant(std::string_view text) {
  if (text == "none" || text == "no-marker" || text == "nomarker") {
    return Variant::kNoMarker;
  }
  if (text == "slow-marker" || text == "slow") return Variant::kMarkerSlow;
  if (text == "fast-marker" || text == "fast") return Variant::kMarkerFast;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

bool HasMarker(Variant variant) { return variant != Variant::kNoMarker; }

void GameConfig::Validate() const {
  if (v.sign() < 0 || v > Rational(1)) {
    throw std::invalid_argument("speed ratio v must lie in [0, 1], got " +
                                v.ToString());
  }
  if (distance.sign() <= 0) {
    throw std::invalid_argument("distance D must be positive, got " +
                                distance.ToString());
  }
}

Rational GameConfig::player_one_cap() const {
  return variant == Variant::kMarkerFast ? Rational(1) : v;
}

Rational GameConfig::player_two_speed() const {
  return variant == Variant::kMarkerFast ? v : Rational(1);
}

AgentId AgentId::FromNumber(int number) {
  switch (number) {
    case 1:
      return {1, 1};
    case 2:
      return {1, -1};
    case 3:
      return {-1, 1};
    case 4:
      return {-1, -1};
  }
  throw std::invalid_argument("agent number must be 1..4");
}

bool IsValidOrder(const MeetingOrder& order) {
  std::array<bool, 4> seen{};
  for (const AgentId& a : order) {
    if ((a.origin != 1 && a.origin != -1) ||
        (a.forward != 1 && a.forward != -1)) {
      return false;
    }
    if (seen[a.number() - 1]) return false;
    seen[a.number() - 1] = true;
  }
  return true;
}

std::string OrderString(const MeetingOrder& order) {
  std::string s;
  for (const AgentId& a : order) s.push_back(static_cast<char>('0' + a.number()));
  return s;
}

namespace {

// Segment-keyed plan: velocities switch at rendezvous.
class ReactivePlan final : public internal::MotionPlan {
 public:
  ReactivePlan(const PlayerOneStrategy& one, const PlayerTwoStrategy& two)
      : one_(one), two_(two) {}

  Rational PlayerOneVelocity(const Rational&, int segment,
                             bool dropped) const override {
    if (one_.drop && !dropped && segment == one_.drop->interval - 1) {
      return one_.drop->pre_velocity;
    }
    return one_.velocity[segment];
  }
  int AgentDirection(const Rational&, int segment) const override {
    return two_.direction[segment];
  }
  std::optional<Rational> NextScheduleChange(const Rational&) const override {
    return std::nullopt;
  }
  std::optional<Rational> PendingDrop(int segment) const override {
    if (!one_.drop || segment != one_.drop->interval - 1) return std::nullopt;
    return one_.drop->time;
  }
  std::optional<std::string> CheckDrop(const Rational& now, int segment,
                                       bool dropped) const override {
    if (!one_.drop || dropped) return std::nullopt;
    const int k = one_.drop->interval - 1;
    if (segment > k) return "marker not dropped within interval " +
                            std::to_string(k + 1);
    if (segment < k && now > one_.drop->time) {
      return "drop time passed before interval " + std::to_string(k + 1);
    }
    return std::nullopt;
  }

 private:
  const PlayerOneStrategy& one_;
  const PlayerTwoStrategy& two_;
};

}  // namespace

SimulationAttempt TrySimulate(const GameConfig& config,
                              const PlayerOneStrategy& player_one,
                              const PlayerTwoStrategy& player_two,
                              const std::optional<MeetingOrder>& expected) {
  SimulationAttempt attempt;
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    attempt.error = e.what();
    return attempt;
  }
  const Rational cap = config.player_one_cap();
  for (int i = 0; i < 4; ++i) {
    if (player_one.velocity[i].abs() > cap) {
      attempt.error = "player I exceeds its speed bound on segment " +
                      std::to_string(i + 1);
      attempt.error_slot = i + 1;
      return attempt;
    }
    if (player_two.direction[i] != 1 && player_two.direction[i] != -1) {
      attempt.error = "player II direction must be +1 or -1";
      return attempt;
    }
  }
  if (player_one.drop) {
    const DropPlan& d = *player_one.drop;
    if (d.interval < 1 || d.interval > 4 || d.time.sign() < 0 ||
        d.pre_velocity.abs() > cap) {
      attempt.error = "malformed drop plan";
      return attempt;
    }
    if (!HasMarker(config.variant)) {
      attempt.error = "drop plan given for a game without marker";
      return attempt;
    }
  }
  if (expected && !IsValidOrder(*expected)) {
    attempt.error = "declared meeting order is not a permutation of agents";
    return attempt;
  }
  ReactivePlan plan(player_one, player_two);
  return internal::RunEngine(config, plan, expected);
}

SimulationResult Simulate(const GameConfig& config,
                          const PlayerOneStrategy& player_one,
                          const PlayerTwoStrategy& player_two,
                          const std::optional<MeetingOrder>& expected_order) {
  SimulationAttempt a =
      TrySimulate(config, player_one, player_two, expected_order);
  if (!a.result) throw SimulationError(a.error, a.error_slot);
  return std::move(*a.result);
}

RendezvousOutcome ScaleOutcome(const RendezvousOutcome& outcome,
                               const Rational& distance) {
  if (distance.sign() <= 0) {
    throw std::invalid_argument("distance D must be positive");
  }
  RendezvousOutcome r = outcome;
  for (Rational& t : r.ordered_times) t *= distance;
  for (Rational& t : r.agent_times) t *= distance;
  r.sum *= distance;
  return r;
}

}  // namespace rendezvous
