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

// Game model for rendezvous on the line: two players start D apart, player I
// at the origin, player II at +D or -D facing a random way. Player II is
// represented by four agents (origin o, forward b) that all follow the same
// direction plan g; each agent is met at its own rendezvous time.

#ifndef RENDEZVOUS_GAME_H_
#define RENDEZVOUS_GAME_H_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rendezvous/rational.h"

namespace rendezvous {

enum class Variant {
  kNoMarker,
  kMarkerSlow,  // the slow player (player I, speed <= v) carries the marker
  kMarkerFast,  // the fast player (player I, speed <= 1) carries the marker
};

const char* ToString(Variant variant);
// Accepts "none", "slow-marker", "fast-marker" (and the ToString names).
Variant ParseVariant(std::string_view text);
bool HasMarker(Variant variant);

struct GameConfig {
  Rational v;             // speed ratio, 0 <= v <= 1
  Rational distance = 1;  // D > 0
  Variant variant = Variant::kNoMarker;

  // Throws std::invalid_argument when v or D is out of range.
  void Validate() const;
  // Speed cap of player I (the player at the origin).
  Rational player_one_cap() const;
  // Exact speed of player II's agents.
  Rational player_two_speed() const;
};

struct AgentId {
  int origin = 1;   // +1 or -1
  int forward = 1;  // +1 or -1

  // 1..4 in the order (+1,+1), (+1,-1), (-1,+1), (-1,-1).
  int number() const { return (origin > 0 ? 0 : 2) + (forward > 0 ? 1 : 2); }
  static AgentId FromNumber(int number);
  // Reflection of the line maps (o, b) to (-o, -b).
  AgentId Mirrored() const { return {-origin, -forward}; }
  friend bool operator==(const AgentId&, const AgentId&) = default;
};

// slots[i] is the agent met at the i-th rendezvous.
using MeetingOrder = std::array<AgentId, 4>;

// True iff the slots are a permutation of the four agents.
bool IsValidOrder(const MeetingOrder& order);
std::string OrderString(const MeetingOrder& order);  // e.g. "2314"

// Player I moves with a constant velocity on each segment between
// rendezvous. With a marker, the segment containing the drop time is split
// into a pre-drop and a post-drop piece.
struct DropPlan {
  int interval = 1;  // segment 1..4 in which the marker is dropped
  Rational time;     // z
  Rational pre_velocity;
};

struct PlayerOneStrategy {
  std::array<Rational, 4> velocity;  // signed; post-drop part in the drop segment
  std::optional<DropPlan> drop;
};

// Player II always moves at its exact speed; direction[i] is relative to the
// agent's forward orientation.
struct PlayerTwoStrategy {
  std::array<int, 4> direction{1, 1, 1, 1};
};

struct FindRecord {
  int interval = 0;  // segment index 1..4 in which the marker was reached
  Rational time;
};

struct MarkerState {
  bool dropped = false;
  Rational drop_time;
  Rational drop_position;
  // Indexed by agent number - 1.
  std::array<std::optional<FindRecord>, 4> finds;
};

struct RendezvousOutcome {
  std::array<Rational, 4> ordered_times;  // t_1 <= ... <= t_4
  std::array<Rational, 4> agent_times;     // indexed by agent number - 1
  MeetingOrder order;
  Rational sum;
  Rational average() const { return sum / Rational(4); }
};

// Interval of constant motion between two consecutive events.
struct MotionPiece {
  Rational start;
  Rational end;
  Rational player_one_velocity;
  // Direction of travel per agent number - 1; 0 once the agent is met.
  std::array<int, 4> agent_direction{};
};

struct SimulationResult {
  RendezvousOutcome outcome;
  MarkerState marker;
  std::vector<MotionPiece> trace;  // pieces of positive length only
};

class SimulationError : public std::runtime_error {
 public:
  SimulationError(std::string what, int slot)
      : std::runtime_error(std::move(what)), slot_(slot) {}
  // Offending rendezvous slot (1..4), or 0 when not slot specific.
  int slot() const { return slot_; }

 private:
  int slot_;
};

// Event-driven replay of both strategies in exact arithmetic. Agents are
// removed at their first crossing with player I. When `expected_order` is
// given, every rendezvous (groups of simultaneous ones in any order) must
// match it. A dropped marker redirects every agent that reaches it before
// its rendezvous: the agent keeps its current direction from then on. At a
// single instant the drop is processed first, then marker finds, then
// rendezvous.
//
// Throws SimulationError on order mismatch, a drop outside its planned
// segment, speed-bound violations, or when some agent is not met within the
// horizon 10 D / max(v, 1/100).
SimulationResult Simulate(const GameConfig& config,
                          const PlayerOneStrategy& player_one,
                          const PlayerTwoStrategy& player_two,
                          const std::optional<MeetingOrder>& expected_order);

// Same as Simulate but reports failure through the return value.
struct SimulationAttempt {
  std::optional<SimulationResult> result;
  std::string error;
  int error_slot = 0;
};
SimulationAttempt TrySimulate(const GameConfig& config,
                              const PlayerOneStrategy& player_one,
                              const PlayerTwoStrategy& player_two,
                              const std::optional<MeetingOrder>& expected_order);

// Multiplies every time by D. Expects an outcome computed at D = 1.
RendezvousOutcome ScaleOutcome(const RendezvousOutcome& outcome,
                               const Rational& distance);

}  // namespace rendezvous

#endif  // RENDEZVOUS_GAME_H_
