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

// Shared event loop behind Simulate and the open-loop oracle replay.

#ifndef RENDEZVOUS_SRC_GAME_ENGINE_H_
#define RENDEZVOUS_SRC_GAME_ENGINE_H_

#include <optional>
#include <string>

#include "rendezvous/game.h"

namespace rendezvous::internal {

class MotionPlan {
 public:
  virtual ~MotionPlan() = default;
  // Velocity of player I on the piece starting at `t`.
  virtual Rational PlayerOneVelocity(const Rational& t, int segment,
                                     bool dropped) const = 0;
  // Player II direction (relative to forward) on the piece starting at `t`.
  virtual int AgentDirection(const Rational& t, int segment) const = 0;
  // Next time strictly after `t` at which a scheduled velocity changes.
  virtual std::optional<Rational> NextScheduleChange(const Rational& t) const = 0;
  // Drop time if the marker is due to be dropped while in `segment`.
  virtual std::optional<Rational> PendingDrop(int segment) const = 0;
  // Error message when the drop plan can no longer be honored.
  virtual std::optional<std::string> CheckDrop(const Rational& now, int segment,
                                               bool dropped) const = 0;
};

SimulationAttempt RunEngine(const GameConfig& config, const MotionPlan& plan,
                            const std::optional<MeetingOrder>& expected);

}  // namespace rendezvous::internal

#endif  // RENDEZVOUS_SRC_GAME_ENGINE_H_
