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

// Turning an LP optimum back into concrete strategies and replaying them
// through the simulator.

#ifndef RENDEZVOUS_REPLAY_H_
#define RENDEZVOUS_REPLAY_H_

#include <optional>
#include <string>

#include "rendezvous/family.h"
#include "rendezvous/game.h"
#include "rendezvous/lp.h"

namespace rendezvous {

struct StrategyPair {
  PlayerOneStrategy player_one;
  PlayerTwoStrategy player_two;
};

// Velocities a_j p_j / (segment length), 0 on zero-length segments.
StrategyPair StrategiesFromSolution(const ParameterAssignment& assignment,
                                    const FamilyProgram& program,
                                    const LpResult& result);

struct SolutionCheck {
  bool valid = false;
  std::string reason;                       // empty when valid
  std::optional<SimulationResult> replay;   // present when simulation ran
};

// Replays an optimal LP point at distance 1. Valid iff the simulator meets
// the agents in the declared order at exactly the LP times, every declared
// find happens at exactly the LP find time, and no agent declared a
// non-finder reaches the marker before the segment ending at its own
// rendezvous. Finds by the first agent, or inside an agent's own final
// segment, leave its motion unchanged and are accepted.
SolutionCheck CheckSolution(const GameConfig& config,
                            const ParameterAssignment& assignment,
                            const FamilyProgram& program,
                            const LpResult& result);

}  // namespace rendezvous

#endif  // RENDEZVOUS_REPLAY_H_
