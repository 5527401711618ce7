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

// LP-free reference optimum: exhaustive search over open-loop strategies
// whose velocity changes happen on a uniform time grid.

#ifndef RENDEZVOUS_ORACLE_H_
#define RENDEZVOUS_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rendezvous/game.h"

namespace rendezvous {

struct GridStrategySpec {
  int resolution = 64;     // N: velocities change only at multiples of D / N
  Rational horizon = 4;    // H, in units of D; every agent must be met by H
  // Maximal number of constant-velocity pieces per player. Player I gets one
  // extra piece in marker games, split off by the drop.
  int max_segments = 4;
};

// Open-loop plan on the grid, at distance 1.
struct GridPlan {
  Rational step;                 // 1 / N
  std::vector<int> player_one;   // per step: -1, 0 or +1 times player I's cap
  std::vector<int> player_two;   // per step: direction relative to forward
  std::optional<int> drop_step;  // marker dropped at drop_step * step

  // Human-readable piece list, e.g. "I: [0,1/2) -1 ...; II: ...".
  std::string ToString(const Rational& distance = 1) const;
};

struct OracleResult {
  Rational value;           // sum of the four rendezvous times at distance D
  GridPlan plan;
  SimulationResult replay;  // engine replay of the plan at distance D
  int64_t states = 0;       // search states expanded at the final resolution
};

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least simulated sum over all grid plans within the segment caps. Player I
// uses velocities {-v, 0, +v} when it is the slow player and {-1, +1} when it
// is the fast one; agents always move at their exact speed. For even N the
// search is seeded with the result at N / 2, so refining the grid never
// raises the value. The optimum is replayed through the simulator, and an
// OracleError is thrown if the replay disagrees or no plan meets all four
// agents within the horizon.
OracleResult BruteForceOpt(Variant variant, const Rational& v,
                           const GridStrategySpec& spec = {},
                           const Rational& distance = 1);

// Replays a plan through the simulator at the given distance.
SimulationAttempt ReplayGridPlan(const GameConfig& config,
                                 const GridPlan& plan);

}  // namespace rendezvous

#endif  // RENDEZVOUS_ORACLE_H_
