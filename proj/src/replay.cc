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

#include "rendezvous/replay.h"

namespace rendezvous {
namespace {

Rational Rate(const Rational& displacement, const Rational& duration) {
  if (duration.is_zero()) return Rational();
  return displacement / duration;
}

}  // namespace

StrategyPair StrategiesFromSolution(const ParameterAssignment& pa,
                                    const FamilyProgram& fp,
                                    const LpResult& r) {
  if (r.status != LpStatus::kOptimal) {
    throw std::invalid_argument("strategies requested for a non-optimal LP");
  }
  const VariableLayout& L = fp.layout;
  StrategyPair s;
  const bool marker = HasMarker(pa.variant);
  const int k = marker ? pa.drop_interval - 1 : -1;
  Rational prev;
  for (int j = 0; j < 4; ++j) {
    const Rational& tj = r.primal[L.t[j]];
    const Rational start = j == k ? r.primal[L.z] : prev;
    s.player_one.velocity[j] =
        Rate(r.primal[L.disp[j]], tj - start) * Rational(pa.a[j]);
    s.player_two.direction[j] = pa.d[j];
    if (j == k) {
      DropPlan drop;
      drop.interval = k + 1;
      drop.time = r.primal[L.z];
      drop.pre_velocity =
          Rate(r.primal[L.pre_disp], drop.time - prev) * Rational(pa.a0);
      s.player_one.drop = drop;
    }
    prev = tj;
  }
  return s;
}

SolutionCheck CheckSolution(const GameConfig& config,
                            const ParameterAssignment& pa,
                            const FamilyProgram& fp, const LpResult& r) {
  SolutionCheck check;
  if (r.status != LpStatus::kOptimal) {
    check.reason = "LP result is not optimal";
    return check;
  }
  GameConfig unit = config;
  unit.distance = Rational(1);
  const StrategyPair s = StrategiesFromSolution(pa, fp, r);
  SimulationAttempt attempt =
      TrySimulate(unit, s.player_one, s.player_two, pa.order);
  if (!attempt.result) {
    check.reason = "replay failed: " + attempt.error;
    return check;
  }
  check.replay = std::move(attempt.result);
  const SimulationResult& sim = *check.replay;
  const VariableLayout& L = fp.layout;
  for (int i = 0; i < 4; ++i) {
    if (sim.outcome.ordered_times[i] != r.primal[L.t[i]]) {
      check.reason = "slot " + std::to_string(i + 1) + " met at " +
                     sim.outcome.ordered_times[i].ToString() +
                     ", LP time " + r.primal[L.t[i]].ToString();
      return check;
    }
  }
  if (sim.outcome.sum != r.objective) {
    check.reason = "simulated sum differs from LP objective";
    return check;
  }
  if (HasMarker(pa.variant)) {
    for (int i = 0; i < 4; ++i) {
      const int agent = pa.order[i].number() - 1;
      const auto& realized = sim.marker.finds[agent];
      const std::string slot = std::to_string(i + 1);
      if (pa.find[i] != 0) {
        const Rational& tau = r.primal[L.find_time[i]];
        if (!realized || realized->time != tau) {
          check.reason = "declared find of slot " + slot + " at " +
                         tau.ToString() + " not reproduced";
          return check;
        }
        continue;
      }
      if (!realized || i == 0) continue;
      if (realized->time >= r.primal[L.t[i - 1]]) continue;
      check.reason = "non-finder crossing: slot " + slot +
                     " reaches the marker at " + realized->time.ToString();
      return check;
    }
  }
  check.valid = true;
  return check;
}

}  // namespace rendezvous
