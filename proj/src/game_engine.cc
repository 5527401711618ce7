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

#include "game_engine.h"

#include <algorithm>
#include <vector>

namespace rendezvous::internal {

SimulationAttempt RunEngine(const GameConfig& config, const MotionPlan& plan,
                            const std::optional<MeetingOrder>& expected) {
  SimulationAttempt attempt;
  auto fail = [&](std::string msg, int slot) {
    attempt.error = std::move(msg);
    attempt.error_slot = slot;
    attempt.result.reset();
    return attempt;
  };

  const Rational& D = config.distance;
  const Rational speed = config.player_two_speed();
  const Rational horizon =
      Rational(10) * D / max(config.v, Rational(1, 100));

  SimulationResult res;
  std::array<AgentId, 4> agents;
  std::array<Rational, 4> y;
  std::array<bool, 4> met{};
  std::array<bool, 4> found{};
  std::array<int, 4> found_dir{};
  for (int a = 0; a < 4; ++a) {
    agents[a] = AgentId::FromNumber(a + 1);
    y[a] = Rational(agents[a].origin) * D;
  }
  Rational now;
  Rational x;
  int segment = 0;
  int slot = 0;
  MarkerState& marker = res.marker;

  std::array<Rational, 4> w;
  std::array<int, 4> dir{};
  while (segment < 4) {
    if (auto err = plan.CheckDrop(now, segment, marker.dropped)) {
      return fail(*err, segment + 1);
    }
    const Rational u = plan.PlayerOneVelocity(now, segment, marker.dropped);
    const int g = plan.AgentDirection(now, segment);
    for (int a = 0; a < 4; ++a) {
      dir[a] = found[a] ? found_dir[a] : agents[a].forward * g;
      w[a] = speed * Rational(dir[a]);
    }

    std::optional<Rational> step;
    auto offer = [&step](const Rational& dt) {
      if (dt.sign() >= 0 && (!step || dt < *step)) step = dt;
    };
    std::optional<Rational> drop_at;
    if (!marker.dropped) {
      drop_at = plan.PendingDrop(segment);
      if (drop_at) {
        if (*drop_at < now) {
          return fail("drop time passed before interval " +
                          std::to_string(segment + 1),
                      segment + 1);
        }
        offer(*drop_at - now);
      }
    }
    for (int a = 0; a < 4; ++a) {
      if (met[a]) continue;
      if (marker.dropped && !found[a]) {
        if (w[a].is_zero()) {
          if (y[a] == marker.drop_position) offer(Rational());
        } else {
          offer((marker.drop_position - y[a]) / w[a]);
        }
      }
      const Rational rel = w[a] - u;
      if (rel.is_zero()) {
        if (y[a] == x) offer(Rational());
      } else {
        offer((x - y[a]) / rel);
      }
    }
    if (auto change = plan.NextScheduleChange(now)) offer(*change - now);
    if (!step || now + *step > horizon) {
      return fail("agent not met within horizon " + horizon.ToString(),
                  slot + 1);
    }

    if (step->sign() > 0) {
      MotionPiece piece;
      piece.start = now;
      piece.end = now + *step;
      piece.player_one_velocity = u;
      for (int a = 0; a < 4; ++a) piece.agent_direction[a] = met[a] ? 0 : dir[a];
      res.trace.push_back(piece);
      x += u * *step;
      for (int a = 0; a < 4; ++a) {
        if (!met[a]) y[a] += w[a] * *step;
      }
      now += *step;
    }

    if (drop_at && *drop_at == now) {
      marker.dropped = true;
      marker.drop_time = now;
      marker.drop_position = x;
    }
    if (marker.dropped) {
      for (int a = 0; a < 4; ++a) {
        if (met[a] || found[a] || y[a] != marker.drop_position || y[a] == x) {
          continue;
        }
        found[a] = true;
        found_dir[a] = dir[a];
        marker.finds[a] = FindRecord{segment + 1, now};
      }
    }
    std::vector<int> group;
    for (int a = 0; a < 4; ++a) {
      if (!met[a] && y[a] == x) group.push_back(a);
    }
    if (group.empty()) continue;
    std::vector<int> ordered;
    if (expected) {
      for (size_t k = 0; k < group.size(); ++k) {
        const int a = (*expected)[slot + k].number() - 1;
        if (std::find(group.begin(), group.end(), a) == group.end()) {
          return fail("slot " + std::to_string(slot + k + 1) +
                          " declared agent " + std::to_string(a + 1) +
                          " but met a different agent at time " +
                          now.ToString(),
                      static_cast<int>(slot + k + 1));
        }
        ordered.push_back(a);
      }
    } else {
      ordered = group;
    }
    for (int a : ordered) {
      met[a] = true;
      res.outcome.order[slot] = agents[a];
      res.outcome.ordered_times[slot] = now;
      res.outcome.agent_times[a] = now;
      res.outcome.sum += now;
      ++slot;
    }
    segment += static_cast<int>(ordered.size());
  }
  if (auto err = plan.CheckDrop(now, segment, marker.dropped)) {
    return fail(*err, 4);
  }
  attempt.result = std::move(res);
  return attempt;
}

}  // namespace rendezvous::internal
