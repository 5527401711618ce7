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

#include "rendezvous/signature.h"

#include <algorithm>
#include <vector>

namespace rendezvous {
namespace {

struct Item {
  bool meet = false;
  std::array<int, 5> motion{};  // player I sign, then agents 1..4
  std::vector<int> agents;      // agent numbers for a rendezvous group
};

char SignChar(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

// Agent number after reflecting the line and/or swapping forward labels.
int MapAgent(int number, bool mirror, bool relabel) {
  AgentId id = AgentId::FromNumber(number);
  if (mirror) id = id.Mirrored();
  if (relabel) id.forward = -id.forward;
  return id.number();
}

std::string Render(const std::vector<Item>& items, bool mirror, bool relabel) {
  const int flip = mirror ? -1 : 1;
  std::string s;
  for (const Item& it : items) {
    if (it.meet) {
      std::vector<int> a;
      for (int n : it.agents) a.push_back(MapAgent(n, mirror, relabel));
      std::sort(a.begin(), a.end());
      s.push_back('M');
      for (int n : a) s.push_back(static_cast<char>('0' + n));
      continue;
    }
    std::array<int, 4> dir{};
    for (int n = 1; n <= 4; ++n) {
      dir[MapAgent(n, mirror, relabel) - 1] = flip * it.motion[n];
    }
    s.push_back('(');
    s.push_back(SignChar(flip * it.motion[0]));
    for (int d : dir) s.push_back(SignChar(d));
    s.push_back(')');
  }
  return s;
}

}  // namespace

std::string StrategySignature(const SimulationResult& sim) {
  std::vector<Item> items;
  int slot = 0;
  auto emit_meetings_until = [&](const Rational& t) {
    while (slot < 4 && sim.outcome.ordered_times[slot] <= t) {
      Item meet;
      meet.meet = true;
      const Rational& at = sim.outcome.ordered_times[slot];
      while (slot < 4 && sim.outcome.ordered_times[slot] == at) {
        meet.agents.push_back(sim.outcome.order[slot].number());
        ++slot;
      }
      items.push_back(std::move(meet));
    }
  };
  for (const MotionPiece& p : sim.trace) {
    emit_meetings_until(p.start);
    Item piece;
    piece.motion[0] = p.player_one_velocity.sign();
    for (int a = 0; a < 4; ++a) piece.motion[a + 1] = p.agent_direction[a];
    if (!items.empty() && !items.back().meet &&
        items.back().motion == piece.motion) {
      continue;
    }
    items.push_back(std::move(piece));
  }
  if (slot < 4) emit_meetings_until(sim.outcome.ordered_times[3]);

  std::string best;
  for (int m = 0; m < 2; ++m) {
    for (int r = 0; r < 2; ++r) {
      std::string s = Render(items, m == 1, r == 1);
      if (best.empty() || s < best) best = std::move(s);
    }
  }
  return best;
}

}  // namespace rendezvous
