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

// Layered search over grid steps. A state holds everything the future
// depends on (positions as lattice indices, current velocities and piece
// counts, marker and per-agent status); equal states keep the cheaper
// history. Partial plans whose optimistic completion cannot beat the
// incumbent are dropped.

#include "rendezvous/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "game_engine.h"

namespace rendezvous {
namespace {

enum AgentStatus : int16_t { kFollowing = 0, kFound = 1, kMet = 2 };

struct State {
  int16_t ix = 0;  // player I position, in units of cap * step
  int16_t u = 0;   // current player I velocity sign
  int16_t c1 = 0;  // player I pieces so far
  int16_t is = 0;  // player II displacement along forward, in speed * step
  int16_t g = 0;
  int16_t c2 = 0;
  int16_t dropped = 0;
  int16_t im = 0;  // marker position, same units as ix
  std::array<int16_t, 4> status{};
  std::array<int16_t, 4> fdir{};  // direction of a found agent
  std::array<int16_t, 4> j{};     // found agent offset in speed * step

  bool operator==(const State& o) const {
    return std::memcmp(this, &o, sizeof(State)) == 0;
  }
};
static_assert(sizeof(State) == 40);

struct StateHash {
  size_t operator()(const State& s) const {
    std::array<uint64_t, sizeof(State) / 8> w;
    std::memcpy(w.data(), &s, sizeof(State));
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return h ^ (h >> 33);
  }
};

struct Node {
  State s;
  int64_t cost = 0;  // sum of rendezvous times so far, in ticks
};

// How a node was reached; kept for every layer to rebuild the plan.
struct Step {
  int32_t parent = -1;
  int8_t u = 0;
  int8_t g = 0;
  bool drop = false;
};

// Positions are integers in units of eps = step / (q * a) where v = p / q and
// step = a / b; times are integers in ticks of step / lcm, where lcm is a
// common multiple of every possible closing speed in eps per step.
struct Search {
  bool marker = false;
  int n = 0;
  Rational h;
  std::vector<int> velocities;
  int cap1 = 0;
  int cap2 = 0;
  int64_t m1 = 0;      // player I displacement per step at full speed
  int64_t m2 = 0;      // agent displacement per step
  int64_t origin = 0;  // distance 1
  int64_t lcm = 1;
};

int64_t ToInt64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw OracleError("grid lattice too fine for 64 bits");
  return z.get_si();
}

int64_t CheckedLcm(int64_t a, int64_t b) {
  const __int128 r = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (r > (static_cast<__int128>(1) << 50)) {
    throw OracleError("grid lattice too fine for 64 bits");
  }
  return static_cast<int64_t>(r);
}

const std::array<AgentId, 4>& Agents() {
  static const std::array<AgentId, 4> a = {
      AgentId::FromNumber(1), AgentId::FromNumber(2), AgentId::FromNumber(3),
      AgentId::FromNumber(4)};
  return a;
}

int AgentOffset(const State& s, int a) {
  return s.status[a] == kFound ? s.j[a] : Agents()[a].forward * s.is;
}

int64_t AgentPosition(const Search& S, const State& s, int a) {
  return Agents()[a].origin * S.origin + AgentOffset(s, a) * S.m2;
}

// Optimistic completion cost of `s` at step k, INT64_MAX if some agent
// cannot be reached within the horizon. Each unmet agent is at best
// approached head-on. The two agents sharing an origin stay symmetric about
// it while both follow player II's plan, so when the first of them is met
// the second is at least 2 |x - origin| away, minus what player I has
// covered meanwhile.
int64_t LowerBound(const Search& S, const State& s, int k, int64_t cost) {
  const int64_t x = s.ix * S.m1;
  const int64_t closing = S.m1 + S.m2;
  const int64_t per = S.lcm / closing;
  const int64_t now = k * S.lcm;
  const int64_t end = S.n * S.lcm;
  int64_t lb = cost;
  for (int pair = 0; pair < 2; ++pair) {
    const int a0 = 2 * pair;
    std::array<int64_t, 2> meet{};
    int unmet = 0;
    for (int i = 0; i < 2; ++i) {
      const int a = a0 + i;
      if (s.status[a] == kMet) continue;
      ++unmet;
      meet[i] = now + std::abs(x - AgentPosition(S, s, a)) * per;
      if (meet[i] > end) return INT64_MAX;
      lb += meet[i];
    }
    if (unmet < 2 || s.status[a0] != kFollowing ||
        s.status[a0 + 1] != kFollowing) {
      continue;
    }
    const int64_t first = std::min(meet[0], meet[1]);
    const int64_t gmin = (first - now) / per;
    const int64_t center = std::abs(x - Agents()[a0].origin * S.origin);
    const __int128 c = static_cast<__int128>(center) * closing -
                       static_cast<__int128>(S.m1) * gmin;
    const int64_t second =
        first + (c > 0 ? static_cast<int64_t>(2 * S.lcm * c /
                                              (static_cast<__int128>(closing) *
                                               closing))
                       : 0);
    if (second > end) return INT64_MAX;
    const int64_t naive = meet[0] + meet[1];
    if (first + second > naive) lb += first + second - naive;
  }
  return lb;
}

struct Outcome {
  int64_t cost = 0;
  GridPlan plan;
  int64_t states = 0;
  bool found = false;
};

Outcome Run(const Search& S, std::optional<int64_t> incumbent,
            const GridPlan* incumbent_plan) {
  Outcome out;
  if (incumbent) {
    out.cost = *incumbent;
    out.plan = *incumbent_plan;
    out.found = true;
  }
  std::vector<Node> current(1);
  std::vector<std::vector<Step>> steps(1, std::vector<Step>(1));
  struct Terminal {
    int layer;  // the final step starts at layer * h
    int32_t parent;
    int8_t u;
    int8_t g;
    bool drop;
  };
  std::optional<Terminal> terminal;
  auto beaten = [&](int64_t lb) { return out.found && lb >= out.cost; };
  for (int k = 0; k < S.n && !current.empty(); ++k) {
    std::vector<Node> next;
    std::vector<Step> next_steps;
    std::unordered_map<State, int32_t, StateHash> index;
    for (int32_t ni = 0; ni < static_cast<int32_t>(current.size()); ++ni) {
      const Node& node = current[ni];
      const State& s = node.s;
      ++out.states;
      if (beaten(LowerBound(S, s, k, node.cost))) continue;
      const int64_t x = s.ix * S.m1;
      std::array<int64_t, 4> y;
      for (int a = 0; a < 4; ++a) y[a] = AgentPosition(S, s, a);
      const int drop_choices = S.marker && !s.dropped ? 2 : 1;
      for (int drop = 0; drop < drop_choices; ++drop) {
        for (int u : S.velocities) {
          State base = s;
          if (k == 0 || u != s.u) ++base.c1;
          const int cap1 = S.cap1 + ((drop || s.dropped) ? 1 : 0);
          if (base.c1 > cap1) continue;
          base.u = static_cast<int16_t>(u);
          if (drop) {
            base.dropped = 1;
            base.im = s.ix;
          }
          const int64_t U = u * S.m1;
          const int64_t m = base.im * S.m1;
          for (int g : {1, -1}) {
            State ns = base;
            if (k == 0 || g != s.g) ++ns.c2;
            if (ns.c2 > S.cap2) continue;
            ns.g = static_cast<int16_t>(g);
            int64_t cost = node.cost;
            for (int a = 0; a < 4; ++a) {
              if (s.status[a] == kMet) continue;
              const int dir = s.status[a] == kFound ? s.fdir[a]
                                                    : Agents()[a].forward * g;
              const int64_t W = dir * S.m2;
              // Meeting at fraction mn / md of the step, in (0, 1].
              int64_t mn = x - y[a];
              int64_t md = W - U;
              if (md < 0) {
                mn = -mn;
                md = -md;
              }
              const bool meet = md != 0 && mn > 0 && mn <= md;
              if (ns.dropped && s.status[a] == kFollowing && W != 0) {
                int64_t fn = m - y[a];
                int64_t fd = W;
                if (fd < 0) {
                  fn = -fn;
                  fd = -fd;
                }
                if (fn >= 0 && fn <= fd &&
                    (!meet || static_cast<__int128>(fn) * md <
                                  static_cast<__int128>(mn) * fd)) {
                  ns.status[a] = kFound;
                  ns.fdir[a] = static_cast<int16_t>(dir);
                  ns.j[a] = static_cast<int16_t>(AgentOffset(s, a));
                }
              }
              if (meet) {
                ns.status[a] = kMet;
                ns.fdir[a] = 0;
                ns.j[a] = 0;
                cost += k * S.lcm + mn * (S.lcm / md);
              }
            }
            ns.ix = static_cast<int16_t>(s.ix + u);
            ns.is = static_cast<int16_t>(s.is + g);
            for (int a = 0; a < 4; ++a) {
              if (ns.status[a] == kFound) ns.j[a] = ns.j[a] + ns.fdir[a];
            }
            const bool done = std::all_of(ns.status.begin(), ns.status.end(),
                                          [](int16_t x) { return x == kMet; });
            if (done) {
              if (!out.found || cost < out.cost) {
                out.found = true;
                out.cost = cost;
                terminal = Terminal{k, ni, static_cast<int8_t>(u),
                                    static_cast<int8_t>(g), drop == 1};
              }
              continue;
            }
            if (beaten(LowerBound(S, ns, k + 1, cost))) continue;
            const Step how{ni, static_cast<int8_t>(u), static_cast<int8_t>(g),
                           drop == 1};
            auto [it, inserted] =
                index.try_emplace(ns, static_cast<int32_t>(next.size()));
            if (inserted) {
              next.push_back(Node{ns, cost});
              next_steps.push_back(how);
            } else if (cost < next[it->second].cost) {
              next[it->second].cost = cost;
              next_steps[it->second] = how;
            }
          }
        }
      }
    }
    current = std::move(next);
    steps.push_back(std::move(next_steps));
  }

  if (terminal) {
    GridPlan plan;
    plan.step = S.h;
    const int len = terminal->layer + 1;
    plan.player_one.assign(len, 0);
    plan.player_two.assign(len, 0);
    plan.player_one[len - 1] = terminal->u;
    plan.player_two[len - 1] = terminal->g;
    if (terminal->drop) plan.drop_step = len - 1;
    int32_t idx = terminal->parent;
    for (int k = len - 1; k > 0; --k) {
      const Step& nd = steps[k][idx];
      plan.player_one[k - 1] = nd.u;
      plan.player_two[k - 1] = nd.g;
      if (nd.drop) plan.drop_step = k - 1;
      idx = nd.parent;
    }
    out.plan = std::move(plan);
  }
  return out;
}

class GridMotionPlan final : public internal::MotionPlan {
 public:
  GridMotionPlan(const GridPlan& plan, const Rational& step,
                 const Rational& cap)
      : plan_(plan), step_(step), cap_(cap) {}

  Rational PlayerOneVelocity(const Rational& t, int, bool) const override {
    const size_t k = Index(t);
    if (k >= plan_.player_one.size()) return Rational();
    return Rational(plan_.player_one[k]) * cap_;
  }
  int AgentDirection(const Rational& t, int) const override {
    const size_t k = Index(t);
    if (k >= plan_.player_two.size()) return plan_.player_two.back();
    return plan_.player_two[k];
  }
  std::optional<Rational> NextScheduleChange(const Rational& t) const override {
    const size_t k = Index(t) + 1;
    if (k >= plan_.player_one.size()) return std::nullopt;
    return Rational(static_cast<int64_t>(k)) * step_;
  }
  std::optional<Rational> PendingDrop(int) const override {
    if (!plan_.drop_step) return std::nullopt;
    return Rational(*plan_.drop_step) * step_;
  }
  std::optional<std::string> CheckDrop(const Rational&, int,
                                       bool) const override {
    return std::nullopt;
  }

 private:
  size_t Index(const Rational& t) const {
    const Rational q = t / step_;
    const mpz_class fl = q.numerator() / q.denominator();  // t >= 0
    return fl.get_ui();
  }

  const GridPlan& plan_;
  Rational step_;
  Rational cap_;
};

Search MakeSearch(Variant variant, const Rational& v,
                  const GridStrategySpec& spec) {
  GameConfig config{v, Rational(1), variant};
  config.Validate();
  if (spec.resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  if (spec.horizon.sign() <= 0) throw std::invalid_argument("horizon must be > 0");
  if (spec.max_segments < 1) {
    throw std::invalid_argument("max_segments must be >= 1");
  }
  const Rational steps = spec.horizon * Rational(spec.resolution);
  if (!steps.is_integer()) {
    throw std::invalid_argument("horizon * resolution must be an integer");
  }
  if (steps > Rational(16384)) {
    throw std::invalid_argument("more than 16384 grid steps are not supported");
  }
  Search S;
  S.marker = HasMarker(variant);
  S.n = static_cast<int>(ToInt64(steps.numerator()));
  S.h = Rational(1, spec.resolution);
  const int64_t p = ToInt64(v.numerator());
  const int64_t q = ToInt64(v.denominator());
  const int64_t a = ToInt64(S.h.numerator());
  const int64_t b = ToInt64(S.h.denominator());
  const bool fast = variant == Variant::kMarkerFast;
  S.m1 = (fast ? q : p) * a;
  S.m2 = (fast ? p : q) * a;
  S.origin = q * b;
  if (fast) {
    S.velocities = {1, -1};
  } else if (p == 0) {
    S.velocities = {0};
  } else {
    S.velocities = {1, 0, -1};
  }
  for (int u : S.velocities) {
    for (int dir : {1, -1}) {
      const int64_t d = std::abs(dir * S.m2 - u * S.m1);
      if (d != 0) S.lcm = CheckedLcm(S.lcm, d);
    }
  }
  S.lcm = CheckedLcm(S.lcm, S.m1 + S.m2);
  S.cap1 = spec.max_segments;
  S.cap2 = spec.max_segments;
  return S;
}

Rational TicksToTime(const Search& S, int64_t ticks) {
  return S.h * Rational(ticks) / Rational(S.lcm);
}

struct Solution {
  Rational value;  // at distance 1
  GridPlan plan;
  int64_t states = 0;
  bool found = false;
};

Solution Solve(Variant variant, const Rational& v, const GridStrategySpec& spec) {
  const Search S = MakeSearch(variant, v, spec);
  std::optional<int64_t> seed;
  GridPlan seed_plan;
  if (spec.resolution % 2 == 0 && spec.resolution >= 4) {
    GridStrategySpec coarse = spec;
    coarse.resolution = spec.resolution / 2;
    const Solution c = Solve(variant, v, coarse);
    if (c.found) {
      const Rational ticks = c.value * Rational(S.lcm) / S.h;
      if (!ticks.is_integer()) {
        throw OracleError("coarse optimum is off the fine time lattice");
      }
      seed = ToInt64(ticks.numerator());
      // Every coarse step becomes two fine ones.
      seed_plan.step = S.h;
      for (size_t k = 0; k < c.plan.player_one.size(); ++k) {
        for (int r = 0; r < 2; ++r) {
          seed_plan.player_one.push_back(c.plan.player_one[k]);
          seed_plan.player_two.push_back(c.plan.player_two[k]);
        }
      }
      if (c.plan.drop_step) seed_plan.drop_step = 2 * *c.plan.drop_step;
    }
  }
  Outcome o = Run(S, seed, seed ? &seed_plan : nullptr);
  Solution sol;
  sol.found = o.found;
  if (o.found) sol.value = TicksToTime(S, o.cost);
  sol.plan = std::move(o.plan);
  sol.states = o.states;
  return sol;
}

}  // namespace

std::string GridPlan::ToString(const Rational& distance) const {
  std::ostringstream os;
  auto pieces = [&](const std::vector<int>& seq) {
    std::string out;
    size_t start = 0;
    for (size_t k = 1; k <= seq.size(); ++k) {
      if (k < seq.size() && seq[k] == seq[start]) continue;
      if (!out.empty()) out += " ";
      out += "[" + (Rational(static_cast<int64_t>(start)) * step * distance).ToString() +
             "," + (Rational(static_cast<int64_t>(k)) * step * distance).ToString() +
             ")" + (seq[start] > 0 ? "+" : seq[start] < 0 ? "-" : "0");
      start = k;
    }
    return out;
  };
  os << "I: " << pieces(player_one) << "; II: " << pieces(player_two);
  if (drop_step) {
    os << "; drop at "
       << (Rational(*drop_step) * step * distance).ToString();
  }
  return os.str();
}

SimulationAttempt ReplayGridPlan(const GameConfig& config,
                                 const GridPlan& plan) {
  SimulationAttempt bad;
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    bad.error = e.what();
    return bad;
  }
  if (plan.player_one.empty() ||
      plan.player_one.size() != plan.player_two.size()) {
    bad.error = "grid plan has mismatched or empty step lists";
    return bad;
  }
  if (plan.drop_step && !HasMarker(config.variant)) {
    bad.error = "drop step given for a game without marker";
    return bad;
  }
  GridMotionPlan motion(plan, plan.step * config.distance,
                        config.player_one_cap());
  return internal::RunEngine(config, motion, std::nullopt);
}

OracleResult BruteForceOpt(Variant variant, const Rational& v,
                           const GridStrategySpec& spec,
                           const Rational& distance) {
  if (distance.sign() <= 0) {
    throw std::invalid_argument("distance D must be positive");
  }
  Solution o = Solve(variant, v, spec);
  if (!o.found) {
    throw OracleError("no grid plan meets all agents within the horizon");
  }
  GameConfig config{v, distance, variant};
  SimulationAttempt replay = ReplayGridPlan(config, o.plan);
  if (!replay.result) {
    throw OracleError("oracle plan failed to replay: " + replay.error);
  }
  if (replay.result->outcome.sum != o.value * distance) {
    throw OracleError("oracle plan replays to " +
                      replay.result->outcome.sum.ToString() +
                      ", search value " + (o.value * distance).ToString());
  }
  OracleResult r;
  r.value = replay.result->outcome.sum;
  r.plan = std::move(o.plan);
  r.replay = std::move(*replay.result);
  r.states = o.states;
  return r;
}

}  // namespace rendezvous
