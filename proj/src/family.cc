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

#include "rendezvous/family.h"

#include <algorithm>

namespace rendezvous {
namespace {

char SignChar(int s) { return s > 0 ? '+' : '-'; }

char VariantChar(Variant v) {
  switch (v) {
    case Variant::kNoMarker:
      return 'N';
    case Variant::kMarkerSlow:
      return 'S';
    case Variant::kMarkerFast:
      return 'F';
  }
  return '?';
}

int ParseSign(char c) {
  if (c == '+') return 1;
  if (c == '-') return -1;
  throw FamilyError(std::string("bad sign character '") + c + "'");
}

// Accumulates sum_j coeff * (t_j - t_{j-1}) style expressions.
class Expr {
 public:
  void Add(int var, const Rational& c) {
    if (var < 0 || c.is_zero()) return;
    for (Term& t : terms_) {
      if (t.var == var) {
        t.coeff += c;
        return;
      }
    }
    terms_.push_back({var, c});
  }
  std::vector<Term> Take() {
    std::vector<Term> out;
    for (Term& t : terms_) {
      if (!t.coeff.is_zero()) out.push_back(std::move(t));
    }
    terms_.clear();
    return out;
  }

 private:
  std::vector<Term> terms_;
};

struct AgentRate {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

// Builds the program with player I capped at `cap` per unit time and the
// agents moving at a speed in `rate`. An exact rate enters the rows as a
// coefficient; a range introduces displacement variables bounded by
// rate.lo and rate.hi times the elapsed time.
FamilyProgram BuildGeneric(const ParameterAssignment& pa, const Rational& v,
                           const Rational& cap, const AgentRate& rate) {
  if (v.sign() < 0 || v > Rational(1)) {
    throw FamilyError("speed ratio v must lie in [0, 1], got " + v.ToString());
  }
  if (!IsValidOrder(pa.order)) throw FamilyError("invalid meeting order");
  const bool marker = HasMarker(pa.variant);
  if (marker && !IsBuildable(pa)) {
    throw FamilyError("find interval precedes drop interval in " + pa.Id());
  }

  FamilyProgram fp;
  LinearProgram& lp = fp.lp;
  VariableLayout& L = fp.layout;
  for (int i = 0; i < 4; ++i) {
    L.t[i] = lp.AddVariable("t" + std::to_string(i + 1));
  }
  for (int i = 0; i < 4; ++i) {
    L.disp[i] = lp.AddVariable("p" + std::to_string(i + 1));
  }
  const int k = marker ? pa.drop_interval - 1 : -1;  // 0-based drop segment
  if (marker) {
    L.z = lp.AddVariable("z");
    L.pre_disp = lp.AddVariable("q");
  }
  auto t_prev = [&](int j) { return j == 0 ? -1 : L.t[j - 1]; };

  std::vector<Term> obj;
  for (int i = 0; i < 4; ++i) obj.push_back({L.t[i], Rational(1)});
  lp.SetObjective(std::move(obj));

  Expr e;
  // Ordering and player I speed bounds.
  for (int j = 1; j < 4; ++j) {
    lp.AddGreaterEqual({{L.t[j], Rational(1)}, {L.t[j - 1], Rational(-1)}},
                       Rational(), "order" + std::to_string(j + 1));
  }
  for (int j = 0; j < 4; ++j) {
    e.Add(L.disp[j], Rational(1));
    e.Add(L.t[j], -cap);
    if (j == k) {
      e.Add(L.z, cap);
    } else {
      e.Add(t_prev(j), cap);
    }
    lp.AddLessEqual(e.Take(), Rational(), "speed" + std::to_string(j + 1));
  }
  if (marker) {
    e.Add(L.pre_disp, Rational(1));
    e.Add(L.z, -cap);
    e.Add(t_prev(k), cap);
    lp.AddLessEqual(e.Take(), Rational(), "speed_pre");
    e.Add(L.z, Rational(1));
    e.Add(t_prev(k), Rational(-1));
    lp.AddGreaterEqual(e.Take(), Rational(), "drop_lo");
    e.Add(L.t[k], Rational(1));
    e.Add(L.z, Rational(-1));
    lp.AddGreaterEqual(e.Take(), Rational(), "drop_hi");
  }

  // Relaxed rates: displacement variable `d` over [from, to] must lie in
  // [lo (to - from), hi (to - from)].
  auto bound_displacement = [&](int d, int from, int to,
                                const std::string& label) {
    e.Add(d, Rational(1));
    e.Add(to, -rate.lo);
    e.Add(from, rate.lo);
    lp.AddGreaterEqual(e.Take(), Rational(), label + "_lo");
    e.Add(d, Rational(1));
    e.Add(to, -rate.hi);
    e.Add(from, rate.hi);
    lp.AddLessEqual(e.Take(), Rational(), label + "_hi");
  };
  std::array<int, 4> seg_disp{-1, -1, -1, -1};
  if (!rate.exact()) {
    for (int j = 0; j < 4; ++j) {
      const std::string name = "e" + std::to_string(j + 1);
      seg_disp[j] = lp.AddVariable(name);
      bound_displacement(seg_disp[j], t_prev(j), L.t[j], name);
    }
  }

  auto add_player_one = [&](int upto) {
    for (int j = 0; j <= upto; ++j) e.Add(L.disp[j], Rational(-pa.a[j]));
    if (marker && upto >= k) e.Add(L.pre_disp, Rational(-pa.a0));
  };
  auto add_marker = [&]() {
    for (int j = 0; j < k; ++j) e.Add(L.disp[j], Rational(-pa.a[j]));
    e.Add(L.pre_disp, Rational(-pa.a0));
  };
  // Agent displacement over whole segments [0, m) with the plan's signs.
  auto add_agent_prefix = [&](const AgentId& ag, int m) {
    const Rational b(ag.forward);
    for (int j = 0; j < m; ++j) {
      const Rational bd = b * Rational(pa.d[j]);
      if (rate.exact()) {
        e.Add(L.t[j], bd * rate.lo);
        e.Add(t_prev(j), -bd * rate.lo);
      } else {
        e.Add(seg_disp[j], bd);
      }
    }
  };
  // Displacement in direction d_m from t_{m-1} to `end`, either through
  // the exact rate or through the given displacement variables.
  auto add_agent_tail = [&](const AgentId& ag, int m, int end,
                            std::initializer_list<int> disp_vars) {
    const Rational bd = Rational(ag.forward) * Rational(pa.d[m]);
    if (rate.exact()) {
      e.Add(end, bd * rate.lo);
      e.Add(t_prev(m), -bd * rate.lo);
    } else {
      for (int var : disp_vars) e.Add(var, bd);
    }
  };

  for (int i = 0; i < 4; ++i) {
    const AgentId& ag = pa.order[i];
    const int m = marker ? pa.find[i] - 1 : -1;  // 0-based find segment
    const std::string slot = std::to_string(i + 1);
    if (m < 0) {
      // agent(t_i) - playerI(t_i) = 0  ->  terms = -o
      add_agent_prefix(ag, i);
      add_agent_tail(ag, i, L.t[i], {seg_disp[i]});
      add_player_one(i);
      lp.AddEquality(e.Take(), Rational(-ag.origin), "meet" + slot);
      continue;
    }

    const int tau = lp.AddVariable("f" + slot);
    L.find_time[i] = tau;
    int before = -1, after = -1;
    if (!rate.exact()) {
      before = lp.AddVariable("h" + slot);
      after = lp.AddVariable("r" + slot);
      bound_displacement(before, t_prev(m), tau, "h" + slot);
      bound_displacement(after, tau, L.t[i], "r" + slot);
      // The rest of segment m after the find.
      e.Add(seg_disp[m], Rational(1));
      e.Add(before, Rational(-1));
      e.Add(L.t[m], -rate.lo);
      e.Add(tau, rate.lo);
      lp.AddGreaterEqual(e.Take(), Rational(), "rest" + slot + "_lo");
      e.Add(seg_disp[m], Rational(1));
      e.Add(before, Rational(-1));
      e.Add(L.t[m], -rate.hi);
      e.Add(tau, rate.hi);
      lp.AddLessEqual(e.Take(), Rational(), "rest" + slot + "_hi");
    }
    add_agent_prefix(ag, m);
    add_agent_tail(ag, m, L.t[i], {before, after});
    add_player_one(i);
    lp.AddEquality(e.Take(), Rational(-ag.origin), "meet" + slot);

    add_agent_prefix(ag, m);
    add_agent_tail(ag, m, tau, {before});
    add_marker();
    lp.AddEquality(e.Take(), Rational(-ag.origin), "find" + slot);
    e.Add(tau, Rational(1));
    e.Add(t_prev(m), Rational(-1));
    lp.AddGreaterEqual(e.Take(), Rational(), "find_lo" + slot);
    e.Add(L.t[m], Rational(1));
    e.Add(tau, Rational(-1));
    lp.AddGreaterEqual(e.Take(), Rational(), "find_hi" + slot);
    e.Add(tau, Rational(1));
    e.Add(L.z, Rational(-1));
    lp.AddGreaterEqual(e.Take(), Rational(), "find_after_drop" + slot);
  }
  return fp;
}

void RequireVariant(const ParameterAssignment& pa, Variant v) {
  if (pa.variant != v) {
    throw FamilyError(std::string("assignment variant is ") +
                      ToString(pa.variant) + ", builder expects " +
                      ToString(v));
  }
}

}  // namespace

std::string ParameterAssignment::Id() const {
  std::string s;
  s.reserve(32);
  s.push_back(VariantChar(variant));
  s += '.';
  s += OrderString(order);
  s += ".d";
  for (int x : d) s.push_back(SignChar(x));
  s += ".a";
  if (HasMarker(variant)) s.push_back(SignChar(a0));
  for (int x : a) s.push_back(SignChar(x));
  if (HasMarker(variant)) {
    s += ".z";
    s.push_back(static_cast<char>('0' + drop_interval));
    s += ".f";
    for (int i = 1; i < 4; ++i) s.push_back(static_cast<char>('0' + find[i]));
  }
  return s;
}

ParameterAssignment ParameterAssignment::FromId(const std::string& id) {
  ParameterAssignment pa;
  auto fail = [&]() -> FamilyError {
    return FamilyError("malformed assignment id '" + id + "'");
  };
  if (id.size() < 18) throw fail();
  switch (id[0]) {
    case 'N':
      pa.variant = Variant::kNoMarker;
      break;
    case 'S':
      pa.variant = Variant::kMarkerSlow;
      break;
    case 'F':
      pa.variant = Variant::kMarkerFast;
      break;
    default:
      throw fail();
  }
  const bool marker = HasMarker(pa.variant);
  const std::string expect_prefix = marker ? "X.0000.d0000.a00000.z0.f000"
                                           : "X.0000.d0000.a0000";
  if (id.size() != expect_prefix.size()) throw fail();
  for (size_t i = 0; i < id.size(); ++i) {
    if (expect_prefix[i] != '0' && expect_prefix[i] != 'X' &&
        id[i] != expect_prefix[i]) {
      throw fail();
    }
  }
  try {
    for (int i = 0; i < 4; ++i) {
      const int n = id[2 + i] - '0';
      pa.order[i] = AgentId::FromNumber(n);
    }
    for (int i = 0; i < 4; ++i) pa.d[i] = static_cast<int8_t>(ParseSign(id[8 + i]));
    size_t pos = 14;
    if (marker) pa.a0 = static_cast<int8_t>(ParseSign(id[pos++]));
    for (int i = 0; i < 4; ++i) {
      pa.a[i] = static_cast<int8_t>(ParseSign(id[pos++]));
    }
    if (marker) {
      pa.drop_interval = static_cast<int8_t>(id[pos + 2] - '0');
      for (int i = 1; i < 4; ++i) {
        pa.find[i] = static_cast<int8_t>(id[pos + 4 + i] - '0');
      }
    }
  } catch (const std::invalid_argument&) {
    throw fail();
  }
  if (!IsValidOrder(pa.order)) throw fail();
  if (marker) {
    if (pa.drop_interval < 1 || pa.drop_interval > 4) throw fail();
    for (int i = 1; i < 4; ++i) {
      if (pa.find[i] < 0 || pa.find[i] > i) throw fail();
    }
  }
  return pa;
}

std::vector<ParameterAssignment> Enumerate(Variant variant) {
  std::vector<MeetingOrder> orders;
  std::array<int, 4> perm{1, 2, 3, 4};
  do {
    MeetingOrder o;
    for (int i = 0; i < 4; ++i) o[i] = AgentId::FromNumber(perm[i]);
    orders.push_back(o);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto signs = [](int count, int mask, int offset) {
    // Bit set means '-'; '+' sorts before '-'.
    std::array<int8_t, 4> s{1, 1, 1, 1};
    for (int i = 0; i < count; ++i) {
      s[offset + i] = (mask >> (count - 1 - i)) & 1 ? -1 : 1;
    }
    return s;
  };

  std::vector<ParameterAssignment> out;
  const bool marker = HasMarker(variant);
  for (const MeetingOrder& o : orders) {
    for (int dm = 0; dm < 8; ++dm) {
      const auto d = signs(3, dm, 1);
      if (!marker) {
        for (int am = 0; am < 8; ++am) {
          ParameterAssignment pa;
          pa.variant = variant;
          pa.order = o;
          pa.d = d;
          pa.a = signs(3, am, 1);
          out.push_back(pa);
        }
        continue;
      }
      for (int am = 0; am < 32; ++am) {
        const int8_t a0 = (am >> 4) & 1 ? -1 : 1;
        const auto a = signs(4, am & 15, 0);
        for (int z = 1; z <= 4; ++z) {
          for (int f2 = 0; f2 <= 1; ++f2) {
            for (int f3 = 0; f3 <= 2; ++f3) {
              for (int f4 = 0; f4 <= 3; ++f4) {
                ParameterAssignment pa;
                pa.variant = variant;
                pa.order = o;
                pa.d = d;
                pa.a = a;
                pa.a0 = a0;
                pa.drop_interval = static_cast<int8_t>(z);
                pa.find = {0, static_cast<int8_t>(f2), static_cast<int8_t>(f3),
                           static_cast<int8_t>(f4)};
                out.push_back(pa);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

bool IsBuildable(const ParameterAssignment& pa) {
  if (!HasMarker(pa.variant)) return true;
  if (pa.drop_interval < 1 || pa.drop_interval > 4 || pa.find[0] != 0) {
    return false;
  }
  for (int i = 1; i < 4; ++i) {
    if (pa.find[i] < 0 || pa.find[i] > i) return false;
    if (pa.find[i] != 0 && pa.find[i] < pa.drop_interval) return false;
  }
  return true;
}

FamilyProgram BuildNoMarker(const ParameterAssignment& pa, const Rational& v) {
  RequireVariant(pa, Variant::kNoMarker);
  return BuildGeneric(pa, v, v, {Rational(1), Rational(1)});
}

FamilyProgram BuildMarkerSlow(const ParameterAssignment& pa,
                              const Rational& v) {
  RequireVariant(pa, Variant::kMarkerSlow);
  return BuildGeneric(pa, v, v, {Rational(1), Rational(1)});
}

FamilyProgram BuildMarkerFast(const ParameterAssignment& pa,
                              const Rational& v) {
  RequireVariant(pa, Variant::kMarkerFast);
  return BuildGeneric(pa, v, Rational(1), {v, v});
}

FamilyProgram BuildMarkerFastRelaxed(const ParameterAssignment& pa,
                                     const Rational& v_lo,
                                     const Rational& v_hi) {
  RequireVariant(pa, Variant::kMarkerFast);
  if (v_hi < v_lo) throw FamilyError("empty speed range");
  return BuildGeneric(pa, v_hi, Rational(1), {v_lo, v_hi});
}

FamilyProgram Build(const ParameterAssignment& pa, const Rational& v) {
  switch (pa.variant) {
    case Variant::kNoMarker:
      return BuildNoMarker(pa, v);
    case Variant::kMarkerSlow:
      return BuildMarkerSlow(pa, v);
    case Variant::kMarkerFast:
      return BuildMarkerFast(pa, v);
  }
  throw FamilyError("unknown variant");
}

}  // namespace rendezvous
