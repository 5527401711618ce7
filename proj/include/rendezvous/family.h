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

// Parametric LP families. Fixing every discrete choice of a strategy pair
// (meeting order, direction signs, drop segment, which agents find the
// marker in which segment) leaves a linear program in the rendezvous times
// and the displacement magnitudes.

#ifndef RENDEZVOUS_FAMILY_H_
#define RENDEZVOUS_FAMILY_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rendezvous/game.h"
#include "rendezvous/lp.h"

namespace rendezvous {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParameterAssignment {
  Variant variant = Variant::kNoMarker;
  MeetingOrder order;
  std::array<int8_t, 4> d{1, 1, 1, 1};  // player II segment directions
  std::array<int8_t, 4> a{1, 1, 1, 1};  // player I segment signs
  int8_t a0 = 1;                        // player I sign before the drop
  int8_t drop_interval = 0;             // 1..4 with a marker, else 0
  // find[i] is the segment (1..i) in which the slot-(i+1) agent finds the
  // marker, 0 for none. find[0] is always 0.
  std::array<int8_t, 4> find{0, 0, 0, 0};

  // Stable identifier, e.g. "N.2314.d++--.a+-+-" or
  // "S.2314.d++--.a-+-+-.z1.f100" (a0 first, finds for slots 2..4).
  // Lexicographic order of ids equals enumeration order within a variant.
  std::string Id() const;
  static ParameterAssignment FromId(const std::string& id);

  friend bool operator==(const ParameterAssignment&,
                         const ParameterAssignment&) = default;
};

// Variable indices of a built program.
struct VariableLayout {
  std::array<int, 4> t{-1, -1, -1, -1};     // rendezvous times
  std::array<int, 4> disp{-1, -1, -1, -1};  // player I displacement per segment
  int z = -1;                               // drop time
  int pre_disp = -1;                        // player I displacement before drop
  std::array<int, 4> find_time{-1, -1, -1, -1};  // per slot
};

struct FamilyProgram {
  LinearProgram lp;
  VariableLayout layout;
};

// NoMarker: 24 orders x 8 d-tuples x 8 a-tuples = 1536 (a1 = d1 = +1).
// Marker variants: 24 orders x 8 d x 16 a x 2 a0 x 4 drop intervals x 24 find
// patterns = 589,824 (d1 = +1). Sorted by id.
std::vector<ParameterAssignment> Enumerate(Variant variant);

// True iff every declared find segment is reachable after the drop
// (find segment >= drop segment). Other marker assignments are rejected by
// the builders.
bool IsBuildable(const ParameterAssignment& assignment);

FamilyProgram BuildNoMarker(const ParameterAssignment& assignment,
                            const Rational& v);
FamilyProgram BuildMarkerSlow(const ParameterAssignment& assignment,
                              const Rational& v);
FamilyProgram BuildMarkerFast(const ParameterAssignment& assignment,
                              const Rational& v);
// Dispatches on assignment.variant.
FamilyProgram Build(const ParameterAssignment& assignment, const Rational& v);

// Relaxation of BuildMarkerFast valid for every v in [v_lo, v_hi]: the
// agents' displacement over each stretch of time may lie anywhere between
// v_lo and v_hi times its duration. Its optimum is a lower bound on the exact
// program's optimum at each such v, and infeasibility rules out the whole
// range. With v_lo = v_hi the optimum equals the exact one.
FamilyProgram BuildMarkerFastRelaxed(const ParameterAssignment& assignment,
                                     const Rational& v_lo,
                                     const Rational& v_hi);

}  // namespace rendezvous

#endif  // RENDEZVOUS_FAMILY_H_
