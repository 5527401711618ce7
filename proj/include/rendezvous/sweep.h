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

// Whole-family solves at one speed ratio and sweeps over a grid of ratios.

#ifndef RENDEZVOUS_SWEEP_H_
#define RENDEZVOUS_SWEEP_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rendezvous/family.h"
#include "rendezvous/game.h"

namespace rendezvous {

// Raised when an LP optimum fails its duality certificate or a table breaks
// an invariant that must hold by construction.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankedEntry {
  std::string id;
  Variant variant = Variant::kNoMarker;
  std::string signature;  // empty when the replay failed
  Rational objective;
  bool valid = false;
  std::string reason;  // why check_solution rejected it
  std::array<Rational, 4> times;
  int drop_interval = 0;
  std::optional<Rational> drop_time;
  std::array<std::optional<Rational>, 4> find_times;  // per slot, LP values
};

struct FamilyRanking {
  Variant variant = Variant::kNoMarker;
  Rational v;
  // Optimal LP results sorted by (objective, id); invalid ones included.
  std::vector<RankedEntry> entries;
  int64_t built = 0;
  int64_t infeasible = 0;
  int64_t invalid = 0;

  // First valid entry, nullptr when there is none.
  const RankedEntry* Best() const;
};

enum class Execution { kSerial, kParallel };

struct SolveOptions {
  Execution execution = Execution::kParallel;
  int threads = 0;  // 0: OpenMP default
};

// Builds, solves, certificate-checks and replays every buildable member of
// the family at v. Throws InconsistencyError on a failed certificate and
// std::invalid_argument when v is outside [0, 1].
FamilyRanking SolveFamily(Variant variant, const Rational& v,
                          const SolveOptions& options = {});

// Solves and checks a single assignment; nullopt when the LP is infeasible.
std::optional<RankedEntry> SolveAssignment(const ParameterAssignment& pa,
                                           const Rational& v);

// Least valid objective.
Rational Opt(const FamilyRanking& ranking);
// Least valid objective among entries whose signature differs from that of
// the best entry. Throws std::domain_error with fewer than two signatures.
Rational NextToOpt(const FamilyRanking& ranking);

// Union of two rankings at the same v, re-sorted.
FamilyRanking MergeRankings(const FamilyRanking& a, const FamilyRanking& b);

struct SweepRow {
  Rational v;
  Rational opt;
  Rational next_to_opt;
  RankedEntry best;
  int64_t solved = 0;  // LPs solved for this row
};

struct SweepTable {
  Variant variant = Variant::kNoMarker;
  int steps = 0;
  std::vector<SweepRow> rows;  // v = k / steps, k = 1..steps
};

struct SweepOptions {
  SolveOptions solve;
  // Skip family members that provably cannot be optimal or next to optimal.
  // Results are identical with and without pruning.
  bool prune = true;
  std::function<void(const std::string&)> progress;
};

// For marker variants every row ranks the marker family together with the
// no-marker family, since the holder may keep the marker; opt is then the
// game value.
SweepTable Sweep(Variant variant, int steps, const SweepOptions& options = {});

// NoMarker: family optimum. Marker variants: min(family optimum, NoMarker
// optimum).
Rational GameValue(Variant variant, const Rational& v,
                   const SolveOptions& options = {});

}  // namespace rendezvous

#endif  // RENDEZVOUS_SWEEP_H_
