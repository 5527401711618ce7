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

// Canonical strategy signatures computed from realized motion.

#ifndef RENDEZVOUS_SIGNATURE_H_
#define RENDEZVOUS_SIGNATURE_H_

#include <string>

#include "rendezvous/game.h"

namespace rendezvous {

// Event string of a replay: maximal pieces of constant motion, each written
// as the sign of player I's velocity followed by the travel direction of
// every agent (0 once met), interleaved with rendezvous groups "M{agents}".
// The string is reduced to its smallest image under the reflection of the
// line and the relabeling of player II's forward direction. It depends only
// on realized motion: segment signs on zero-length or zero-speed pieces, the
// listing order of simultaneous rendezvous, and a marker nobody uses to
// change course leave it unchanged.
std::string StrategySignature(const SimulationResult& replay);

}  // namespace rendezvous

#endif  // RENDEZVOUS_SIGNATURE_H_
