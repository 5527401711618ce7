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

#include "rendezvous/sweep.h"

#include <gtest/gtest.h>

namespace rendezvous {
namespace {

using R = Rational;

void ExpectSameRows(const SweepTable& a, const SweepTable& b) {
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    SCOPED_TRACE("v=" + a.rows[i].v.ToString());
    EXPECT_EQ(a.rows[i].v, b.rows[i].v);
    EXPECT_EQ(a.rows[i].opt, b.rows[i].opt);
    EXPECT_EQ(a.rows[i].next_to_opt, b.rows[i].next_to_opt);
    EXPECT_EQ(a.rows[i].best.id, b.rows[i].best.id);
    EXPECT_EQ(a.rows[i].best.signature, b.rows[i].best.signature);
  }
}

TEST(SweepTest, PruningDoesNotChangeNoMarkerTable) {
  SweepOptions full;
  full.prune = false;
  const SweepTable pruned = Sweep(Variant::kNoMarker, 20);
  const SweepTable all = Sweep(Variant::kNoMarker, 20, full);
  ExpectSameRows(pruned, all);
  for (const SweepRow& r : all.rows) EXPECT_EQ(r.solved, 1536);
}

TEST(SweepTest, PruningDoesNotChangeSlowMarkerTable) {
  SweepOptions full;
  full.prune = false;
  ExpectSameRows(Sweep(Variant::kMarkerSlow, 2),
                 Sweep(Variant::kMarkerSlow, 2, full));
}

TEST(SweepTest, SerialAndParallelRankingsAgree) {
  SolveOptions serial;
  serial.execution = Execution::kSerial;
  const FamilyRanking a = SolveFamily(Variant::kNoMarker, R(3, 7), serial);
  const FamilyRanking b = SolveFamily(Variant::kNoMarker, R(3, 7));
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].id, b.entries[i].id);
    EXPECT_EQ(a.entries[i].objective, b.entries[i].objective);
    EXPECT_EQ(a.entries[i].valid, b.entries[i].valid);
  }
  EXPECT_EQ(a.built, b.built);
  EXPECT_EQ(a.infeasible, b.infeasible);
}

TEST(SweepTest, RankingInvariants) {
  const FamilyRanking r = SolveFamily(Variant::kNoMarker, R(1, 2));
  EXPECT_EQ(r.built, 1536);
  const RankedEntry* best = r.Best();
  ASSERT_NE(best, nullptr);
  EXPECT_EQ(best->objective, R(68, 9));
  EXPECT_EQ(Opt(r), R(68, 9));
  const R next = NextToOpt(r);
  EXPECT_GE(next, Opt(r));
  for (size_t i = 1; i < r.entries.size(); ++i) {
    EXPECT_LE(r.entries[i - 1].objective, r.entries[i].objective);
  }
  bool witnessed = false;
  for (const RankedEntry& e : r.entries) {
    if (!e.valid) continue;
    R sum;
    for (const R& t : e.times) sum += t;
    EXPECT_EQ(sum, e.objective) << e.id;
    if (e.signature == best->signature) {
      EXPECT_GE(e.objective, Opt(r));
    } else {
      EXPECT_GE(e.objective, next) << e.id;
      witnessed |= e.objective == next;
    }
  }
  EXPECT_TRUE(witnessed);
}

TEST(SweepTest, TableProperties) {
  const SweepTable none = Sweep(Variant::kNoMarker, 20);
  const SweepTable slow = Sweep(Variant::kMarkerSlow, 4);
  ASSERT_EQ(none.rows.size(), 20u);
  for (size_t i = 0; i < none.rows.size(); ++i) {
    EXPECT_EQ(none.rows[i].v, R(static_cast<int64_t>(i + 1), 20));
    EXPECT_LE(none.rows[i].opt, R(8));
    EXPECT_LE(none.rows[i].opt, none.rows[i].next_to_opt);
    if (i > 0) EXPECT_LE(none.rows[i].opt, none.rows[i - 1].opt);
  }
  EXPECT_EQ(none.rows.back().opt, R(13, 2));
  for (size_t i = 0; i < slow.rows.size(); ++i) {
    // Every fifth row of the no-marker table shares v with this one.
    EXPECT_EQ(slow.rows[i].v, none.rows[5 * i + 4].v);
    EXPECT_LE(slow.rows[i].opt, none.rows[5 * i + 4].opt);
    if (i > 0) EXPECT_LE(slow.rows[i].opt, slow.rows[i - 1].opt);
  }
  EXPECT_EQ(slow.rows.back().opt, R(6));
}

TEST(SweepTest, GameValueEndpoints) {
  EXPECT_EQ(GameValue(Variant::kNoMarker, R(0)), R(8));
  EXPECT_EQ(GameValue(Variant::kNoMarker, R(1)), R(13, 2));
  EXPECT_EQ(GameValue(Variant::kMarkerSlow, R(1)), R(6));
  EXPECT_EQ(GameValue(Variant::kMarkerFast, R(1)), R(6));
  EXPECT_THROW(GameValue(Variant::kNoMarker, R(3, 2)), std::invalid_argument);
}

}  // namespace
}  // namespace rendezvous
