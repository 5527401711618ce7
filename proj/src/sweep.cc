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

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <mutex>

#include "rendezvous/replay.h"
#include "rendezvous/signature.h"

namespace rendezvous {
namespace {

const std::vector<ParameterAssignment>& Buildable(Variant variant) {
  static const std::array<std::vector<ParameterAssignment>, 3> cache = [] {
    std::array<std::vector<ParameterAssignment>, 3> c;
    for (Variant v : {Variant::kNoMarker, Variant::kMarkerSlow,
                      Variant::kMarkerFast}) {
      for (ParameterAssignment& pa : Enumerate(v)) {
        if (IsBuildable(pa)) c[static_cast<int>(v)].push_back(std::move(pa));
      }
    }
    return c;
  }();
  return cache[static_cast<int>(variant)];
}

bool EntryLess(const RankedEntry& a, const RankedEntry& b) {
  if (a.objective != b.objective) return a.objective < b.objective;
  return a.id < b.id;
}

void ValidateV(const Rational& v) {
  if (v.sign() < 0 || v > Rational(1)) {
    throw std::invalid_argument("speed ratio v must lie in [0, 1], got " +
                                v.ToString());
  }
}

int ThreadCount(const SolveOptions& o) {
  if (o.execution == Execution::kSerial) return 1;
  return o.threads > 0 ? o.threads : omp_get_max_threads();
}

// Runs body(i) for i in [0, n), serially or on an OpenMP team. The first
// exception thrown by any iteration is rethrown after the loop.
template <typename Body>
void ForEach(int64_t n, const SolveOptions& options, Body&& body) {
  if (options.execution == Execution::kSerial) {
    for (int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 16) num_threads(ThreadCount(options))
  for (int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

// Opt and next-to-opt of a sorted list of entries, if defined.
struct Extremes {
  const RankedEntry* best = nullptr;
  std::optional<Rational> next;
};

Extremes FindExtremes(const std::vector<RankedEntry>& sorted) {
  Extremes x;
  for (const RankedEntry& e : sorted) {
    if (!e.valid) continue;
    if (!x.best) {
      x.best = &e;
    } else if (e.signature != x.best->signature) {
      x.next = e.objective;
      break;
    }
  }
  return x;
}

SweepRow MakeRow(const Rational& v, std::vector<RankedEntry> entries,
                 int64_t solved, Variant variant) {
  std::sort(entries.begin(), entries.end(), EntryLess);
  const Extremes x = FindExtremes(entries);
  if (!x.best || !x.next) {
    throw InconsistencyError(std::string("fewer than two valid strategies in ") +
                             ToString(variant) + " ranking at v=" +
                             v.ToString());
  }
  SweepRow row;
  row.v = v;
  row.opt = x.best->objective;
  row.next_to_opt = *x.next;
  row.best = *x.best;
  row.solved = solved;
  return row;
}

// Entries at or below the next-to-opt value: everything another ranking
// needs when it is merged with this one.
std::vector<RankedEntry> Head(const std::vector<RankedEntry>& sorted) {
  const Extremes x = FindExtremes(sorted);
  std::vector<RankedEntry> out;
  for (const RankedEntry& e : sorted) {
    if (x.next && e.objective > *x.next) break;
    out.push_back(e);
  }
  return out;
}

std::vector<Rational> Grid(int steps) {
  std::vector<Rational> g;
  for (int k = 1; k <= steps; ++k) g.emplace_back(k, steps);
  return g;
}

// Per grid point: the family entries that can matter for opt and next to
// opt (sorted), plus the number of LPs solved there.
struct Partial {
  std::vector<RankedEntry> entries;
  int64_t solved = 0;
};

std::vector<Partial> ExhaustivePartials(Variant variant, int steps,
                                        const SweepOptions& options) {
  std::vector<Partial> out;
  for (const Rational& v : Grid(steps)) {
    FamilyRanking r = SolveFamily(variant, v, options.solve);
    out.push_back({std::move(r.entries), r.built});
    if (options.progress) {
      options.progress(std::string(ToString(variant)) + " v=" + v.ToString());
    }
  }
  return out;
}

// Families whose LP value is nonincreasing in v: NoMarker and MarkerSlow
// (raising v only enlarges player I's displacement bounds). Walking the grid
// downward, each member's last computed value is a lower bound for the
// current point and infeasibility is permanent. Members are solved in
// order of their bound until the bound exceeds the current next-to-opt.
std::vector<Partial> MonotonePartials(Variant variant, int steps,
                                      const SweepOptions& options) {
  const auto& all = Buildable(variant);
  const std::vector<Rational> grid = Grid(steps);
  std::vector<Partial> out(grid.size());

  struct Active {
    int64_t index;
    Rational bound;
  };
  std::vector<Active> active;
  {
    const Rational& v = grid.back();
    std::vector<std::optional<RankedEntry>> res(all.size());
    ForEach(static_cast<int64_t>(all.size()), options.solve,
            [&](int64_t i) { res[i] = SolveAssignment(all[i], v); });
    Partial& p = out.back();
    for (size_t i = 0; i < all.size(); ++i) {
      if (!res[i]) continue;
      active.push_back({static_cast<int64_t>(i), res[i]->objective});
      p.entries.push_back(std::move(*res[i]));
    }
    p.solved = static_cast<int64_t>(all.size());
    std::sort(p.entries.begin(), p.entries.end(), EntryLess);
    p.entries = Head(p.entries);
    if (options.progress) {
      options.progress(std::string(ToString(variant)) + " v=" + v.ToString());
    }
  }

  constexpr size_t kBatch = 32;
  for (int g = static_cast<int>(grid.size()) - 2; g >= 0; --g) {
    const Rational& v = grid[g];
    std::sort(active.begin(), active.end(),
              [](const Active& a, const Active& b) {
                if (a.bound != b.bound) return a.bound < b.bound;
                return a.index < b.index;
              });
    std::vector<RankedEntry> solved;
    std::vector<bool> dead(active.size(), false);
    std::optional<Rational> threshold;
    size_t p = 0;
    while (p < active.size() && (!threshold || active[p].bound <= *threshold)) {
      size_t end = p;
      while (end < active.size() && end - p < kBatch &&
             (!threshold || active[end].bound <= *threshold)) {
        ++end;
      }
      std::vector<std::optional<RankedEntry>> res(end - p);
      ForEach(static_cast<int64_t>(end - p), options.solve, [&](int64_t i) {
        res[i] = SolveAssignment(all[active[p + i].index], v);
      });
      for (size_t i = 0; i < res.size(); ++i) {
        if (!res[i]) {
          dead[p + i] = true;
          continue;
        }
        active[p + i].bound = res[i]->objective;
        solved.push_back(std::move(*res[i]));
      }
      out[g].solved += static_cast<int64_t>(res.size());
      p = end;
      std::sort(solved.begin(), solved.end(), EntryLess);
      threshold = FindExtremes(solved).next;
    }
    std::vector<Active> kept;
    for (size_t i = 0; i < active.size(); ++i) {
      if (!dead[i]) kept.push_back(std::move(active[i]));
    }
    active = std::move(kept);
    out[g].entries = Head(solved);
    if (options.progress) {
      options.progress(std::string(ToString(variant)) + " v=" + v.ToString());
    }
  }
  return out;
}

// Range-maximum queries over a fixed array.
class SparseMax {
 public:
  explicit SparseMax(std::vector<Rational> values) {
    table_.push_back(std::move(values));
    const size_t n = table_[0].size();
    for (size_t w = 1; 2 * w <= n; w *= 2) {
      const auto& prev = table_.back();
      std::vector<Rational> next(n - 2 * w + 1);
      for (size_t i = 0; i < next.size(); ++i) {
        next[i] = max(prev[i], prev[i + w]);
      }
      table_.push_back(std::move(next));
    }
  }
  // Maximum over [lo, hi].
  const Rational& Query(size_t lo, size_t hi) const {
    size_t level = 0;
    while ((size_t{2} << level) <= hi - lo + 1) ++level;
    const Rational& a = table_[level][lo];
    const Rational& b = table_[level][hi + 1 - (size_t{1} << level)];
    return a < b ? b : a;
  }

 private:
  std::vector<std::vector<Rational>> table_;
};

// MarkerFast values are not monotone in v. Each member is examined on a
// bisection of the grid: a relaxed program valid on a whole range gives a
// lower bound there, and ranges where the bound exceeds `ceiling` (an upper
// bound on the merged next-to-opt at every point) are skipped. Single
// points are solved exactly and kept when at or below the ceiling.
std::vector<Partial> FastPartials(int steps, const std::vector<Rational>& ceiling,
                                  const SweepOptions& options) {
  const auto& all = Buildable(Variant::kMarkerFast);
  const std::vector<Rational> grid = Grid(steps);
  const SparseMax cap(ceiling);
  std::vector<std::vector<std::pair<size_t, RankedEntry>>> found(all.size());
  std::vector<int64_t> exact_solves(grid.size(), 0);
  std::atomic<int64_t> done{0};
  std::mutex mu;

  ForEach(static_cast<int64_t>(all.size()), options.solve, [&](int64_t i) {
    const ParameterAssignment& pa = all[i];
    std::vector<std::pair<size_t, size_t>> stack{{0, grid.size() - 1}};
    std::vector<size_t> solved_at;
    while (!stack.empty()) {
      const auto [lo, hi] = stack.back();
      stack.pop_back();
      const Rational& limit = cap.Query(lo, hi);
      if (lo == hi) {
        solved_at.push_back(lo);
        std::optional<RankedEntry> e = SolveAssignment(pa, grid[lo]);
        if (e && e->objective <= limit) found[i].emplace_back(lo, std::move(*e));
        continue;
      }
      const LpResult r =
          Solve(BuildMarkerFastRelaxed(pa, grid[lo], grid[hi]).lp);
      if (r.status != LpStatus::kOptimal || r.objective > limit) continue;
      const size_t mid = lo + (hi - lo) / 2;
      stack.push_back({mid + 1, hi});
      stack.push_back({lo, mid});
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      for (size_t g : solved_at) ++exact_solves[g];
    }
    const int64_t d = ++done;
    if (options.progress && d % 20000 == 0) {
      std::lock_guard<std::mutex> lock(mu);
      options.progress("fast-marker members " + std::to_string(d) + "/" +
                       std::to_string(all.size()));
    }
  });

  std::vector<Partial> out(grid.size());
  for (size_t g = 0; g < grid.size(); ++g) out[g].solved = exact_solves[g];
  for (auto& list : found) {
    for (auto& [g, e] : list) out[g].entries.push_back(std::move(e));
  }
  for (Partial& p : out) {
    std::sort(p.entries.begin(), p.entries.end(), EntryLess);
  }
  return out;
}

}  // namespace

const RankedEntry* FamilyRanking::Best() const {
  for (const RankedEntry& e : entries) {
    if (e.valid) return &e;
  }
  return nullptr;
}

std::optional<RankedEntry> SolveAssignment(const ParameterAssignment& pa,
                                           const Rational& v) {
  const FamilyProgram fp = Build(pa, v);
  const LpResult r = Solve(fp.lp);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  if (!VerifyOptimality(fp.lp, r)) {
    throw InconsistencyError("optimality certificate rejected for " + pa.Id() +
                             " at v=" + v.ToString());
  }
  RankedEntry e;
  e.id = pa.Id();
  e.variant = pa.variant;
  e.objective = r.objective;
  for (int i = 0; i < 4; ++i) {
    e.times[i] = r.primal[fp.layout.t[i]];
    if (fp.layout.find_time[i] >= 0) {
      e.find_times[i] = r.primal[fp.layout.find_time[i]];
    }
  }
  if (fp.layout.z >= 0) {
    e.drop_interval = pa.drop_interval;
    e.drop_time = r.primal[fp.layout.z];
  }
  const SolutionCheck check =
      CheckSolution(GameConfig{v, Rational(1), pa.variant}, pa, fp, r);
  e.valid = check.valid;
  e.reason = check.reason;
  if (check.replay) e.signature = StrategySignature(*check.replay);
  return e;
}

FamilyRanking SolveFamily(Variant variant, const Rational& v,
                          const SolveOptions& options) {
  ValidateV(v);
  const auto& all = Buildable(variant);
  std::vector<std::optional<RankedEntry>> res(all.size());
  ForEach(static_cast<int64_t>(all.size()), options,
          [&](int64_t i) { res[i] = SolveAssignment(all[i], v); });
  FamilyRanking ranking;
  ranking.variant = variant;
  ranking.v = v;
  ranking.built = static_cast<int64_t>(all.size());
  for (auto& e : res) {
    if (!e) {
      ++ranking.infeasible;
      continue;
    }
    if (!e->valid) ++ranking.invalid;
    ranking.entries.push_back(std::move(*e));
  }
  std::sort(ranking.entries.begin(), ranking.entries.end(), EntryLess);
  return ranking;
}

Rational Opt(const FamilyRanking& ranking) {
  const RankedEntry* best = ranking.Best();
  if (!best) throw std::domain_error("ranking has no valid entry");
  return best->objective;
}

Rational NextToOpt(const FamilyRanking& ranking) {
  const Extremes x = FindExtremes(ranking.entries);
  if (!x.next) {
    throw std::domain_error("ranking has fewer than two strategy signatures");
  }
  return *x.next;
}

FamilyRanking MergeRankings(const FamilyRanking& a, const FamilyRanking& b) {
  if (a.v != b.v) throw std::invalid_argument("rankings at different v");
  FamilyRanking m = a;
  m.entries.insert(m.entries.end(), b.entries.begin(), b.entries.end());
  std::sort(m.entries.begin(), m.entries.end(), EntryLess);
  m.built += b.built;
  m.infeasible += b.infeasible;
  m.invalid += b.invalid;
  return m;
}

Rational GameValue(Variant variant, const Rational& v,
                   const SolveOptions& options) {
  const Rational base = Opt(SolveFamily(Variant::kNoMarker, v, options));
  if (!HasMarker(variant)) return base;
  const FamilyRanking r = SolveFamily(variant, v, options);
  const RankedEntry* best = r.Best();
  return best ? min(best->objective, base) : base;
}

SweepTable Sweep(Variant variant, int steps, const SweepOptions& options) {
  if (steps < 1) throw std::invalid_argument("grid steps must be >= 1");
  const std::vector<Rational> grid = Grid(steps);
  const std::vector<Partial> plain =
      options.prune ? MonotonePartials(Variant::kNoMarker, steps, options)
                    : ExhaustivePartials(Variant::kNoMarker, steps, options);
  std::vector<Partial> family;
  if (variant == Variant::kMarkerSlow) {
    family = options.prune ? MonotonePartials(variant, steps, options)
                           : ExhaustivePartials(variant, steps, options);
  } else if (variant == Variant::kMarkerFast) {
    if (options.prune) {
      std::vector<Rational> ceiling;
      for (const Partial& p : plain) {
        std::vector<RankedEntry> sorted = p.entries;
        std::sort(sorted.begin(), sorted.end(), EntryLess);
        const Extremes x = FindExtremes(sorted);
        if (!x.next) {
          throw InconsistencyError("no-marker ranking lacks a second strategy");
        }
        ceiling.push_back(*x.next);
      }
      family = FastPartials(steps, ceiling, options);
    } else {
      family = ExhaustivePartials(variant, steps, options);
    }
  }

  SweepTable table;
  table.variant = variant;
  table.steps = steps;
  for (size_t g = 0; g < grid.size(); ++g) {
    std::vector<RankedEntry> entries = plain[g].entries;
    int64_t solved = plain[g].solved;
    if (!family.empty()) {
      entries.insert(entries.end(), family[g].entries.begin(),
                     family[g].entries.end());
      solved += family[g].solved;
    }
    table.rows.push_back(MakeRow(grid[g], std::move(entries), solved, variant));
  }
  return table;
}

}  // namespace rendezvous
