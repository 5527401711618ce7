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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rendezvous/certify.h"
#include "rendezvous/family.h"
#include "rendezvous/game.h"
#include "rendezvous/lp.h"
#include "rendezvous/oracle.h"
#include "rendezvous/rational.h"
#include "rendezvous/replay.h"
#include "rendezvous/signature.h"
#include "rendezvous/sweep.h"

namespace rendezvous::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string variant = "none";
  std::string v;
  int grid = 1000;
  std::string distance = "1";
  std::string format = "csv";
  std::string output;
  int threads = 0;
  bool no_prune = false;
  bool verbose = false;
  // Command specific.
  int top = 10;
  std::string id;
  bool lp_dump = false;
  int resolution = 64;
  std::string horizon = "4";
  std::string name;
};

std::string Dec(const Rational& r) { return r.ToDecimal(12); }

// A rational as a "p/q" cell followed by its decimal cell.
void Pair(std::vector<std::string>& cells, const Rational& r) {
  cells.push_back(r.ToString());
  cells.push_back(Dec(r));
}

Json PairJson(const Rational& r) { return {{"exact", r.ToString()}, {"decimal", Dec(r)}}; }

std::string CsvLine(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      line += c;
    } else {
      line += '"';
      for (char ch : c) {
        if (ch == '"') line += '"';
        line += ch;
      }
      line += '"';
    }
  }
  return line + "\n";
}

Rational ParseRational(const std::string& text, const char* what) {
  try {
    return Rational::Parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
  }
}

Rational ParseSpeed(const RunConfig& c) {
  if (c.v.empty()) throw UsageError("--v is required");
  const Rational v = ParseRational(c.v, "--v");
  if (v < Rational(0) || v > Rational(1)) {
    throw UsageError("--v must lie in [0, 1]");
  }
  return v;
}

Rational ParseDistance(const RunConfig& c) {
  const Rational d = ParseRational(c.distance, "--distance");
  if (d.sign() <= 0) throw UsageError("--distance must be positive");
  return d;
}

Variant ParseVariantFlag(const RunConfig& c) {
  try {
    return ParseVariant(c.variant);
  } catch (const std::exception&) {
    throw UsageError("unknown variant '" + c.variant +
                     "' (none, slow-marker, fast-marker)");
  }
}

void RequireFormat(const RunConfig& c, std::initializer_list<const char*> ok) {
  for (const char* f : ok) {
    if (c.format == f) return;
  }
  throw UsageError("unsupported --format '" + c.format + "' for this command");
}

SolveOptions SolveOpts(const RunConfig& c) {
  SolveOptions s;
  s.threads = c.threads;
  return s;
}

Json Metadata(Variant variant, std::optional<int> grid,
              const Rational& distance) {
  Json m;
  m["variant"] = ToString(variant);
  if (grid) m["grid"] = *grid;
  m["D"] = distance.ToString();
  m["version"] = RDVLP_VERSION;
  return m;
}

// Closed forms that can describe a variant's value, in priority order.
std::vector<ClosedFormName> FormsFor(Variant variant) {
  switch (variant) {
    case Variant::kNoMarker:
      return {ClosedFormName::kExactLt, ClosedFormName::kExactGt};
    case Variant::kMarkerSlow:
      return {ClosedFormName::kMarkerSlow, ClosedFormName::kExactLt,
              ClosedFormName::kExactGt};
    case Variant::kMarkerFast:
      return {ClosedFormName::kMarkerFast, ClosedFormName::kExactLt,
              ClosedFormName::kExactGt};
  }
  return {};
}

// The form claimed optimal at v; otherwise one that happens to equal opt.
std::optional<ClosedFormName> ReferenceForm(Variant variant, const Rational& v,
                                            const Rational& opt) {
  const auto forms = FormsFor(variant);
  for (ClosedFormName n : forms) {
    const ClosedForm& f = GetClosedForm(n);
    if (f.valid_lo <= v && v <= f.valid_hi) return n;
  }
  for (ClosedFormName n : forms) {
    if (GetClosedForm(n).sum(v) == opt) return n;
  }
  return std::nullopt;
}

SweepTable RunSweep(const RunConfig& c, Variant variant, std::ostream& err) {
  if (c.grid < 1) throw UsageError("--grid must be >= 1");
  SweepOptions options;
  options.solve = SolveOpts(c);
  options.prune = !c.no_prune;
  if (c.verbose) {
    options.progress = [&err](const std::string& s) { err << s << "\n"; };
  }
  return Sweep(variant, c.grid, options);
}

int CmdSweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RequireFormat(c, {"csv", "json"});
  const Variant variant = ParseVariantFlag(c);
  const Rational D = ParseDistance(c);
  const SweepTable table = RunSweep(c, variant, err);
  Json rows = Json::array();
  if (c.format == "csv") {
    out << "v,v_dec,opt_sum,opt_sum_dec,opt_avg,opt_avg_dec,next_to_opt_sum,"
           "next_to_opt_sum_dec,strategy_id,closed_form,closed_form_sum,"
           "closed_form_sum_dec,match\n";
  }
  for (const SweepRow& r : table.rows) {
    const Rational opt = r.opt * D;
    const Rational next = r.next_to_opt * D;
    const auto form = ReferenceForm(variant, r.v, r.opt);
    std::optional<Rational> form_sum;
    if (form) form_sum = GetClosedForm(*form).sum(r.v) * D;
    const bool match = form_sum && *form_sum == opt;
    if (c.format == "csv") {
      std::vector<std::string> cells;
      Pair(cells, r.v);
      Pair(cells, opt);
      Pair(cells, opt / Rational(4));
      Pair(cells, next);
      cells.push_back(r.best.id);
      cells.push_back(form ? ToString(*form) : "");
      if (form_sum) {
        Pair(cells, *form_sum);
      } else {
        cells.push_back("");
        cells.push_back("");
      }
      cells.push_back(match ? "true" : "false");
      out << CsvLine(cells);
    } else {
      Json row;
      row["v"] = PairJson(r.v);
      row["opt_sum"] = PairJson(opt);
      row["opt_avg"] = PairJson(opt / Rational(4));
      row["next_to_opt_sum"] = PairJson(next);
      row["strategy_id"] = r.best.id;
      row["signature"] = r.best.signature;
      Json times = Json::array();
      for (const Rational& t : r.best.times) times.push_back((t * D).ToString());
      row["times"] = times;
      row["closed_form"] = form ? Json(ToString(*form)) : Json(nullptr);
      row["closed_form_sum"] = form_sum ? PairJson(*form_sum) : Json(nullptr);
      row["match"] = match;
      rows.push_back(row);
    }
  }
  if (c.format == "json") {
    Json doc;
    doc["metadata"] = Metadata(variant, c.grid, D);
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  }
  return kOk;
}

int CmdCertify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RequireFormat(c, {"csv", "json"});
  const Variant variant = ParseVariantFlag(c);
  const Rational D = ParseDistance(c);
  const SweepTable table = RunSweep(c, variant, err);
  const std::vector<CertifiedInterval> intervals = Certify(table);
  if (c.format == "csv") {
    out << "v_lo,v_lo_dec,v_hi,v_hi_dec,signature,strategy_id,closed_form,"
           "opt_lo,opt_lo_dec,opt_hi,opt_hi_dec\n";
    for (const CertifiedInterval& i : intervals) {
      std::vector<std::string> cells;
      Pair(cells, i.v_lo);
      Pair(cells, i.v_hi);
      cells.push_back(i.signature);
      cells.push_back(i.strategy_id);
      cells.push_back(i.closed_form ? ToString(*i.closed_form) : "");
      Pair(cells, i.opt_lo * D);
      Pair(cells, i.opt_hi * D);
      out << CsvLine(cells);
    }
    return kOk;
  }
  Json list = Json::array();
  for (const CertifiedInterval& i : intervals) {
    Json j;
    j["v_lo"] = PairJson(i.v_lo);
    j["v_hi"] = PairJson(i.v_hi);
    j["signature"] = i.signature;
    j["strategy_id"] = i.strategy_id;
    j["closed_form"] = i.closed_form ? Json(ToString(*i.closed_form)) : Json(nullptr);
    j["opt_lo"] = PairJson(i.opt_lo * D);
    j["opt_hi"] = PairJson(i.opt_hi * D);
    list.push_back(j);
  }
  Json doc;
  doc["metadata"] = Metadata(variant, c.grid, D);
  doc["intervals"] = list;
  out << doc.dump(2) << "\n";
  return kOk;
}

FamilyRanking RankAll(Variant variant, const Rational& v, const SolveOptions& s) {
  FamilyRanking r = SolveFamily(variant, v, s);
  if (HasMarker(variant)) r = MergeRankings(r, SolveFamily(Variant::kNoMarker, v, s));
  return r;
}

int CmdSolve(const RunConfig& c, std::ostream& out, std::ostream&) {
  RequireFormat(c, {"csv", "json"});
  const Variant variant = ParseVariantFlag(c);
  const Rational v = ParseSpeed(c);
  const Rational D = ParseDistance(c);
  if (c.top < 0) throw UsageError("--top must be >= 0");
  const FamilyRanking r = RankAll(variant, v, SolveOpts(c));
  const RankedEntry* best = r.Best();
  if (!best) throw InconsistencyError("no valid family member at v=" + v.ToString());
  std::optional<Rational> next;
  try {
    next = NextToOpt(r) * D;
  } catch (const std::domain_error&) {
  }
  const Rational opt = Opt(r) * D;
  std::vector<const RankedEntry*> shown;
  for (const RankedEntry& e : r.entries) {
    if (static_cast<int>(shown.size()) >= c.top) break;
    shown.push_back(&e);
  }
  if (c.format == "csv") {
    out << "# variant=" << ToString(variant) << " v=" << v << " D=" << D << "\n";
    out << "# opt_sum=" << opt << " (" << Dec(opt) << ") opt_avg="
        << opt / Rational(4) << " next_to_opt_sum="
        << (next ? next->ToString() : "none") << "\n";
    out << "# strategy_id=" << best->id << " signature=" << best->signature
        << "\n";
    out << "# built=" << r.built << " infeasible=" << r.infeasible
        << " invalid=" << r.invalid << "\n";
    out << "rank,strategy_id,signature,sum,sum_dec,valid,reason\n";
    int rank = 0;
    for (const RankedEntry* e : shown) {
      std::vector<std::string> cells{std::to_string(++rank), e->id, e->signature};
      Pair(cells, e->objective * D);
      cells.push_back(e->valid ? "true" : "false");
      cells.push_back(e->reason);
      out << CsvLine(cells);
    }
    return kOk;
  }
  Json doc;
  doc["metadata"] = Metadata(variant, std::nullopt, D);
  doc["v"] = PairJson(v);
  doc["opt_sum"] = PairJson(opt);
  doc["opt_avg"] = PairJson(opt / Rational(4));
  doc["next_to_opt_sum"] = next ? PairJson(*next) : Json(nullptr);
  doc["strategy_id"] = best->id;
  doc["signature"] = best->signature;
  Json times = Json::array();
  for (const Rational& t : best->times) times.push_back((t * D).ToString());
  doc["times"] = times;
  doc["built"] = r.built;
  doc["infeasible"] = r.infeasible;
  doc["invalid"] = r.invalid;
  Json ranking = Json::array();
  for (const RankedEntry* e : shown) {
    ranking.push_back({{"strategy_id", e->id},
                       {"signature", e->signature},
                       {"sum", PairJson(e->objective * D)},
                       {"valid", e->valid},
                       {"reason", e->reason}});
  }
  doc["ranking"] = ranking;
  out << doc.dump(2) << "\n";
  return kOk;
}

int CmdOracle(const RunConfig& c, std::ostream& out, std::ostream&) {
  RequireFormat(c, {"csv", "json"});
  const Variant variant = ParseVariantFlag(c);
  const Rational v = ParseSpeed(c);
  const Rational D = ParseDistance(c);
  GridStrategySpec spec;
  spec.resolution = c.resolution;
  spec.horizon = ParseRational(c.horizon, "--horizon");
  if (spec.resolution < 1) throw UsageError("--resolution must be >= 1");
  if (spec.horizon.sign() <= 0) throw UsageError("--horizon must be positive");
  const OracleResult o = BruteForceOpt(variant, v, spec, D);
  const Rational lp = GameValue(variant, v, SolveOpts(c)) * D;
  const Rational gap = o.value - lp;
  if (gap.sign() < 0) {
    throw InconsistencyError("grid optimum " + o.value.ToString() +
                             " lies below the LP value " + lp.ToString());
  }
  std::vector<std::pair<std::string, std::string>> kv = {
      {"variant", ToString(variant)},
      {"v", v.ToString()},
      {"resolution", std::to_string(spec.resolution)},
      {"horizon", spec.horizon.ToString()},
      {"D", D.ToString()},
      {"value", o.value.ToString()},
      {"value_dec", Dec(o.value)},
      {"lp_value", lp.ToString()},
      {"lp_value_dec", Dec(lp)},
      {"gap", gap.ToString()},
      {"gap_dec", Dec(gap)},
      {"states", std::to_string(o.states)},
      {"strategy", o.plan.ToString(D)},
  };
  for (int i = 0; i < 4; ++i) {
    kv.emplace_back("t" + std::to_string(i + 1),
                    o.replay.outcome.ordered_times[i].ToString());
  }
  if (c.format == "csv") {
    out << "field,value\n";
    for (const auto& [k, val] : kv) out << CsvLine({k, val});
    return kOk;
  }
  Json doc;
  doc["metadata"] = Metadata(variant, std::nullopt, D);
  for (const auto& [k, val] : kv) doc[k] = val;
  out << doc.dump(2) << "\n";
  return kOk;
}

Json StrategyDump(const ParameterAssignment& pa, const Rational& v,
                  const Rational& D, bool lp_dump, std::ostream& err) {
  const FamilyProgram fp = Build(pa, v);
  if (lp_dump) err << fp.lp.ToString();
  const LpResult r = Solve(fp.lp);
  Json doc;
  doc["config"] = {{"variant", ToString(pa.variant)},
                   {"v", v.ToString()},
                   {"D", D.ToString()},
                   {"version", RDVLP_VERSION}};
  doc["strategy_id"] = pa.Id();
  doc["order"] = OrderString(pa.order);
  Json signs;
  auto sign_list = [](const std::array<int8_t, 4>& s) {
    Json a = Json::array();
    for (int8_t x : s) a.push_back(x);
    return a;
  };
  signs["player_one"] = sign_list(pa.a);
  signs["player_two"] = sign_list(pa.d);
  if (HasMarker(pa.variant)) signs["player_one_pre_drop"] = pa.a0;
  doc["signs"] = signs;
  doc["lp_status"] = ToString(r.status);
  if (r.status != LpStatus::kOptimal) return doc;
  if (!VerifyOptimality(fp.lp, r)) {
    throw InconsistencyError("duality certificate failed for " + pa.Id());
  }
  const VariableLayout& L = fp.layout;
  auto val = [&](int var) { return (r.primal[var] * D).ToString(); };
  Json disp = Json::array();
  for (int k : L.disp) disp.push_back(k >= 0 ? Json(val(k)) : Json(nullptr));
  doc["displacements"] = disp;
  if (HasMarker(pa.variant)) {
    Json drop;
    drop["interval"] = pa.drop_interval;
    drop["time"] = L.z >= 0 ? Json(val(L.z)) : Json(nullptr);
    drop["pre_drop_displacement"] =
        L.pre_disp >= 0 ? Json(val(L.pre_disp)) : Json(nullptr);
    Json finds = Json::array();
    for (int i = 0; i < 4; ++i) {
      Json f;
      f["slot"] = i + 1;
      f["segment"] = pa.find[i];
      f["time"] = L.find_time[i] >= 0 ? Json(val(L.find_time[i])) : Json(nullptr);
      finds.push_back(f);
    }
    drop["finds"] = finds;
    doc["drop"] = drop;
  }
  const GameConfig config{v, Rational(1), pa.variant};
  const SolutionCheck check = CheckSolution(config, pa, fp, r);
  Json outcome;
  outcome["lp_sum"] = (r.objective * D).ToString();
  Json lp_times = Json::array();
  for (int k : L.t) lp_times.push_back(val(k));
  outcome["lp_times"] = lp_times;
  outcome["valid"] = check.valid;
  if (!check.valid) outcome["reason"] = check.reason;
  if (check.replay) {
    const RendezvousOutcome o = ScaleOutcome(check.replay->outcome, D);
    Json times = Json::array();
    for (const Rational& t : o.ordered_times) times.push_back(t.ToString());
    outcome["simulated_times"] = times;
    outcome["simulated_sum"] = o.sum.ToString();
    outcome["order"] = OrderString(o.order);
    outcome["signature"] = StrategySignature(*check.replay);
  }
  doc["outcome"] = outcome;
  return doc;
}

int CmdShowStrategy(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RequireFormat(c, {"json"});
  const Rational v = ParseSpeed(c);
  const Rational D = ParseDistance(c);
  ParameterAssignment pa;
  if (!c.id.empty()) {
    try {
      pa = ParameterAssignment::FromId(c.id);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --id: ") + e.what());
    }
  } else {
    const FamilyRanking r = RankAll(ParseVariantFlag(c), v, SolveOpts(c));
    const RankedEntry* best = r.Best();
    if (!best) throw InconsistencyError("no valid family member");
    pa = ParameterAssignment::FromId(best->id);
  }
  if (!IsBuildable(pa)) throw UsageError("assignment " + pa.Id() + " is not buildable");
  out << StrategyDump(pa, v, D, c.lp_dump, err).dump(2) << "\n";
  return kOk;
}

int CmdEvalForm(const RunConfig& c, std::ostream& out, std::ostream&) {
  RequireFormat(c, {"csv", "json"});
  ClosedFormName name;
  try {
    name = ParseClosedFormName(c.name);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const Rational D = ParseDistance(c);
  std::vector<Rational> vs;
  if (!c.v.empty()) {
    vs.push_back(ParseSpeed(c));
  } else {
    if (c.grid < 1) throw UsageError("--grid must be >= 1");
    for (int k = 0; k <= c.grid; ++k) vs.emplace_back(k, c.grid);
  }
  const ClosedForm& form = GetClosedForm(name);
  Json rows = Json::array();
  if (c.format == "csv") {
    out << "v,v_dec,z,z_dec,t1,t1_dec,t2,t2_dec,t3,t3_dec,t4,t4_dec,sum,"
           "sum_dec,claimed\n";
  }
  for (const Rational& v : vs) {
    ClosedFormValue f;
    try {
      f = EvalClosedForm(name, v);
    } catch (const std::domain_error&) {
      continue;  // pole of the form, e.g. marker_fast has none on [0, 1]
    }
    const bool claimed = form.valid_lo <= v && v <= form.valid_hi;
    if (c.format == "csv") {
      std::vector<std::string> cells;
      Pair(cells, v);
      if (f.z) {
        Pair(cells, *f.z * D);
      } else {
        cells.push_back("");
        cells.push_back("");
      }
      for (const Rational& t : f.t) Pair(cells, t * D);
      Pair(cells, f.sum * D);
      cells.push_back(claimed ? "true" : "false");
      out << CsvLine(cells);
    } else {
      Json row;
      row["v"] = PairJson(v);
      row["z"] = f.z ? PairJson(*f.z * D) : Json(nullptr);
      Json times = Json::array();
      for (const Rational& t : f.t) times.push_back(PairJson(t * D));
      row["times"] = times;
      row["sum"] = PairJson(f.sum * D);
      row["claimed"] = claimed;
      rows.push_back(row);
    }
  }
  if (c.format == "json") {
    Json doc;
    doc["metadata"] = {{"closed_form", ToString(name)},
                       {"D", D.ToString()},
                       {"claimed_interval",
                        {form.valid_lo.ToString(), form.valid_hi.ToString()}},
                       {"version", RDVLP_VERSION}};
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact LP sweeps for the two-player rendezvous game on the line"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(RDVLP_VERSION));
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("--distance", c.distance, "Initial distance D (p/q or decimal)")
        ->capture_default_str();
    s->add_option("--format", c.format, "csv or json")->capture_default_str();
    s->add_option("--output,-o", c.output, "Write results to this file");
    s->add_option("--threads", c.threads, "Worker threads (0: all cores)")
        ->capture_default_str();
  };
  auto variant = [&](CLI::App* s) {
    s->add_option("--variant", c.variant, "none, slow-marker or fast-marker")
        ->capture_default_str();
  };

  CLI::App* sweep = app.add_subcommand("sweep", "Optimal value over a grid of v");
  CLI::App* certify =
      app.add_subcommand("certify", "Intervals on which the optimal strategy is certified");
  for (CLI::App* s : {sweep, certify}) {
    variant(s);
    common(s);
    s->add_option("--grid", c.grid, "Grid steps n; v = k/n for k = 1..n")
        ->capture_default_str();
    s->add_flag("--no-prune", c.no_prune, "Solve every family member at every v");
    s->add_flag("--verbose", c.verbose, "Progress on stderr");
  }

  CLI::App* solve = app.add_subcommand("solve", "Solve the whole family at one v");
  variant(solve);
  common(solve);
  solve->add_option("--v", c.v, "Speed ratio in [0, 1]")->required();
  solve->add_option("--top", c.top, "Ranking entries to print")->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "LP-free grid search with gap report");
  variant(oracle);
  common(oracle);
  oracle->add_option("--v", c.v, "Speed ratio in [0, 1]")->required();
  oracle->add_option("--resolution", c.resolution, "Grid steps per unit of D")
      ->capture_default_str();
  oracle->add_option("--horizon", c.horizon, "Search horizon in units of D")
      ->capture_default_str();

  CLI::App* show = app.add_subcommand("show-strategy", "Dump one strategy pair as JSON");
  variant(show);
  common(show);
  show->add_option("--v", c.v, "Speed ratio in [0, 1]")->required();
  show->add_option("--id", c.id, "Assignment id (default: the optimum)");
  show->add_flag("--lp-dump", c.lp_dump, "Print the LP rows to stderr");

  CLI::App* eval = app.add_subcommand("eval-form", "Evaluate a closed-form optimum");
  common(eval);
  eval->add_option("--name", c.name, "exact_lt, exact_gt, marker_slow, marker_fast")
      ->required();
  eval->add_option("--v", c.v, "Speed ratio in [0, 1]");
  eval->add_option("--grid", c.grid, "Tabulate v = k/n, k = 0..n, when --v is absent")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (show->parsed() && show->count("--format") == 0) c.format = "json";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << c.output << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }
  try {
    int code = kOk;
    if (sweep->parsed()) code = CmdSweep(c, *sink, err);
    if (certify->parsed()) code = CmdCertify(c, *sink, err);
    if (solve->parsed()) code = CmdSolve(c, *sink, err);
    if (oracle->parsed()) code = CmdOracle(c, *sink, err);
    if (show->parsed()) code = CmdShowStrategy(c, *sink, err);
    if (eval->parsed()) code = CmdEvalForm(c, *sink, err);
    sink->flush();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const OracleError& e) {
    err << "oracle: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
}

}  // namespace rendezvous::cli
