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

#include "rendezvous/lp.h"

#include <sstream>

namespace rendezvous {

int LinearProgram::AddVariable(std::string name, std::optional<Rational> lower,
                               std::optional<Rational> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  return static_cast<int>(variables_.size()) - 1;
}

void LinearProgram::AddEquality(std::vector<Term> terms, Rational rhs,
                                std::string label) {
  equalities_.push_back({std::move(terms), std::move(rhs), std::move(label)});
}

void LinearProgram::AddLessEqual(std::vector<Term> terms, Rational rhs,
                                 std::string label) {
  inequalities_.push_back({std::move(terms), std::move(rhs), std::move(label)});
}

void LinearProgram::AddGreaterEqual(std::vector<Term> terms, Rational rhs,
                                    std::string label) {
  for (Term& t : terms) t.coeff = -t.coeff;
  AddLessEqual(std::move(terms), -rhs, std::move(label));
}

void LinearProgram::SetObjective(std::vector<Term> terms) {
  objective_ = std::move(terms);
}

int LinearProgram::VariableIndex(const std::string& name) const {
  for (size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void LinearProgram::Validate() const {
  const int n = num_variables();
  auto check_terms = [n](const std::vector<Term>& terms, const char* what) {
    for (const Term& t : terms) {
      if (t.var < 0 || t.var >= n) {
        throw LpError(std::string(what) + " references unknown variable " +
                      std::to_string(t.var));
      }
    }
  };
  for (const Variable& v : variables_) {
    if (v.lower && v.upper && *v.upper < *v.lower) {
      throw LpError("variable " + v.name + " has lower bound above upper");
    }
  }
  for (const Row& r : equalities_) check_terms(r.terms, "equality");
  for (const Row& r : inequalities_) check_terms(r.terms, "inequality");
  check_terms(objective_, "objective");
  bool any = false;
  for (const Term& t : objective_) any = any || !t.coeff.is_zero();
  if (!any) throw LpError("empty objective");
}

std::string LinearProgram::ToString() const {
  std::ostringstream os;
  auto row = [&](const std::vector<Term>& terms) {
    bool first = true;
    for (const Term& t : terms) {
      if (t.coeff.is_zero()) continue;
      const bool neg = t.coeff.sign() < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      const Rational mag = t.coeff.abs();
      if (mag != Rational(1)) os << mag << "*";
      os << variables_[t.var].name;
      first = false;
    }
    if (first) os << "0";
  };
  os << "minimize ";
  row(objective_);
  os << "\n";
  for (const Row& r : equalities_) {
    os << "  " << (r.label.empty() ? "" : r.label + ": ");
    row(r.terms);
    os << " = " << r.rhs << "\n";
  }
  for (const Row& r : inequalities_) {
    os << "  " << (r.label.empty() ? "" : r.label + ": ");
    row(r.terms);
    os << " <= " << r.rhs << "\n";
  }
  for (const Variable& v : variables_) {
    os << "  " << (v.lower ? v.lower->ToString() : "-inf") << " <= " << v.name
       << " <= " << (v.upper ? v.upper->ToString() : "+inf") << "\n";
  }
  return os.str();
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

// Dense simplex tableau. Column layout: structural columns, then one unit
// column per row (slack for <= rows, artificial otherwise), then surplus
// columns for rows that became >= after making the rhs nonnegative.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : m_(rows), n_(cols), cells_(static_cast<size_t>(rows) * (cols + 1)),
        cost_(cols + 1), basis_(rows) {}

  Rational& at(int r, int c) { return cells_[static_cast<size_t>(r) * (n_ + 1) + c]; }
  const Rational& at(int r, int c) const {
    return cells_[static_cast<size_t>(r) * (n_ + 1) + c];
  }
  Rational& rhs(int r) { return at(r, n_); }
  Rational& cost(int c) { return cost_[c]; }
  Rational& cost_rhs() { return cost_[n_]; }
  int& basis(int r) { return basis_[r]; }
  int rows() const { return m_; }
  int cols() const { return n_; }

  void Pivot(int pr, int pc) {
    const Rational inv = at(pr, pc).inverse();
    nonzero_.clear();
    for (int c = 0; c <= n_; ++c) {
      Rational& x = at(pr, c);
      if (x.is_zero()) continue;
      x *= inv;
      nonzero_.push_back(c);
    }
    for (int r = 0; r < m_; ++r) {
      if (r == pr) continue;
      const Rational f = at(r, pc);
      if (f.is_zero()) continue;
      for (int c : nonzero_) at(r, c) -= f * at(pr, c);
    }
    const Rational f = cost_[pc];
    if (!f.is_zero()) {
      for (int c : nonzero_) cost_[c] -= f * at(pr, c);
    }
    basis_[pr] = pc;
  }

 private:
  int m_;
  int n_;
  std::vector<Rational> cells_;
  std::vector<Rational> cost_;
  std::vector<int> basis_;
  std::vector<int> nonzero_;
};

enum class Outcome { kOptimal, kUnbounded };

// Bland's rule: lowest-index improving column; ratio ties go to the row whose
// basic variable has the lowest index.
Outcome RunSimplex(Tableau& t, const std::vector<bool>& may_enter,
                   int& pivots) {
  for (;;) {
    int enter = -1;
    for (int c = 0; c < t.cols(); ++c) {
      if (may_enter[c] && t.cost(c).sign() < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return Outcome::kOptimal;
    int leave = -1;
    Rational best;
    for (int r = 0; r < t.rows(); ++r) {
      const Rational& a = t.at(r, enter);
      if (a.sign() <= 0) continue;
      const Rational ratio = t.rhs(r) / a;
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis(r) < t.basis(leave))) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return Outcome::kUnbounded;
    t.Pivot(leave, enter);
    ++pivots;
  }
}

struct ColumnMap {
  Rational offset;
  int plus = -1;   // column entering with +1
  int minus = -1;  // column entering with -1
};

}  // namespace

LpResult Solve(const LinearProgram& lp) {
  lp.Validate();
  const auto& vars = lp.variables();
  const int n = lp.num_variables();

  // x_j = offset + col_plus - col_minus
  std::vector<ColumnMap> cmap(n);
  int ncols = 0;
  struct BoundRow {
    int col;
    Rational cap;
  };
  std::vector<BoundRow> bound_rows;
  for (int j = 0; j < n; ++j) {
    const auto& v = vars[j];
    if (v.lower) {
      cmap[j].offset = *v.lower;
      cmap[j].plus = ncols++;
      if (v.upper) bound_rows.push_back({cmap[j].plus, *v.upper - *v.lower});
    } else if (v.upper) {
      cmap[j].offset = *v.upper;
      cmap[j].minus = ncols++;
    } else {
      cmap[j].plus = ncols++;
      cmap[j].minus = ncols++;
    }
  }
  const int structural = ncols;

  const int n_eq = static_cast<int>(lp.equalities().size());
  const int n_le = static_cast<int>(lp.inequalities().size());
  const int m = n_eq + n_le + static_cast<int>(bound_rows.size());

  // Dense copy of the rows in column space, before sign normalization.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(structural));
  std::vector<Rational> b(m);
  std::vector<bool> is_eq(m, false);
  auto load = [&](int r, const LinearProgram::Row& row) {
    Rational rhs = row.rhs;
    for (const Term& t : row.terms) {
      const ColumnMap& cm = cmap[t.var];
      if (cm.plus >= 0) a[r][cm.plus] += t.coeff;
      if (cm.minus >= 0) a[r][cm.minus] -= t.coeff;
      rhs -= t.coeff * cm.offset;
    }
    b[r] = rhs;
  };
  for (int i = 0; i < n_eq; ++i) {
    load(i, lp.equalities()[i]);
    is_eq[i] = true;
  }
  for (int i = 0; i < n_le; ++i) load(n_eq + i, lp.inequalities()[i]);
  for (size_t i = 0; i < bound_rows.size(); ++i) {
    const int r = n_eq + n_le + static_cast<int>(i);
    a[r][bound_rows[i].col] = Rational(1);
    b[r] = bound_rows[i].cap;
  }

  std::vector<int> row_sign(m, 1);
  std::vector<bool> needs_artificial(m, false);
  int n_surplus = 0;
  for (int r = 0; r < m; ++r) {
    if (b[r].sign() < 0) row_sign[r] = -1;
    needs_artificial[r] = is_eq[r] || row_sign[r] < 0;
    if (!is_eq[r] && row_sign[r] < 0) ++n_surplus;
  }
  const int unit0 = structural;
  const int surplus0 = structural + m;
  const int total = structural + m + n_surplus;

  Tableau t(m, total);
  std::vector<bool> artificial(total, false);
  int next_surplus = surplus0;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < structural; ++c) {
      if (!a[r][c].is_zero()) t.at(r, c) = row_sign[r] < 0 ? -a[r][c] : a[r][c];
    }
    t.rhs(r) = row_sign[r] < 0 ? -b[r] : b[r];
    t.at(r, unit0 + r) = Rational(1);
    t.basis(r) = unit0 + r;
    if (needs_artificial[r]) artificial[unit0 + r] = true;
    if (!is_eq[r] && row_sign[r] < 0) t.at(r, next_surplus++) = Rational(-1);
  }

  LpResult result;
  // Phase 1: minimize the sum of artificial columns.
  bool any_artificial = false;
  for (int r = 0; r < m; ++r) {
    if (!needs_artificial[r]) continue;
    any_artificial = true;
    for (int c = 0; c <= total; ++c) {
      if (artificial[c] && c < total) continue;
      const Rational& x = t.at(r, c);
      if (!x.is_zero()) {
        if (c == total) {
          t.cost_rhs() -= x;
        } else {
          t.cost(c) -= x;
        }
      }
    }
  }
  if (any_artificial) {
    std::vector<bool> all(total, true);
    RunSimplex(t, all, result.pivots);
    if (t.cost_rhs().sign() != 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (!artificial[t.basis(r)]) continue;
      for (int c = 0; c < total; ++c) {
        if (!artificial[c] && !t.at(r, c).is_zero()) {
          t.Pivot(r, c);
          ++result.pivots;
          break;
        }
      }
    }
  }

  // Phase 2 costs.
  std::vector<Rational> c_col(total);
  for (const Term& term : lp.objective()) {
    const ColumnMap& cm = cmap[term.var];
    if (cm.plus >= 0) c_col[cm.plus] += term.coeff;
    if (cm.minus >= 0) c_col[cm.minus] -= term.coeff;
  }
  for (int c = 0; c <= total; ++c) {
    if (c < total) {
      t.cost(c) = c_col[c];
    } else {
      t.cost_rhs() = Rational();
    }
  }
  for (int r = 0; r < m; ++r) {
    const Rational cb = c_col[t.basis(r)];
    if (cb.is_zero()) continue;
    for (int c = 0; c <= total; ++c) {
      const Rational& x = t.at(r, c);
      if (x.is_zero()) continue;
      if (c == total) {
        t.cost_rhs() -= cb * x;
      } else {
        t.cost(c) -= cb * x;
      }
    }
  }
  std::vector<bool> may_enter(total);
  for (int c = 0; c < total; ++c) may_enter[c] = !artificial[c];
  if (RunSimplex(t, may_enter, result.pivots) == Outcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  std::vector<Rational> col_value(total);
  for (int r = 0; r < m; ++r) col_value[t.basis(r)] = t.rhs(r);
  result.primal.resize(n);
  for (int j = 0; j < n; ++j) {
    Rational x = cmap[j].offset;
    if (cmap[j].plus >= 0) x += col_value[cmap[j].plus];
    if (cmap[j].minus >= 0) x -= col_value[cmap[j].minus];
    result.primal[j] = x;
  }
  for (const Term& term : lp.objective()) {
    result.objective += term.coeff * result.primal[term.var];
  }
  // y'_r = -(reduced cost of the unit column of row r); undo the rhs flip.
  result.equality_duals.resize(n_eq);
  result.inequality_duals.resize(n_le);
  for (int r = 0; r < n_eq + n_le; ++r) {
    Rational y = -t.cost(unit0 + r);
    if (row_sign[r] < 0) y = -y;
    if (r < n_eq) {
      result.equality_duals[r] = y;
    } else {
      result.inequality_duals[r - n_eq] = y;
    }
  }
  result.status = LpStatus::kOptimal;
  return result;
}

bool VerifyOptimality(const LinearProgram& lp, const LpResult& result) {
  if (result.status != LpStatus::kOptimal) return false;
  const int n = lp.num_variables();
  const auto& eqs = lp.equalities();
  const auto& les = lp.inequalities();
  if (static_cast<int>(result.primal.size()) != n) return false;
  if (result.equality_duals.size() != eqs.size()) return false;
  if (result.inequality_duals.size() != les.size()) return false;
  const auto& x = result.primal;

  for (int j = 0; j < n; ++j) {
    const auto& v = lp.variables()[j];
    if (v.lower && x[j] < *v.lower) return false;
    if (v.upper && x[j] > *v.upper) return false;
  }
  auto dot = [&](const std::vector<Term>& terms) {
    Rational s;
    for (const Term& t : terms) s += t.coeff * x[t.var];
    return s;
  };
  for (const auto& r : eqs) {
    if (dot(r.terms) != r.rhs) return false;
  }
  for (const auto& r : les) {
    if (dot(r.terms) > r.rhs) return false;
  }
  const Rational primal_obj = dot(lp.objective());
  if (primal_obj != result.objective) return false;

  // Reduced costs d = c - A^T y.
  std::vector<Rational> d(n);
  for (const Term& t : lp.objective()) d[t.var] += t.coeff;
  Rational dual_obj;
  for (size_t i = 0; i < eqs.size(); ++i) {
    const Rational& y = result.equality_duals[i];
    if (y.is_zero()) continue;
    for (const Term& t : eqs[i].terms) d[t.var] -= y * t.coeff;
    dual_obj += y * eqs[i].rhs;
  }
  for (size_t i = 0; i < les.size(); ++i) {
    const Rational& y = result.inequality_duals[i];
    if (y.sign() > 0) return false;
    if (y.is_zero()) continue;
    for (const Term& t : les[i].terms) d[t.var] -= y * t.coeff;
    dual_obj += y * les[i].rhs;
  }
  for (int j = 0; j < n; ++j) {
    const auto& v = lp.variables()[j];
    const int s = d[j].sign();
    if (s > 0) {
      if (!v.lower) return false;
      dual_obj += *v.lower * d[j];
    } else if (s < 0) {
      if (!v.upper) return false;
      dual_obj += *v.upper * d[j];
    }
  }
  return dual_obj == primal_obj;
}

}  // namespace rendezvous
