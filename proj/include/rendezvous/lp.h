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

// Exact linear programming over rationals: a small dense two-phase simplex
// with Bland's rule and an independent duality-certificate checker.

#ifndef RENDEZVOUS_LP_H_
#define RENDEZVOUS_LP_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rendezvous/rational.h"

namespace rendezvous {

class LpError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  int var;
  Rational coeff;
};

// minimize objective·x  subject to
//   equalities[i]:   row·x  = rhs
//   inequalities[i]: row·x <= rhs
//   lower_j <= x_j <= upper_j   (either side optional)
class LinearProgram {
 public:
  struct Variable {
    std::string name;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
  };
  struct Row {
    std::vector<Term> terms;
    Rational rhs;
    std::string label;
  };

  int AddVariable(std::string name, std::optional<Rational> lower = Rational(),
                  std::optional<Rational> upper = std::nullopt);
  void AddEquality(std::vector<Term> terms, Rational rhs,
                   std::string label = {});
  void AddLessEqual(std::vector<Term> terms, Rational rhs,
                    std::string label = {});
  // Stored as the negated <= row.
  void AddGreaterEqual(std::vector<Term> terms, Rational rhs,
                       std::string label = {});
  void SetObjective(std::vector<Term> terms);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Row>& equalities() const { return equalities_; }
  const std::vector<Row>& inequalities() const { return inequalities_; }
  const std::vector<Term>& objective() const { return objective_; }
  int VariableIndex(const std::string& name) const;  // -1 when absent

  // Throws LpError on unknown variables, inverted bounds or an empty
  // objective.
  void Validate() const;

  // Readable row dump for debugging; not a stable format.
  std::string ToString() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Row> equalities_;
  std::vector<Row> inequalities_;
  std::vector<Term> objective_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> primal;
  Rational objective;
  // One multiplier per equality row (free sign) and per inequality row
  // (<= 0 for a minimization). Bound multipliers are implied by the
  // reduced costs and are not stored.
  std::vector<Rational> equality_duals;
  std::vector<Rational> inequality_duals;
  int pivots = 0;
};

// Solves the program exactly. Deterministic: equal programs produce equal
// pivot sequences and results. Throws LpError on malformed programs.
LpResult Solve(const LinearProgram& lp);

// Independent check of an optimality certificate: primal feasibility, dual
// feasibility (including sign conditions on bound multipliers) and equality
// of the primal and dual objectives, all in exact arithmetic.
bool VerifyOptimality(const LinearProgram& lp, const LpResult& result);

}  // namespace rendezvous

#endif  // RENDEZVOUS_LP_H_
