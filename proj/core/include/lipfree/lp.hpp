// Copyright 2026 The lipfree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIPFREE_LP_HPP_
#define LIPFREE_LP_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "lipfree/rational.hpp"

namespace lipfree {

// maximize objective . x  subject to  rows[i] . x <= bounds[i], x free.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> bounds;
  std::vector<Rational> objective;

  explicit LinearProgram(std::size_t vars = 0) : num_vars(vars), objective(vars) {}

  // Throws InputError on a row of the wrong length.
  void add_constraint(std::vector<Rational> row, Rational bound);
  std::size_t num_constraints() const { return rows.size(); }
};

struct LpOptimal {
  Rational value;
  // Attaining vertex: satisfies every constraint, objective . point == value.
  std::vector<Rational> point;
  // Nonnegative constraint multipliers with sum_i multipliers[i] * rows[i] ==
  // objective and bounds . multipliers == value; the matching upper bound.
  std::vector<Rational> multipliers;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpResult = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// Exact simplex with Bland's rule and a Phase-1/Phase-2 split. The tableau is
// built on the dual standard form (min bounds . y, A^T y = objective, y >= 0),
// so its height is num_vars rather than the number of constraints; the primal
// vertex is read off the final simplex multipliers.
LpResult solve_lp(const LinearProgram& lp);

// Replays an optimum: primal feasibility, dual feasibility and equal values.
bool certifies(const LinearProgram& lp, const LpOptimal& optimum);

}  // namespace lipfree

#endif  // LIPFREE_LP_HPP_
