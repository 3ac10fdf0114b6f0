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

#include "lipfree/lp.hpp"

#include <optional>
#include <string>

namespace lipfree {
namespace {

// Tableau for  min cost . y  s.t.  S A^T y = S c,  y >= 0, with one artificial
// column per row. S flips rows so the right-hand side starts nonnegative.
class DualTableau {
 public:
  DualTableau(const LinearProgram& lp, const std::vector<Rational>& rhs)
      : rows_(lp.num_vars), structural_(lp.num_constraints()), cols_(structural_ + rows_) {
    table_.assign(rows_, std::vector<Rational>(cols_));
    rhs_.resize(rows_);
    sign_.resize(rows_, 1);
    basis_.resize(rows_);
    for (std::size_t k = 0; k < rows_; ++k) {
      sign_[k] = rhs[k] < 0 ? -1 : 1;
      for (std::size_t i = 0; i < structural_; ++i) {
        if (lp.rows[i][k] != 0) table_[k][i] = sign_[k] * lp.rows[i][k];
      }
      table_[k][structural_ + k] = 1;
      rhs_[k] = sign_[k] * rhs[k];
      basis_[k] = structural_ + k;
    }
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Minimizes cost over the current basis. Artificial columns never enter.
  Outcome minimize(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational d = cost_[j];
      for (std::size_t k = 0; k < rows_; ++k) {
        if (table_[k][j] != 0 && cost_[basis_[k]] != 0) d -= cost_[basis_[k]] * table_[k][j];
      }
      reduced_[j] = std::move(d);
    }
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return Outcome::kOptimal;
      const std::size_t e = *entering;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (table_[r][e] <= 0) continue;
        Rational ratio = rhs_[r] / table_[r][e];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return Outcome::kUnbounded;
      pivot(*leave, e);
    }
  }

  Rational artificial_mass() const {
    Rational total = 0;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (basis_[k] >= structural_) total += rhs_[k];
    }
    return total;
  }

  // After a zero-mass phase 1, swaps basic artificials for structural columns
  // where possible. Rows left with an artificial are zero on every structural
  // column, so that artificial stays at zero for good.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_) continue;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (table_[r][j] != 0) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> y(structural_);
    for (std::size_t k = 0; k < rows_; ++k) {
      if (basis_[k] < structural_) y[basis_[k]] = rhs_[k];
    }
    return y;
  }

  // Multipliers of the scaled rows, unscaled: the primal point.
  std::vector<Rational> multipliers() const {
    std::vector<Rational> x(rows_);
    for (std::size_t k = 0; k < rows_; ++k) x[k] = -sign_[k] * reduced_[structural_ + k];
    return x;
  }

  std::size_t structural() const { return structural_; }
  std::size_t columns() const { return cols_; }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = 1 / table_[r][e];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (table_[r][j] != 0) {
        table_[r][j] *= inv;
        nonzero.push_back(j);
      }
    }
    rhs_[r] *= inv;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (k == r || table_[k][e] == 0) continue;
      const Rational factor = table_[k][e];
      for (auto j : nonzero) table_[k][j] -= factor * table_[r][j];
      rhs_[k] -= factor * rhs_[r];
    }
    if (!reduced_.empty() && reduced_[e] != 0) {
      const Rational factor = reduced_[e];
      for (auto j : nonzero) reduced_[j] -= factor * table_[r][j];
    }
    basis_[r] = e;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> table_;
  std::vector<Rational> rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
};

// Farkas: the primal is feasible iff  min b.y s.t. A^T y = 0, y >= 0  is bounded.
bool primal_feasible(const LinearProgram& lp) {
  DualTableau tableau(lp, std::vector<Rational>(lp.num_vars));
  tableau.drive_out_artificials();
  std::vector<Rational> cost(tableau.columns());
  for (std::size_t i = 0; i < tableau.structural(); ++i) cost[i] = lp.bounds[i];
  return tableau.minimize(cost) == DualTableau::Outcome::kOptimal;
}

}  // namespace

void LinearProgram::add_constraint(std::vector<Rational> row, Rational bound) {
  if (row.size() != num_vars) {
    throw InputError("constraint row has " + std::to_string(row.size()) + " coefficients, expected " +
                     std::to_string(num_vars));
  }
  rows.push_back(std::move(row));
  bounds.push_back(std::move(bound));
}

LpResult solve_lp(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_vars) throw InputError("objective length mismatch");
  if (lp.num_vars == 0) {
    for (const auto& b : lp.bounds) {
      if (b < 0) return LpInfeasible{};
    }
    return LpOptimal{0, {}, std::vector<Rational>(lp.num_constraints())};
  }

  DualTableau tableau(lp, lp.objective);
  std::vector<Rational> phase1(tableau.columns());
  for (std::size_t j = tableau.structural(); j < tableau.columns(); ++j) phase1[j] = 1;
  tableau.minimize(phase1);
  if (tableau.artificial_mass() != 0) {
    return primal_feasible(lp) ? LpResult{LpUnbounded{}} : LpResult{LpInfeasible{}};
  }
  tableau.drive_out_artificials();

  std::vector<Rational> phase2(tableau.columns());
  for (std::size_t i = 0; i < tableau.structural(); ++i) phase2[i] = lp.bounds[i];
  if (tableau.minimize(phase2) == DualTableau::Outcome::kUnbounded) return LpInfeasible{};

  LpOptimal optimum;
  optimum.multipliers = tableau.solution();
  optimum.point = tableau.multipliers();
  optimum.value = 0;
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    if (optimum.multipliers[i] != 0) optimum.value += lp.bounds[i] * optimum.multipliers[i];
  }
  if (!certifies(lp, optimum)) throw InternalError("simplex optimum failed replay");
  return optimum;
}

bool certifies(const LinearProgram& lp, const LpOptimal& optimum) {
  if (optimum.point.size() != lp.num_vars || optimum.multipliers.size() != lp.num_constraints()) {
    return false;
  }
  Rational primal = 0;
  for (std::size_t k = 0; k < lp.num_vars; ++k) primal += lp.objective[k] * optimum.point[k];
  if (primal != optimum.value) return false;
  Rational dual = 0;
  std::vector<Rational> combination(lp.num_vars);
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    Rational lhs = 0;
    for (std::size_t k = 0; k < lp.num_vars; ++k) {
      if (lp.rows[i][k] != 0) lhs += lp.rows[i][k] * optimum.point[k];
    }
    if (lhs > lp.bounds[i]) return false;
    const Rational& y = optimum.multipliers[i];
    if (y < 0) return false;
    if (y == 0) continue;
    dual += lp.bounds[i] * y;
    for (std::size_t k = 0; k < lp.num_vars; ++k) combination[k] += lp.rows[i][k] * y;
  }
  return combination == lp.objective && dual == optimum.value;
}

}  // namespace lipfree
