// Copyright 2026 The rentfair Authors
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

#include "rentfair/lp.hpp"

#include <optional>

#include "rentfair/model.hpp"

namespace rentfair {

std::vector<std::string> LinearProgram::check() const {
  std::vector<std::string> out;
  std::size_t nv = var_names.size();
  auto check_form = [&](const LinearForm& form, const std::string& where) {
    for (const auto& [var, coeff] : form) {
      (void)coeff;
      if (var >= nv)
        out.push_back(where + ": references undeclared variable index " +
                      std::to_string(var));
    }
  };
  check_form(objective, "objective");
  for (std::size_t c = 0; c < constraints.size(); ++c)
    check_form(constraints[c].form, "constraint " + std::to_string(c));
  for (std::size_t v : lex_vars)
    if (v >= nv) out.push_back("lex refinement references undeclared variable");
  return out;
}

namespace {

std::string form_to_string(const LinearForm& form,
                           const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [var, coeff] : form) {
    if (coeff.is_zero()) continue;
    if (out.empty()) {
      if (coeff.is_negative()) out += "- ";
    } else {
      out += coeff.is_negative() ? " - " : " + ";
    }
    Rational mag = abs(coeff);
    if (!(mag == Rational(1))) out += mag.to_string() + " ";
    out += names[var];
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace

std::string LinearProgram::dump() const {
  std::string out;
  if (!tag.empty()) out += "\\* " + tag + " *\\\n";
  out += (sense == LpSense::kMaximize ? "max: " : "min: ");
  out += form_to_string(objective, var_names) + ";\n";
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const LpConstraint& cons = constraints[c];
    out += cons.label.empty() ? ("c" + std::to_string(c + 1)) : cons.label;
    out += ": " + form_to_string(cons.form, var_names);
    switch (cons.relation) {
      case Relation::kLessEq: out += " <= "; break;
      case Relation::kGreaterEq: out += " >= "; break;
      case Relation::kEqual: out += " = "; break;
    }
    out += cons.rhs.to_string() + ";\n";
  }
  return out;
}

namespace {

// Dense standard form: minimize c.x over Ax = b, x >= 0, b >= 0. Columns are
// the split structural variables (x = pos - neg) followed by slack/surplus
// columns; artificial columns live only inside the solver.
struct StandardForm {
  std::size_t n_free = 0;    // original variable count
  std::size_t n_struct = 0;  // 2 * n_free
  std::size_t n_cols = 0;    // structural + slacks
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;  // all >= 0
  // Minimization objective rows: row 0 is the primary objective, later rows
  // are the lexicographic refinement objectives in priority order.
  std::vector<std::vector<Rational>> costs;
};

StandardForm build_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  sf.n_free = lp.var_names.size();
  sf.n_struct = 2 * sf.n_free;

  std::size_t n_slack = 0;
  for (const LpConstraint& c : lp.constraints)
    if (c.relation != Relation::kEqual) ++n_slack;
  sf.n_cols = sf.n_struct + n_slack;

  std::size_t slack_at = sf.n_struct;
  for (const LpConstraint& c : lp.constraints) {
    std::vector<Rational> row(sf.n_cols, Rational(0));
    for (const auto& [var, coeff] : c.form) {
      row[2 * var] += coeff;
      row[2 * var + 1] -= coeff;
    }
    Rational b = c.rhs;
    if (c.relation != Relation::kEqual) {
      row[slack_at] = c.relation == Relation::kLessEq ? 1 : -1;
      ++slack_at;
    }
    if (b.is_negative()) {
      for (Rational& x : row) x = -x;
      b = -b;
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(b));
  }

  bool maximize = lp.sense == LpSense::kMaximize;
  std::vector<Rational> primary(sf.n_cols, Rational(0));
  for (const auto& [var, coeff] : lp.objective) {
    Rational c = maximize ? -coeff : coeff;
    primary[2 * var] += c;
    primary[2 * var + 1] -= c;
  }
  sf.costs.push_back(std::move(primary));

  for (std::size_t v : lp.lex_vars) {
    std::vector<Rational> row(sf.n_cols, Rational(0));
    Rational c =
        lp.lex_direction == LexDirection::kMinimize ? Rational(1)
                                                    : Rational(-1);
    row[2 * v] += c;
    row[2 * v + 1] -= c;
    sf.costs.push_back(std::move(row));
  }
  return sf;
}

class SimplexTableau {
 public:
  explicit SimplexTableau(const StandardForm& sf)
      : n_real_(sf.n_cols), m_(sf.rows.size()) {
    basis_.resize(m_);
    row_ids_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) row_ids_[r] = r;

    // A row keeps its slack as the starting basic variable when the slack
    // has coefficient +1 there and nowhere else; every other row gets an
    // artificial.
    std::vector<bool> needs_artificial(m_, true);
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = sf.n_struct; j < sf.n_cols; ++j) {
        if (!(sf.rows[r][j] == Rational(1))) continue;
        bool only_here = true;
        for (std::size_t r2 = 0; r2 < m_ && only_here; ++r2)
          if (r2 != r && !sf.rows[r2][j].is_zero()) only_here = false;
        if (only_here) {
          basis_[r] = j;
          needs_artificial[r] = false;
          break;
        }
      }
    }
    n_artificial_ = 0;
    for (std::size_t r = 0; r < m_; ++r)
      if (needs_artificial[r]) ++n_artificial_;

    std::size_t width = n_real_ + n_artificial_ + 1;
    tableau_.assign(m_, std::vector<Rational>(width, Rational(0)));
    std::size_t art_at = n_real_;
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < n_real_; ++j) tableau_[r][j] = sf.rows[r][j];
      tableau_[r][width - 1] = sf.rhs[r];
      if (needs_artificial[r]) {
        tableau_[r][art_at] = 1;
        basis_[r] = art_at;
        ++art_at;
      }
    }
  }

  std::size_t columns() const { return n_real_ + n_artificial_; }
  std::size_t row_count() const { return m_; }
  bool is_artificial(std::size_t col) const { return col >= n_real_; }
  bool has_artificials() const { return n_artificial_ > 0; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t row_id(std::size_t row) const { return row_ids_[row]; }
  Rational basic_value(std::size_t row) const {
    return tableau_[row][columns()];
  }
  const Rational& reduced_cost(std::size_t obj_row, std::size_t col) const {
    return obj_[obj_row][col];
  }

  // Canonical reduced-cost rows for the given minimization objectives
  // (costs are zero on artificial columns).
  void load_objectives(const std::vector<std::vector<Rational>>& costs) {
    obj_.assign(costs.size(),
                std::vector<Rational>(columns() + 1, Rational(0)));
    for (std::size_t k = 0; k < costs.size(); ++k) {
      for (std::size_t j = 0; j < costs[k].size(); ++j)
        obj_[k][j] = costs[k][j];
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational cb = obj_[k][basis_[r]];
        if (cb.is_zero()) continue;
        for (std::size_t j = 0; j <= columns(); ++j)
          obj_[k][j] -= cb * tableau_[r][j];
      }
    }
  }

  void load_phase1_objective() {
    std::vector<std::vector<Rational>> cost(
        1, std::vector<Rational>(columns(), Rational(0)));
    for (std::size_t j = n_real_; j < columns(); ++j) cost[0][j] = 1;
    load_objectives(cost);
  }

  Rational objective_value(std::size_t k) const { return -obj_[k][columns()]; }

  // Bland entering rule over the lexicographic reduced-cost vector: the
  // smallest-index column whose first nonzero reduced cost is negative.
  std::optional<std::size_t> entering_column(bool allow_artificial) const {
    for (std::size_t j = 0; j < columns(); ++j) {
      if (!allow_artificial && is_artificial(j)) continue;
      for (const auto& row : obj_) {
        if (row[j].is_negative()) return j;
        if (row[j].is_positive()) break;
      }
    }
    return std::nullopt;
  }

  // Bland leaving rule: minimum ratio, ties broken by the smallest basic
  // variable index. nullopt when the column is a feasible ray.
  std::optional<std::size_t> leaving_row(std::size_t col) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& a = tableau_[r][col];
      if (!a.is_positive()) continue;
      Rational ratio = tableau_[r][columns()] / a;
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    std::vector<Rational>& prow = tableau_[row];
    const Rational inv = Rational(1) / prow[col];
    for (Rational& x : prow) x *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row) continue;
      eliminate(tableau_[r], prow, col);
    }
    for (auto& orow : obj_) eliminate(orow, prow, col);
    basis_[row] = col;
  }

  // Pivots basic artificials out after phase 1; rows with no real entry
  // left are redundant and dropped.
  void purge_artificials() {
    for (std::size_t r = 0; r < m_;) {
      if (!is_artificial(basis_[r])) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_real_ && !col; ++j)
        if (!tableau_[r][j].is_zero()) col = j;
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        row_ids_.erase(row_ids_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
      }
    }
    drop_artificial_columns();
  }

  // Once no artificial is basic their columns are dead weight in every
  // later pivot; shrink the tableau to the real columns plus rhs.
  void drop_artificial_columns() {
    if (n_artificial_ == 0) return;
    std::size_t rhs = columns();
    for (auto& row : tableau_) {
      row[n_real_] = std::move(row[rhs]);
      row.resize(n_real_ + 1);
    }
    n_artificial_ = 0;
  }

 private:
  static void eliminate(std::vector<Rational>& target,
                        const std::vector<Rational>& pivot_row,
                        std::size_t col) {
    const Rational factor = target[col];
    if (factor.is_zero()) return;
    for (std::size_t j = 0; j < target.size(); ++j)
      target[j] -= factor * pivot_row[j];
  }

  std::size_t n_real_;
  std::size_t n_artificial_ = 0;
  std::size_t m_;
  std::vector<std::vector<Rational>> tableau_;  // m x (columns + 1)
  std::vector<std::vector<Rational>> obj_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_ids_;  // original constraint row per tableau row
};

Rational evaluate_form(const LinearForm& form,
                       const std::vector<Rational>& point) {
  Rational out;
  for (const auto& [var, coeff] : form) out += coeff * point[var];
  return out;
}

void verify_point_feasible(const LinearProgram& lp,
                           const std::vector<Rational>& point) {
  for (const LpConstraint& c : lp.constraints) {
    Rational lhs = evaluate_form(c.form, point);
    bool ok = true;
    switch (c.relation) {
      case Relation::kLessEq: ok = lhs <= c.rhs; break;
      case Relation::kGreaterEq: ok = lhs >= c.rhs; break;
      case Relation::kEqual: ok = lhs == c.rhs; break;
    }
    if (!ok)
      throw InternalError("lp certificate: solution violates constraint " +
                          (c.label.empty() ? std::string("?") : c.label) +
                          " of " + lp.tag);
  }
}

// Optimality certificate, recomputed from the untouched standard-form data:
// primal feasibility of the split point, dual multipliers from B^T y = c_B
// by exact Gaussian elimination, nonnegative reduced costs, and matching
// primal/dual objective values.
void verify_optimality(const StandardForm& sf, const SimplexTableau& tab,
                       const std::vector<Rational>& split,
                       const std::string& tag) {
  std::size_t m = tab.row_count();

  for (const Rational& x : split)
    if (x.is_negative())
      throw InternalError("lp certificate: negative basic value in " + tag);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = sf.rows[tab.row_id(r)];
    Rational lhs;
    for (std::size_t j = 0; j < sf.n_cols; ++j) lhs += row[j] * split[j];
    if (!(lhs == sf.rhs[tab.row_id(r)]))
      throw InternalError("lp certificate: standard-form residual in " + tag);
  }

  // B^T y = c_B. A basic slack column is a unit vector with zero cost, so
  // its equation fixes one dual at zero outright; what is left is a dense
  // core no larger than the structural basis.
  std::vector<std::optional<Rational>> y(m);
  std::vector<std::size_t> unknown_rows;
  std::vector<std::size_t> struct_cols;
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t col = tab.basis()[r];
    if (col >= sf.n_struct) {
      for (std::size_t r2 = 0; r2 < m; ++r2) {
        if (!sf.rows[tab.row_id(r2)][col].is_zero()) {
          y[r2] = Rational(0);
          break;
        }
      }
    } else {
      struct_cols.push_back(col);
    }
  }
  for (std::size_t r = 0; r < m; ++r)
    if (!y[r]) unknown_rows.push_back(r);
  if (unknown_rows.size() != struct_cols.size())
    throw InternalError("lp certificate: singular basis in " + tag);

  std::size_t core = unknown_rows.size();
  std::vector<std::vector<Rational>> aug(
      core, std::vector<Rational>(core + 1, Rational(0)));
  for (std::size_t eq = 0; eq < core; ++eq) {
    for (std::size_t k = 0; k < core; ++k)
      aug[eq][k] = sf.rows[tab.row_id(unknown_rows[k])][struct_cols[eq]];
    aug[eq][core] = sf.costs[0][struct_cols[eq]];
  }
  for (std::size_t c = 0; c < core; ++c) {
    std::size_t p = c;
    while (p < core && aug[p][c].is_zero()) ++p;
    if (p == core)
      throw InternalError("lp certificate: singular basis in " + tag);
    std::swap(aug[p], aug[c]);
    const Rational inv = Rational(1) / aug[c][c];
    for (std::size_t j = c; j <= core; ++j) aug[c][j] *= inv;
    for (std::size_t r2 = 0; r2 < core; ++r2) {
      if (r2 == c || aug[r2][c].is_zero()) continue;
      const Rational f = aug[r2][c];
      for (std::size_t j = c; j <= core; ++j) aug[r2][j] -= f * aug[c][j];
    }
  }
  for (std::size_t k = 0; k < core; ++k) y[unknown_rows[k]] = aug[k][core];

  for (std::size_t j = 0; j < sf.n_cols; ++j) {
    Rational reduced = sf.costs[0][j];
    for (std::size_t r : unknown_rows)
      reduced -= *y[r] * sf.rows[tab.row_id(r)][j];
    if (reduced.is_negative())
      throw InternalError("lp certificate: dual infeasibility in " + tag);
  }

  Rational primal;
  for (std::size_t j = 0; j < sf.n_cols; ++j)
    primal += sf.costs[0][j] * split[j];
  Rational dual;
  for (std::size_t r : unknown_rows)
    dual += *y[r] * sf.rhs[tab.row_id(r)];
  if (!(primal == dual))
    throw InternalError("lp certificate: duality gap in " + tag);
}

constexpr std::size_t kPivotCap = 4000000;

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  {
    auto problems = lp.check();
    if (!problems.empty())
      throw std::invalid_argument("malformed linear program: " +
                                  problems.front());
  }

  StandardForm sf = build_standard_form(lp);
  SimplexTableau tab(sf);
  std::size_t pivots = 0;

  if (tab.has_artificials()) {
    tab.load_phase1_objective();
    while (auto col = tab.entering_column(/*allow_artificial=*/true)) {
      auto row = tab.leaving_row(*col);
      if (!row) throw InternalError("phase-1 objective unbounded in " + lp.tag);
      tab.pivot(*row, *col);
      if (++pivots > kPivotCap)
        throw InternalError("pivot cap exceeded in " + lp.tag);
    }
    if (!tab.objective_value(0).is_zero())
      return {LpStatus::kInfeasible, {}, Rational(0)};
    tab.purge_artificials();
  }

  tab.load_objectives(sf.costs);
  while (auto col = tab.entering_column(/*allow_artificial=*/false)) {
    auto row = tab.leaving_row(*col);
    if (!row) {
      // A ray that leaves the primary objective flat means a refinement
      // objective is unbounded on the optimal face; these programs are
      // compact, so that is a builder bug rather than a result.
      if (sf.costs.size() > 1 && tab.reduced_cost(0, *col).is_zero())
        throw InternalError("lex refinement unbounded on optimal face of " +
                            lp.tag);
      return {LpStatus::kUnbounded, {}, Rational(0)};
    }
    tab.pivot(*row, *col);
    if (++pivots > kPivotCap)
      throw InternalError("pivot cap exceeded in " + lp.tag);
  }

  std::vector<Rational> split(sf.n_cols, Rational(0));
  for (std::size_t r = 0; r < tab.row_count(); ++r)
    if (!tab.is_artificial(tab.basis()[r]))
      split[tab.basis()[r]] = tab.basic_value(r);
  std::vector<Rational> point(sf.n_free);
  for (std::size_t v = 0; v < sf.n_free; ++v)
    point[v] = split[2 * v] - split[2 * v + 1];

  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.point = std::move(point);
  sol.value = evaluate_form(lp.objective, sol.point);

  verify_point_feasible(lp, sol.point);
  verify_optimality(sf, tab, split, lp.tag);
  return sol;
}

}  // namespace rentfair
