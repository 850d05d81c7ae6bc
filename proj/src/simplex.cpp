// Copyright 2026 The cerny-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cernylab/simplex.hpp"

#include <stdexcept>

namespace cernylab::lp {

namespace {

class Tableau {
 public:
  Tableau(const Problem& p) : num_original_(static_cast<int>(p.c.size())) {
    const int m = static_cast<int>(p.rows.size());
    // Column layout: original variables, then one slack/surplus per
    // inequality row, then one artificial per kGe/kEq row.
    int num_slack = 0, num_artificial = 0;
    for (const Row& r : p.rows) {
      if (r.rel != Rel::kEq) ++num_slack;
      if (r.rel != Rel::kLe || r.b < Rational(0)) ++num_artificial;
    }
    // Conservative: artificials are assigned after b-normalization below.
    num_cols_ = num_original_ + num_slack;  // artificials appended on the fly
    rows_.assign(m, std::vector<Rational>(num_cols_));
    rhs_.assign(m, Rational(0));
    basis_.assign(m, -1);

    int slack_cursor = num_original_;
    for (int i = 0; i < m; ++i) {
      const Row& r = p.rows[i];
      if (static_cast<int>(r.a.size()) != num_original_)
        throw std::invalid_argument("lp: row length mismatch");
      bool flip = r.b < Rational(0);
      Rel rel = r.rel;
      if (flip && rel == Rel::kLe) rel = Rel::kGe;
      else if (flip && rel == Rel::kGe) rel = Rel::kLe;
      for (int j = 0; j < num_original_; ++j)
        rows_[i][j] = flip ? -r.a[j] : r.a[j];
      rhs_[i] = flip ? -r.b : r.b;
      if (r.rel != Rel::kEq) {
        rows_[i][slack_cursor] = (rel == Rel::kLe) ? Rational(1) : Rational(-1);
        if (rel == Rel::kLe) basis_[i] = slack_cursor;
        ++slack_cursor;
      }
    }
    // Artificials for every row still lacking a basic variable.
    for (int i = 0; i < m; ++i) {
      if (basis_[i] >= 0) continue;
      for (auto& row : rows_) row.push_back(Rational(0));
      rows_[i][num_cols_] = Rational(1);
      basis_[i] = num_cols_;
      artificial_first_ = (artificial_first_ < 0) ? num_cols_ : artificial_first_;
      ++num_cols_;
    }
    if (artificial_first_ < 0) artificial_first_ = num_cols_;
  }

  bool needs_phase_one() const { return artificial_first_ < num_cols_; }

  /// Runs the simplex loop for the given full-length cost vector.
  /// Returns false on unboundedness.
  bool optimize(const std::vector<Rational>& cost) {
    std::vector<Rational> reduced = cost;
    value_ = Rational(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == Rational(0)) continue;
      value_ += cb * rhs_[i];
      for (int j = 0; j < num_cols_; ++j) reduced[j] -= cb * rows_[i][j];
    }
    while (true) {
      // Bland: entering column = smallest improving index.
      int enter = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (forbidden_artificials_ && j >= artificial_first_) break;
        if (reduced[j] > Rational(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;  // optimal

      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= Rational(0)) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded

      pivot(leave, enter, &reduced);
    }
    return true;
  }

  void pivot(int row, int col, std::vector<Rational>* reduced) {
    Rational inv = Rational(1) / rows_[row][col];
    for (int j = 0; j < num_cols_; ++j) rows_[row][j] *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      Rational factor = rows_[i][col];
      if (factor == Rational(0)) continue;
      for (int j = 0; j < num_cols_; ++j) rows_[i][j] -= factor * rows_[row][j];
      rhs_[i] -= factor * rhs_[row];
    }
    if (reduced) {
      Rational factor = (*reduced)[col];
      if (factor != Rational(0)) {
        value_ += factor * rhs_[row];
        for (int j = 0; j < num_cols_; ++j) (*reduced)[j] -= factor * rows_[row][j];
      }
    }
    basis_[row] = col;
  }

  /// After phase one: pivot basic artificials out, dropping redundant rows.
  void eliminate_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < artificial_first_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < artificial_first_; ++j)
        if (rows_[i][j] != Rational(0)) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(static_cast<int>(i), col, nullptr);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        rhs_.erase(rhs_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
    forbidden_artificials_ = true;
  }

  std::vector<Rational> phase_one_cost() const {
    std::vector<Rational> c(num_cols_, Rational(0));
    for (int j = artificial_first_; j < num_cols_; ++j) c[j] = Rational(-1);
    return c;
  }

  std::vector<Rational> extend_cost(const std::vector<Rational>& c) const {
    std::vector<Rational> full(num_cols_, Rational(0));
    for (int j = 0; j < num_original_ && j < static_cast<int>(c.size()); ++j) full[j] = c[j];
    return full;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(num_original_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < num_original_) x[basis_[i]] = rhs_[i];
    return x;
  }

  const Rational& value() const { return value_; }

 private:
  int num_original_;
  int num_cols_ = 0;
  int artificial_first_ = -1;
  bool forbidden_artificials_ = false;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  Rational value_;
};

}  // namespace

Result solve(const Problem& p) {
  Problem work = p;
  if (p.sense == Sense::kMinimize)
    for (Rational& cj : work.c) cj = -cj;

  Tableau tableau(work);
  if (tableau.needs_phase_one()) {
    tableau.optimize(tableau.phase_one_cost());  // bounded by construction
    if (tableau.value() != Rational(0)) return {Status::kInfeasible, Rational(0), {}};
    tableau.eliminate_artificials();
  }
  if (!tableau.optimize(tableau.extend_cost(work.c)))
    return {Status::kUnbounded, Rational(0), {}};

  Rational value = tableau.value();
  if (p.sense == Sense::kMinimize) value = -value;
  return {Status::kOptimal, value, tableau.solution()};
}

}  // namespace cernylab::lp
