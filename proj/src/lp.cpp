// Copyright 2026 The crosscover Authors
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

#include "crosscover/lp.hpp"

#include <cstddef>
#include <limits>
#include <string>

#include "crosscover/error.hpp"

namespace crosscover {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for: maximize c.y, y >= 0, rows.y = rhs. The last entry of
// every row (objective included) is the right-hand side; the objective row
// holds reduced costs and minus the current objective value.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, std::vector<mpq_class>(cols + 1)),
        obj_(cols + 1), basis_(rows, kNone) {}

  std::vector<mpq_class>& row(std::size_t i) { return rows_[i]; }
  std::vector<mpq_class>& objective() { return obj_; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t pivots() const { return pivots_; }

  // Resets the objective row to the reduced costs of cost vector c.
  void price(const std::vector<mpq_class>& c) {
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = c[j];
    obj_[cols_] = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const mpq_class& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(rows_[i][j]) != 0) obj_[j] -= cb * rows_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    ++pivots_;
    std::vector<mpq_class>& pr = rows_[r];
    const mpq_class inv = 1 / pr[s];
    nz_.clear();
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(pr[j]) == 0) continue;
      pr[j] *= inv;
      nz_.push_back(j);
    }
    auto eliminate = [&](std::vector<mpq_class>& target) {
      if (sgn(target[s]) == 0) return;
      const mpq_class f = target[s];
      for (std::size_t j : nz_) target[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(obj_);
    basis_[r] = s;
  }

  enum class Result { Optimal, Unbounded };

  // Bland's rule: lowest-index improving column, ties in the ratio test go to
  // the lowest-index basic variable.
  Result run(std::size_t usable_cols) {
    for (;;) {
      std::size_t s = kNone;
      for (std::size_t j = 0; j < usable_cols; ++j)
        if (sgn(obj_[j]) > 0) { s = j; break; }
      if (s == kNone) return Result::Optimal;
      std::size_t r = kNone;
      mpq_class best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][s]) <= 0) continue;
        mpq_class ratio = rows_[i][cols_] / rows_[i][s];
        if (r == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == kNone) return Result::Unbounded;
      pivot(r, s);
    }
  }

  void drop_row(std::size_t i) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> obj_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nz_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  const std::size_t d = static_cast<std::size_t>(lp.dim);
  const std::size_t n = lp.constraints.size();
  if (lp.objective.size() != d)
    throw Error(ErrorCode::DimensionMismatch, "objective has wrong dimension");
  for (const auto& h : lp.constraints) {
    if (h.normal.size() != d)
      throw Error(ErrorCode::DimensionMismatch, "constraint has wrong dimension");
    if (h.strict)
      throw Error(ErrorCode::InvalidArgument, "lp_solve takes closed constraints only");
  }

  // Columns: x+ (d), x- (d), slacks (n), artificials (one per negative rhs).
  std::vector<bool> flipped(n);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < n; ++i) {
    flipped[i] = lp.constraints[i].offset.sign() < 0;
    artificials += flipped[i];
  }
  const std::size_t real_cols = 2 * d + n;
  const std::size_t cols = real_cols + artificials;
  Tableau tab(n, cols);
  std::size_t next_art = real_cols;
  for (std::size_t i = 0; i < n; ++i) {
    const Halfspace& h = lp.constraints[i];
    const int sign = flipped[i] ? -1 : 1;
    auto& row = tab.row(i);
    for (std::size_t k = 0; k < d; ++k) {
      if (h.normal[k].is_zero()) continue;
      row[k] = sign * h.normal[k].raw();
      row[d + k] = -row[k];
    }
    row[2 * d + i] = sign;
    row[cols] = sign * h.offset.raw();
    if (flipped[i]) {
      row[next_art] = 1;
      tab.basic(i) = next_art++;
    } else {
      tab.basic(i) = 2 * d + i;
    }
  }

  LpOutcome out;
  if (artificials > 0) {
    std::vector<mpq_class> c1(cols);
    for (std::size_t j = real_cols; j < cols; ++j) c1[j] = -1;
    tab.price(c1);
    tab.run(cols);
    if (sgn(tab.objective()[cols]) != 0) {
      out.status = LpOutcome::Status::Infeasible;
      out.pivots = tab.pivots();
      return out;
    }
    // Degenerate artificials still basic at level zero: pivot them out.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basic(i) < real_cols) { ++i; continue; }
      std::size_t s = kNone;
      for (std::size_t j = 0; j < real_cols; ++j)
        if (sgn(tab.row(i)[j]) != 0) { s = j; break; }
      if (s == kNone) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, s);
        ++i;
      }
    }
    for (std::size_t i = 0; i < tab.rows(); ++i)
      for (std::size_t j = real_cols; j < cols; ++j) tab.row(i)[j] = 0;
  }

  std::vector<mpq_class> c2(cols);
  for (std::size_t k = 0; k < d; ++k) {
    c2[k] = lp.objective[k].raw();
    c2[d + k] = -c2[k];
  }
  tab.price(c2);
  const auto result = tab.run(real_cols);
  out.pivots = tab.pivots();
  if (result == Tableau::Result::Unbounded) {
    out.status = LpOutcome::Status::Unbounded;
    return out;
  }

  std::vector<mpq_class> y(real_cols);
  for (std::size_t i = 0; i < tab.rows(); ++i)
    y[tab.basic(i)] = tab.row(i)[cols];
  out.status = LpOutcome::Status::Optimal;
  out.point = Point(d);
  for (std::size_t k = 0; k < d; ++k) out.point[k] = Rational(mpq_class(y[k] - y[d + k]));
  out.value = Rational(mpq_class(-tab.objective()[cols]));
  out.dual.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.dual.emplace_back(mpq_class(-tab.objective()[2 * d + i]));
  return out;
}

Emptiness region_emptiness(std::span<const Halfspace> region, int dim,
                           bool check_bounded) {
  const std::size_t d = static_cast<std::size_t>(dim);
  LinearProgram lp;
  lp.dim = dim + 1;
  lp.objective.assign(d + 1, Rational(0));
  lp.objective[d] = Rational(1);
  lp.constraints.reserve(region.size() + 2);
  for (const auto& h : region) {
    if (h.normal.size() != d)
      throw Error(ErrorCode::DimensionMismatch, "region constraint has wrong dimension");
    Halfspace c;
    c.normal.reserve(d + 1);
    if (!h.strict) {
      c.normal = h.normal;
      c.normal.emplace_back(0);
      c.offset = h.offset;
    } else {
      mpq_class norm = 0;
      for (const auto& a : h.normal) norm += ::abs(a.raw());
      if (sgn(norm) == 0)
        throw Error(ErrorCode::InvalidArgument, "halfspace with zero normal");
      for (const auto& a : h.normal) c.normal.emplace_back(mpq_class(a.raw() / norm));
      c.normal.emplace_back(1);
      c.offset = Rational(mpq_class(h.offset.raw() / norm));
    }
    lp.constraints.push_back(std::move(c));
  }
  Halfspace upper{std::vector<Rational>(d + 1), Rational(1), false};
  upper.normal[d] = Rational(1);
  Halfspace lower{std::vector<Rational>(d + 1), Rational(0), false};
  lower.normal[d] = Rational(-1);
  lp.constraints.push_back(std::move(upper));
  lp.constraints.push_back(std::move(lower));

  if (check_bounded) {
    LinearProgram probe{dim, {}, std::vector<Rational>(d)};
    for (const auto& h : region) {
      Halfspace c = h;
      c.strict = false;
      probe.constraints.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < d; ++k) {
      for (int sign : {1, -1}) {
        probe.objective.assign(d, Rational(0));
        probe.objective[k] = Rational(sign);
        if (lp_solve(probe).status == LpOutcome::Status::Unbounded)
          throw Error(ErrorCode::Precondition,
                      "region relaxation is unbounded along axis " + std::to_string(k));
      }
    }
  }

  const LpOutcome res = lp_solve(lp);
  Emptiness out;
  if (!res.optimal() || res.value.sign() <= 0) return out;
  out.empty = false;
  out.margin = res.value;
  out.witness = Point(d);
  for (std::size_t k = 0; k < d; ++k) out.witness[k] = res.point[k];
  return out;
}

}  // namespace crosscover
