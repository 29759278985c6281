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

#ifndef CROSSCOVER_LP_HPP
#define CROSSCOVER_LP_HPP

#include <span>
#include <vector>

#include "crosscover/geometry.hpp"

namespace crosscover {

/// maximize objective.x subject to closed constraints; x is free.
struct LinearProgram {
  int dim = 0;
  std::vector<Halfspace> constraints;
  std::vector<Rational> objective;
};

struct LpOutcome {
  enum class Status { Optimal, Infeasible, Unbounded };

  Status status = Status::Infeasible;
  Rational value;
  Point point;
  /// One nonnegative multiplier per constraint with A^T y = c and b.y = value.
  std::vector<Rational> dual;
  std::size_t pivots = 0;

  bool optimal() const { return status == Status::Optimal; }
};

/// Two-phase primal simplex over the rationals with Bland's rule. Strict
/// constraints are rejected; use region_emptiness for those.
LpOutcome lp_solve(const LinearProgram& lp);

struct Emptiness {
  bool empty = true;
  Point witness;
  /// Common slack of the strict constraints (normals scaled to unit l1 norm);
  /// 1 when the region has no strict constraints.
  Rational margin;
};

/// Decides whether the mixed open/closed region is empty by maximizing a
/// uniform margin t in [0, 1] on the strict constraints. The closed relaxation
/// must be bounded; pass check_bounded to have that verified (2d extra LPs).
Emptiness region_emptiness(std::span<const Halfspace> region, int dim,
                           bool check_bounded = false);

}  // namespace crosscover

#endif  // CROSSCOVER_LP_HPP
