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

#ifndef CROSSCOVER_VERIFIER_HPP
#define CROSSCOVER_VERIFIER_HPP

#include <cstddef>
#include <vector>

#include "crosscover/geometry.hpp"

namespace crosscover {

/// m homothets of a common ratio: the candidate cover of K^d.
struct Covering {
  int dim = 0;
  Rational ratio;
  std::vector<Point> centers;

  /// Throws InvalidArgument / DimensionMismatch on a malformed covering.
  void validate() const;
  Homothet homothet(std::size_t i) const { return Homothet{ratio, centers[i]}; }
};

enum class VerifyMode {
  FullBody,
  /// Subtract on each facet only; sound when every homothet contains the origin.
  BoundaryOnly,
  /// BoundaryOnly when its precondition holds, FullBody otherwise.
  Auto,
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Auto;
  unsigned threads = 1;
  std::size_t region_cap = 1'000'000;
  bool prune_redundant = true;
};

struct SubtractionTrace {
  std::size_t regions_explored = 0;
  std::size_t lp_solves = 0;
  std::size_t peak_live_regions = 0;
};

struct CoverageResult {
  bool covered = false;
  /// Set when uncovered: a point of K^d strictly outside every homothet.
  Point witness;
  /// min_i ||witness - u_i||_1 - ratio, positive when uncovered.
  Rational margin;
  /// Every surviving piece; their union is the uncovered part of K^d (of its
  /// boundary in BoundaryOnly mode).
  std::vector<std::vector<Halfspace>> uncovered_regions;
  SubtractionTrace trace;
  VerifyMode mode_used = VerifyMode::FullBody;
};

/// A mixed open/closed convex region.
using Region = std::vector<Halfspace>;

/// The 2^d pieces region & H_1 & ... & H_{j-1} & not(H_j), one per halfspace
/// of h in canonical order, before any emptiness pruning.
std::vector<Region> subtract_homothet(const Region& region, const Homothet& h);

CoverageResult verify_covering(const Covering& covering, const VerifyOptions& options = {});

/// True iff facet & h lies inside the facet shrunk by h.ratio towards its
/// vertex sigma_k e_k (k = vertex_index, 1-based). Requires that vertex in h
/// and 0 < h.ratio < 1.
bool facet_shadow_check(const FacetId& facet, int vertex_index, const Homothet& h);

}  // namespace crosscover

#endif  // CROSSCOVER_VERIFIER_HPP
