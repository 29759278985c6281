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

#ifndef CROSSCOVER_CERTIFICATES_HPP
#define CROSSCOVER_CERTIFICATES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crosscover/geometry.hpp"

namespace crosscover {

struct WitnessSet {
  std::vector<Point> points;
  std::string label;
};

/// Edge {i, j} iff l1_distance(p_i, p_j) >= threshold = 2 lambda: for every
/// mu < lambda no mu-homothet holds both endpoints.
struct ConflictGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  Rational threshold;

  bool conflict(std::size_t i, std::size_t j) const;
};

ConflictGraph conflict_graph(const WitnessSet& s, const Rational& lambda);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> members;
};

/// Largest subset with all pairwise distances < 2 lambda. |S| <= 64.
CliqueResult max_compatible_clique(const WitnessSet& s, const Rational& lambda);
/// Fewest compatible subsets covering S, i.e. the chromatic number of the
/// conflict graph. |S| <= 48.
std::size_t min_clique_cover(const WitnessSet& s, const Rational& lambda);

// Witness families.
WitnessSet cross_vertices(int d);
WitnessSet facet_centers(int d);
/// Touch point of facet sigma at coordinate j (0-based): sigma_j/(2d-1) at j,
/// 2 sigma_k/(2d-1) elsewhere.
Point touch_point(const FacetId& facet, int j);
/// All d 2^d touch points, facets in canonical order, then j.
WitnessSet touch_points(int d);
/// Four touch points of K^4 at pairwise distance exactly 10/7: facets of
/// weight rank 1, 10, 12, 14 at coordinates 1, 3, 3, 1.
WitnessSet plus4_witness_quadruple();

enum class CertificateKind {
  /// All witness points pairwise conflict and there are more than m of them.
  CompleteConflict,
  /// m copies each hold at most clique_bound points, m * bound < |W|.
  PigeonholeClique,
  /// Anchors pairwise conflict and conflict with every target; the other
  /// m - |anchors| copies hold at most clique_bound targets each.
  Structured,
  /// The claim gamma >= 0.
  Trivial,
};

std::string to_string(CertificateKind kind);
CertificateKind certificate_kind_from_string(const std::string& s);

struct DistanceFact {
  enum class Relation { AtLeastThreshold, Equal };

  std::size_t i = 0;
  std::size_t j = 0;
  Rational value;
  Relation relation = Relation::AtLeastThreshold;
};

/// Claims gamma^d_m(K^d) >= lambda: for every mu < lambda, m homothets of
/// ratio mu miss some witness point.
struct LowerBoundCertificate {
  int d = 0;
  int m = 0;
  Rational lambda;
  CertificateKind kind = CertificateKind::Trivial;
  std::vector<Point> witness_points;
  /// Structured: the first anchor_count witness points are anchors.
  std::size_t anchor_count = 0;
  /// PigeonholeClique / Structured: claimed bound on compatible subsets.
  std::size_t clique_bound = 0;
  std::vector<DistanceFact> distance_facts;
  std::vector<std::string> flags;
  std::string label;
};

inline constexpr const char* kConjecturalGap = "conjectural gap";
inline constexpr const char* kOutsideStatedRange = "outside stated range";
inline constexpr const char* kSolverLimit = "solver limit";

/// Strongest certificate available for (d, m). Requires d >= 2, m >= 1.
LowerBoundCertificate lower_bound(int d, int m);

struct CheckResult {
  bool valid = false;
  std::string failure;  // first failing fact when invalid
};

/// Recomputes every distance, clique bound and counting inequality.
CheckResult check_certificate(const LowerBoundCertificate& cert);

}  // namespace crosscover

#endif  // CROSSCOVER_CERTIFICATES_HPP
