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

#include "crosscover/certificates.hpp"

#include <set>

#include "crosscover/constructions.hpp"
#include "crosscover/error.hpp"
#include "crosscover/graph.hpp"

namespace crosscover {

bool ConflictGraph::conflict(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges)
    if (e.first == i && e.second == j) return true;
  return false;
}

ConflictGraph conflict_graph(const WitnessSet& s, const Rational& lambda) {
  ConflictGraph g;
  g.n = s.points.size();
  g.threshold = Rational(2) * lambda;
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = i + 1; j < g.n; ++j)
      if (l1_distance(s.points[i], s.points[j]) >= g.threshold) g.edges.emplace_back(i, j);
  return g;
}

namespace {

BitGraph compatibility(const std::vector<Point>& pts, const Rational& threshold) {
  BitGraph adj(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (l1_distance(pts[i], pts[j]) < threshold) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
  return adj;
}

}  // namespace

CliqueResult max_compatible_clique(const WitnessSet& s, const Rational& lambda) {
  if (s.points.size() > 64)
    throw Error(ErrorCode::InvalidArgument, "max_compatible_clique supports at most 64 points");
  CliqueResult r;
  r.members = maximum_clique(compatibility(s.points, Rational(2) * lambda));
  r.size = r.members.size();
  return r;
}

std::size_t min_clique_cover(const WitnessSet& s, const Rational& lambda) {
  if (s.points.size() > 48)
    throw Error(ErrorCode::InvalidArgument, "min_clique_cover supports at most 48 points");
  const ConflictGraph g = conflict_graph(s, lambda);
  BitGraph adj(g.n, 0);
  for (const auto& [i, j] : g.edges) {
    adj[i] |= std::uint64_t{1} << j;
    adj[j] |= std::uint64_t{1} << i;
  }
  return chromatic_number(adj);
}

WitnessSet cross_vertices(int d) {
  WitnessSet s{{}, "vertices of K^" + std::to_string(d)};
  for (int sign : {1, -1})
    for (int i = 0; i < d; ++i) s.points.push_back(cross_vertex(d, i, sign));
  return s;
}

WitnessSet facet_centers(int d) {
  WitnessSet s{{}, "facet centres of K^" + std::to_string(d)};
  for (const auto& f : FacetId::all(d)) s.points.push_back(facet_center(f));
  return s;
}

Point touch_point(const FacetId& facet, int j) {
  const int d = facet.dim();
  Point p(d);
  for (int k = 0; k < d; ++k) p[k] = Rational(facet.signs[k] * (k == j ? 1 : 2), 2 * d - 1);
  return p;
}

WitnessSet touch_points(int d) {
  WitnessSet s{{}, "touch points of the 2d+4 construction in K^" + std::to_string(d)};
  for (const auto& f : FacetId::all(d))
    for (int j = 0; j < d; ++j) s.points.push_back(touch_point(f, j));
  return s;
}

WitnessSet plus4_witness_quadruple() {
  WitnessSet s{{}, "touch-point quadruple at pairwise distance 10/7"};
  const std::pair<int, int> picks[] = {{1, 1}, {10, 3}, {12, 3}, {14, 1}};
  for (const auto& [rank, coord] : picks)
    s.points.push_back(touch_point(facet_by_weight_rank(4, rank), coord - 1));
  return s;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::CompleteConflict: return "complete_conflict";
    case CertificateKind::PigeonholeClique: return "pigeonhole_clique";
    case CertificateKind::Structured: return "structured";
    case CertificateKind::Trivial: return "trivial";
  }
  return "unknown";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
  for (auto k : {CertificateKind::CompleteConflict, CertificateKind::PigeonholeClique,
                 CertificateKind::Structured, CertificateKind::Trivial})
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::Parse, "unknown certificate kind '" + s + "'");
}

namespace {

void add_threshold_facts(LowerBoundCertificate& c, std::size_t i_begin, std::size_t i_end,
                         std::size_t j_begin, std::size_t j_end, bool same_block) {
  for (std::size_t i = i_begin; i < i_end; ++i)
    for (std::size_t j = same_block ? i + 1 : j_begin; j < j_end; ++j)
      c.distance_facts.push_back({i, j, l1_distance(c.witness_points[i], c.witness_points[j]),
                                  DistanceFact::Relation::AtLeastThreshold});
}

LowerBoundCertificate complete(int d, int m, Rational lambda, WitnessSet w) {
  LowerBoundCertificate c;
  c.d = d;
  c.m = m;
  c.lambda = std::move(lambda);
  c.kind = CertificateKind::CompleteConflict;
  c.witness_points = std::move(w.points);
  c.label = std::move(w.label);
  add_threshold_facts(c, 0, c.witness_points.size(), 0, c.witness_points.size(), true);
  return c;
}

LowerBoundCertificate structured(int d, int m, Rational lambda, const WitnessSet& anchors,
                                 const WitnessSet& targets) {
  LowerBoundCertificate c;
  c.d = d;
  c.m = m;
  c.lambda = std::move(lambda);
  c.kind = CertificateKind::Structured;
  c.label = anchors.label + " + " + targets.label;
  c.witness_points = anchors.points;
  c.witness_points.insert(c.witness_points.end(), targets.points.begin(), targets.points.end());
  c.anchor_count = anchors.points.size();
  c.clique_bound = max_compatible_clique(targets, c.lambda).size;
  const std::size_t a = c.anchor_count, n = c.witness_points.size();
  add_threshold_facts(c, 0, a, 0, a, true);
  add_threshold_facts(c, 0, a, a, n, false);
  return c;
}

bool counting_closes(const LowerBoundCertificate& c) {
  const std::size_t targets = c.witness_points.size() - c.anchor_count;
  if (static_cast<std::size_t>(c.m) < c.anchor_count) return true;
  return (static_cast<std::size_t>(c.m) - c.anchor_count) * c.clique_bound < targets;
}

LowerBoundCertificate trivial(int d, int m, const char* flag) {
  LowerBoundCertificate c;
  c.d = d;
  c.m = m;
  c.lambda = Rational(0);
  c.kind = CertificateKind::Trivial;
  c.label = "no witness argument applies";
  c.flags.push_back(flag);
  return c;
}

WitnessSet vertices_and_poles(int d) {
  WitnessSet w = cross_vertices(d);
  const Point c = facet_center(FacetId::from_index(d, 0));
  w.points.push_back(c);
  w.points.push_back(-c);
  w.label = "vertices and two opposite facet centres of K^" + std::to_string(d);
  return w;
}

// Facet-centre pigeonhole at the largest ratio (d-k)/d that closes.
LowerBoundCertificate generic_bound(int d, int m) {
  if (d > 6) return trivial(d, m, kSolverLimit);
  const WitnessSet anchors = cross_vertices(d), targets = facet_centers(d);
  for (int k = 1; k < d; ++k) {
    LowerBoundCertificate c = structured(d, m, Rational(d - k, d), anchors, targets);
    if (counting_closes(c)) {
      c.flags.push_back(c.lambda < best_known(d, m).ratio ? kConjecturalGap : kOutsideStatedRange);
      return c;
    }
  }
  return trivial(d, m, kConjecturalGap);
}

}  // namespace

LowerBoundCertificate lower_bound(int d, int m) {
  if (d < 2 || m < 1) throw Error(ErrorCode::InvalidArgument, "lower_bound needs d >= 2, m >= 1");
  if (m < 2 * d) return complete(d, m, Rational(1), cross_vertices(d));

  const Rational ratio(d - 1, d);
  LowerBoundCertificate c;
  if (m <= 2 * d + 1) {
    c = complete(d, m, ratio, vertices_and_poles(d));
  } else if (m == 2 * d + 2 || (m == 2 * d + 3 && (d == 4 || d == 5))) {
    if (d > 6) return trivial(d, m, kSolverLimit);
    c = structured(d, m, ratio, cross_vertices(d), facet_centers(d));
  } else if (m == 2 * d + 4 && d == 4) {
    c = structured(d, m, Rational(5, 7), cross_vertices(d), touch_points(d));
    const WitnessSet quad = plus4_witness_quadruple();
    std::vector<std::size_t> idx;
    for (const auto& q : quad.points)
      for (std::size_t i = c.anchor_count; i < c.witness_points.size(); ++i)
        if (c.witness_points[i] == q) idx.push_back(i);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        c.distance_facts.push_back({idx[a], idx[b], Rational(10, 7), DistanceFact::Relation::Equal});
  } else {
    return generic_bound(d, m);
  }
  if (d < 4) c.flags.push_back(kOutsideStatedRange);
  if (c.kind == CertificateKind::Structured && !counting_closes(c))
    throw Error(ErrorCode::Internal, "counting inequality fails for a built-in certificate");
  return c;
}

CheckResult check_certificate(const LowerBoundCertificate& c) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
  if (c.d < 1 || c.m < 1) return fail("d and m must be positive");
  if (c.kind == CertificateKind::Trivial) {
    if (!c.lambda.is_zero()) return fail("trivial certificate must claim lambda = 0");
    return {true, {}};
  }
  if (c.lambda.sign() <= 0 || c.lambda > Rational(1))
    return fail("lambda " + c.lambda.str() + " outside (0, 1]");

  const auto& pts = c.witness_points;
  const std::size_t n = pts.size();
  std::set<std::vector<std::string>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i].dim() != static_cast<std::size_t>(c.d))
      return fail("witness point " + std::to_string(i) + " has wrong dimension");
    if (l1_norm(pts[i]) > Rational(1))
      return fail("witness point " + std::to_string(i) + " lies outside K^d");
    std::vector<std::string> key;
    for (const auto& x : pts[i]) key.push_back(x.str());
    if (!seen.insert(key).second) return fail("witness point " + std::to_string(i) + " is repeated");
  }

  const Rational threshold = Rational(2) * c.lambda;
  for (std::size_t k = 0; k < c.distance_facts.size(); ++k) {
    const DistanceFact& f = c.distance_facts[k];
    const std::string where = "distance fact " + std::to_string(k) + " (" + std::to_string(f.i) +
                              ", " + std::to_string(f.j) + ")";
    if (f.i >= n || f.j >= n) return fail(where + " refers to a missing point");
    const Rational dist = l1_distance(pts[f.i], pts[f.j]);
    if (dist != f.value) return fail(where + ": recorded " + f.value.str() + ", actual " + dist.str());
    if (f.relation == DistanceFact::Relation::AtLeastThreshold && dist < threshold)
      return fail(where + ": " + dist.str() + " < 2 lambda = " + threshold.str());
  }

  auto pairwise_conflict = [&](std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1,
                               bool same) -> std::string {
    for (std::size_t i = i0; i < i1; ++i)
      for (std::size_t j = same ? i + 1 : j0; j < j1; ++j)
        if (l1_distance(pts[i], pts[j]) < threshold)
          return "points " + std::to_string(i) + " and " + std::to_string(j) +
                 " are closer than 2 lambda = " + threshold.str();
    return {};
  };
  auto clique_ok = [&](std::size_t from) -> std::string {
    const std::vector<Point> sub(pts.begin() + static_cast<std::ptrdiff_t>(from), pts.end());
    if (sub.size() > 64) return "too many points for the clique solver";
    const std::size_t omega = maximum_clique(compatibility(sub, threshold)).size();
    if (omega > c.clique_bound)
      return "compatible subset of size " + std::to_string(omega) + " exceeds claimed bound " +
             std::to_string(c.clique_bound);
    return {};
  };
  const auto m = static_cast<std::size_t>(c.m);

  switch (c.kind) {
    case CertificateKind::CompleteConflict: {
      if (auto e = pairwise_conflict(0, n, 0, n, true); !e.empty()) return fail(e);
      if (n <= m) return fail("only " + std::to_string(n) + " conflicting points for m = " + std::to_string(m));
      break;
    }
    case CertificateKind::PigeonholeClique: {
      if (auto e = clique_ok(0); !e.empty()) return fail(e);
      if (m * c.clique_bound >= n)
        return fail("counting: " + std::to_string(m) + " * " + std::to_string(c.clique_bound) +
                    " >= " + std::to_string(n));
      break;
    }
    case CertificateKind::Structured: {
      const std::size_t a = c.anchor_count;
      if (a > n) return fail("anchor count exceeds witness size");
      if (auto e = pairwise_conflict(0, a, 0, a, true); !e.empty()) return fail("anchors: " + e);
      if (m < a) break;
      if (auto e = pairwise_conflict(0, a, a, n, false); !e.empty()) return fail("anchor/target: " + e);
      if (auto e = clique_ok(a); !e.empty()) return fail("targets: " + e);
      if ((m - a) * c.clique_bound >= n - a)
        return fail("counting: (" + std::to_string(m) + " - " + std::to_string(a) + ") * " +
                    std::to_string(c.clique_bound) + " >= " + std::to_string(n - a));
      break;
    }
    case CertificateKind::Trivial: break;
  }
  return {true, {}};
}

}  // namespace crosscover
