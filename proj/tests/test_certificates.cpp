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

#include <doctest.h>

#include <bit>

#include "crosscover/certificates.hpp"
#include "crosscover/constructions.hpp"
#include "crosscover/error.hpp"
#include "support.hpp"

using namespace crosscover;
using testing_support::q;

namespace {

int hamming(const FacetId& a, const FacetId& b) {
  int h = 0;
  for (std::size_t k = 0; k < a.signs.size(); ++k) h += a.signs[k] != b.signs[k] ? 1 : 0;
  return h;
}

// Compatibility on sign vectors: distance (2/d) H < 2 (d-1)/d iff H <= d - 2.
std::vector<std::uint64_t> hamming_compat(int d) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::uint64_t> compat(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::popcount(i ^ j) <= d - 2) compat[i] |= std::uint64_t{1} << j;
  return compat;
}

}  // namespace

TEST_CASE("conflict graph examples") {
  for (int d = 2; d <= 5; ++d) {
    const auto v = conflict_graph(cross_vertices(d), 1);
    CHECK(v.edges.size() == static_cast<std::size_t>(2 * d * (2 * d - 1) / 2));
    CHECK(v.threshold == 2);
  }
  for (int d = 3; d <= 6; ++d) {
    WitnessSet s = cross_vertices(d);
    s.points.push_back(facet_center(FacetId::all(d).front()));
    s.points.push_back(facet_center(FacetId::all(d).back()));
    const auto g = conflict_graph(s, q(d - 1, d));
    CHECK(g.edges.size() == static_cast<std::size_t>((2 * d + 2) * (2 * d + 1) / 2));
  }
}

TEST_CASE("facet-centre conflicts depend only on Hamming distance") {
  for (int d = 2; d <= 5; ++d) {
    const auto facets = FacetId::all(d);
    const auto g = conflict_graph(facet_centers(d), q(d - 1, d));
    for (std::size_t i = 0; i < facets.size(); ++i) {
      for (std::size_t j = 0; j < facets.size(); ++j) {
        if (i == j) continue;
        const int h = hamming(facets[i], facets[j]);
        CHECK(l1_distance(facet_center(facets[i]), facet_center(facets[j])) == q(2 * h, d));
        CHECK(g.conflict(i, j) == (h >= d - 1));
      }
    }
  }
}

TEST_CASE("vertex to facet-centre distances") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& f : FacetId::all(d)) {
      for (int axis = 0; axis < d; ++axis) {
        for (int sign : {1, -1}) {
          const Rational dist = l1_distance(cross_vertex(d, axis, sign), facet_center(f));
          CHECK(dist == (f.signs[axis] == sign ? q(2 * (d - 1), d) : Rational(2)));
        }
      }
    }
  }
}

TEST_CASE("maximum compatible clique on facet centres matches exhaustive enumeration") {
  const auto four = max_compatible_clique(facet_centers(4), q(3, 4));
  CHECK(four.size == 5);
  CHECK(four.members.size() == 5);
  std::size_t best = 0;
  const auto compat = hamming_compat(4);
  for (std::uint32_t mask = 0; mask < (1U << 16); ++mask) {
    bool ok = true;
    for (int i = 0; i < 16 && ok; ++i)
      if (((mask >> i) & 1U) && (mask & ~compat[i]) != 0) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  CHECK(best == 5);
  CHECK(testing_support::enumerate_compatible_subsets(hamming_compat(5)) == 10);
  CHECK(max_compatible_clique(facet_centers(5), q(4, 5)).size == 10);
  CHECK(max_compatible_clique(facet_centers(3), q(2, 3)).size == 2);
}

TEST_CASE("clique results on small sets") {
  const auto s = facet_centers(3);
  CHECK(max_compatible_clique(s, 2).size == s.points.size());
  WitnessSet big;
  for (int i = 0; i < 65; ++i) big.points.push_back(Point{q(i, 100), 0});
  CHECK_THROWS_AS(max_compatible_clique(big, 1), Error);
}

TEST_CASE("minimum clique cover") {
  for (int d = 3; d <= 5; ++d) {
    WitnessSet s = cross_vertices(d);
    s.points.push_back(facet_center(FacetId::all(d).front()));
    s.points.push_back(facet_center(FacetId::all(d).back()));
    CHECK(min_clique_cover(s, q(d - 1, d)) == static_cast<std::size_t>(2 * d + 2));
  }
  CHECK(min_clique_cover(facet_centers(3), q(2, 3)) == 4);
  CHECK(min_clique_cover(facet_centers(4), q(3, 4)) == 4);
  CHECK(min_clique_cover(facet_centers(5), q(4, 5)) == 4);
  CHECK(min_clique_cover(facet_centers(4), 2) == 1);
  WitnessSet big;
  for (int i = 0; i < 49; ++i) big.points.push_back(Point{q(i, 100), 0});
  CHECK_THROWS_AS(min_clique_cover(big, 1), Error);
}

TEST_CASE("touch points and the witness quadruple") {
  const auto n = touch_points(4);
  CHECK(n.points.size() == 64);
  for (const auto& p : n.points) CHECK(l1_norm(p) == 1);
  CHECK(touch_point(FacetId{{1, 1, 1, 1}}, 0) == Point{q(1, 7), q(2, 7), q(2, 7), q(2, 7)});
  const auto quad = plus4_witness_quadruple();
  REQUIRE(quad.points.size() == 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      CHECK(l1_distance(quad.points[a], quad.points[b]) == q(10, 7));
  CHECK(quad.points[0] == touch_point(facet_by_weight_rank(4, 1), 0));
  CHECK(quad.points[1] == touch_point(facet_by_weight_rank(4, 10), 2));
  CHECK(quad.points[2] == touch_point(facet_by_weight_rank(4, 12), 2));
  CHECK(quad.points[3] == touch_point(facet_by_weight_rank(4, 14), 0));
  CHECK(max_compatible_clique(touch_points(4), q(5, 7)).size == 14);
}

TEST_CASE("lower bound examples") {
  CHECK(lower_bound(4, 7).lambda == 1);
  CHECK(lower_bound(4, 7).kind == CertificateKind::CompleteConflict);
  const auto eleven = lower_bound(4, 11);
  CHECK(eleven.lambda == q(3, 4));
  CHECK(eleven.kind == CertificateKind::Structured);
  CHECK(eleven.clique_bound == 5);
  CHECK(eleven.anchor_count == 8);
  const auto twelve = lower_bound(4, 12);
  CHECK(twelve.lambda == q(5, 7));
  std::size_t equal = 0;
  for (const auto& f : twelve.distance_facts)
    if (f.relation == DistanceFact::Relation::Equal) {
      CHECK(f.value == q(10, 7));
      ++equal;
    }
  CHECK(equal == 6);
  const auto thirteen = lower_bound(5, 13);
  CHECK(thirteen.lambda == q(4, 5));
  CHECK(thirteen.clique_bound == 10);
  const auto gap = lower_bound(6, 15);
  CHECK(std::find(gap.flags.begin(), gap.flags.end(), kConjecturalGap) != gap.flags.end());
  const auto three = lower_bound(3, 6);
  CHECK(three.lambda == q(2, 3));
  CHECK(std::find(three.flags.begin(), three.flags.end(), kOutsideStatedRange) != three.flags.end());
  CHECK_THROWS_AS(lower_bound(1, 3), Error);
  CHECK(lower_bound(7, 16).kind == CertificateKind::Trivial);
}

TEST_CASE("every emitted certificate checks and tampering breaks it") {
  for (int d = 2; d <= 6; ++d) {
    for (int m = 1; m <= 2 * d + 4; ++m) {
      CAPTURE(d);
      CAPTURE(m);
      const auto c = lower_bound(d, m);
      const auto r = check_certificate(c);
      CHECK_MESSAGE(r.valid, r.failure);
      auto t = c;
      t.lambda += q(1, 100);
      CHECK_FALSE(check_certificate(t).valid);
    }
  }
}

TEST_CASE("clique bound claims") {
  auto c = lower_bound(4, 10);
  REQUIRE(c.clique_bound == 5);
  c.clique_bound = 6;
  CHECK(check_certificate(c).valid);
  c.clique_bound = 4;
  CHECK_FALSE(check_certificate(c).valid);
  c = lower_bound(4, 11);
  c.clique_bound = 6;
  CHECK_FALSE(check_certificate(c).valid);
}

TEST_CASE("malformed certificates fail with a reason") {
  auto c = lower_bound(4, 9);
  c.witness_points[0] = Point{2, 0, 0, 0};
  auto r = check_certificate(c);
  CHECK_FALSE(r.valid);
  CHECK(r.failure.find("outside") != std::string::npos);
  c = lower_bound(4, 9);
  c.witness_points[1] = c.witness_points[0];
  CHECK_FALSE(check_certificate(c).valid);
  c = lower_bound(4, 12);
  c.distance_facts.front().value += q(1, 7);
  CHECK_FALSE(check_certificate(c).valid);
  c = lower_bound(4, 9);
  c.witness_points.pop_back();
  c.witness_points.pop_back();
  CHECK_FALSE(check_certificate(c).valid);
  LowerBoundCertificate trivial{};
  trivial.d = 3;
  trivial.m = 5;
  trivial.lambda = q(1, 2);
  CHECK_FALSE(check_certificate(trivial).valid);
}

TEST_CASE("lower bounds are monotone and meet the constructions") {
  for (int d = 2; d <= 6; ++d) {
    for (int m = 1; m < 2 * d + 6; ++m) CHECK(lower_bound(d, m + 1).lambda <= lower_bound(d, m).lambda);
    for (int m = 1; m <= 2 * d + 6; ++m) CHECK(lower_bound(d, m).lambda <= best_known(d, m).ratio);
  }
  for (int d = 4; d <= 5; ++d)
    for (int m = 1; m <= 2 * d + 3; ++m) CHECK(lower_bound(d, m).lambda == best_known(d, m).ratio);
  CHECK(lower_bound(4, 12).lambda == best_known(4, 12).ratio);
}

TEST_CASE("certified bounds reject shrunk constructions") {
  for (int d = 3; d <= 4; ++d) {
    for (int m = 1; m <= 2 * d + 4; ++m) {
      const auto c = lower_bound(d, m);
      if (c.lambda.is_zero()) continue;
      Covering k = best_known(d, m).covering;
      k.ratio = c.lambda - q(1, 10000);
      CAPTURE(d);
      CAPTURE(m);
      CHECK_FALSE(verify_covering(k).covered);
    }
  }
}

TEST_CASE("kind names round trip") {
  for (auto k : {CertificateKind::CompleteConflict, CertificateKind::PigeonholeClique,
                 CertificateKind::Structured, CertificateKind::Trivial})
    CHECK(certificate_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(certificate_kind_from_string("nope"), Error);
}
