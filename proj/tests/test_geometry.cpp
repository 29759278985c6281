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

#include <random>
#include <set>

#include "crosscover/error.hpp"
#include "crosscover/geometry.hpp"
#include "support.hpp"

using namespace crosscover;
using testing_support::q;
using testing_support::random_point_in_body;

namespace {

Point uniform(int d, Rational v) { return Point(std::vector<Rational>(d, v)); }

}  // namespace

TEST_CASE("l1 distance examples") {
  for (int d = 2; d <= 6; ++d) {
    CAPTURE(d);
    const Point c = uniform(d, q(1, d));
    CHECK(l1_distance(c, c) == 0);
    CHECK(l1_distance(c, -c) == 2);
    Point p = -c;
    p[0] = q(1, d);
    CHECK(l1_distance(p, c) == q(2 * (d - 1), d));
  }
  CHECK(l1_distance(Point{q(3, 14), q(3, 14), 0, 0}, Point{q(1, 7), q(2, 7), q(2, 7), q(2, 7)}) ==
        q(5, 7));
}

TEST_CASE("l1 distance rejects mismatched dimensions") {
  try {
    (void)l1_distance(Point{1, 0}, Point{1, 0, 0});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("l1 distance is a metric on random rational triples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int d = 2 + t % 4;
    const Point a = random_point_in_body(rng, d), b = random_point_in_body(rng, d),
                c = random_point_in_body(rng, d);
    CHECK(l1_distance(a, b) >= 0);
    CHECK(l1_distance(a, b) == l1_distance(b, a));
    CHECK(l1_distance(a, c) <= l1_distance(a, b) + l1_distance(b, c));
    CHECK((l1_distance(a, b) == 0) == (a == b));
  }
}

TEST_CASE("homothet containment examples") {
  CHECK(homothet_contains(Homothet::make(1, Point(4)), cross_vertex(4, 2, -1)));
  const Point c{q(1, 4), q(1, 4), q(1, 4), q(1, 4)};
  CHECK(homothet_contains(Homothet::make(q(3, 4), Point{q(1, 4), 0, 0, 0}), c));
  CHECK(l1_distance(Point{q(1, 4), 0, 0, 0}, c) == q(3, 4));
  CHECK_FALSE(homothet_contains(Homothet::make(q(3, 4), Point{q(-1, 4), 0, 0, 0}), c));
  CHECK(l1_distance(Point{q(-1, 4), 0, 0, 0}, c) == q(5, 4));
}

TEST_CASE("homothet ratio must lie in (0, 1]") {
  CHECK_THROWS_AS(Homothet::make(0, Point(2)), Error);
  CHECK_THROWS_AS(Homothet::make(q(3, 2), Point(2)), Error);
  CHECK_NOTHROW(Homothet::make(1, Point(2)));
}

TEST_CASE("homothet halfspaces") {
  const auto k2 = homothet_halfspaces(Homothet::make(1, Point(2)));
  REQUIRE(k2.halfspaces.size() == 4);
  std::set<std::vector<std::string>> normals;
  for (const auto& h : k2.halfspaces) {
    CHECK(h.offset == 1);
    CHECK_FALSE(h.strict);
    normals.insert({h.normal[0].str(), h.normal[1].str()});
  }
  CHECK(normals == std::set<std::vector<std::string>>{{"1", "1"}, {"1", "-1"}, {"-1", "1"}, {"-1", "-1"}});

  const auto h = homothet_halfspaces(Homothet::make(q(5, 7), Point{q(2, 7), 0, 0, 0}));
  REQUIRE(h.halfspaces.size() == 16);
  for (const auto& hs : h.halfspaces) CHECK(hs.offset == q(5, 7) + hs.normal[0] * q(2, 7));
}

TEST_CASE("halfspace membership agrees with homothet_contains") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const int d = 2 + t % 4;
    const Rational ratio = q(1 + static_cast<long>(rng() % 9), 9);
    const Homothet h = Homothet::make(ratio, random_point_in_body(rng, d, 6));
    const Point p = random_point_in_body(rng, d, 6);
    CHECK(homothet_halfspaces(h).contains(p) == homothet_contains(h, p));
  }
}

TEST_CASE("central symmetry and segment bound") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    const int d = 2 + t % 3;
    const Rational ratio = q(1 + t % 8, 8);
    const Point u = random_point_in_body(rng, d, 4);
    const Point p = random_point_in_body(rng, d, 4), r = random_point_in_body(rng, d, 4);
    const Homothet h = Homothet::make(ratio, u), g = Homothet::make(ratio, -u);
    CHECK(homothet_contains(h, p) == homothet_contains(g, -p));
    if (homothet_contains(h, p) && homothet_contains(h, r))
      CHECK(ratio * 2 >= l1_distance(p, r));
  }
}

TEST_CASE("facet indexing") {
  for (int d = 2; d <= 6; ++d) {
    const auto all = FacetId::all(d);
    REQUIRE(all.size() == (std::size_t{1} << d));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].index() == i);
      CHECK(FacetId::from_index(d, i) == all[i]);
    }
    CHECK(all.front().signs == std::vector<int>(d, 1));
    CHECK(all.back().signs == std::vector<int>(d, -1));
  }
}

TEST_CASE("weight-major facet numbering is a bijection ordered by weight") {
  for (int d = 2; d <= 6; ++d) {
    std::set<std::uint64_t> seen;
    int previous_weight = 0;
    for (int r = 1; r <= (1 << d); ++r) {
      const FacetId f = facet_by_weight_rank(d, r);
      CHECK(weight_rank(f) == r);
      CHECK(f.negatives() >= previous_weight);
      previous_weight = f.negatives();
      seen.insert(f.index());
    }
    CHECK(seen.size() == (std::size_t{1} << d));
  }
  CHECK(facet_by_weight_rank(4, 1).signs == std::vector<int>{1, 1, 1, 1});
  CHECK(facet_by_weight_rank(4, 2).signs == std::vector<int>{-1, 1, 1, 1});
  CHECK(facet_by_weight_rank(4, 5).signs == std::vector<int>{1, 1, 1, -1});
  CHECK(facet_by_weight_rank(4, 6).signs == std::vector<int>{-1, -1, 1, 1});
  CHECK(facet_by_weight_rank(4, 16).signs == std::vector<int>{-1, -1, -1, -1});
}

TEST_CASE("facet centres") {
  CHECK(facet_center(FacetId{{1, 1, 1, 1}}) == Point{q(1, 4), q(1, 4), q(1, 4), q(1, 4)});
  CHECK(facet_center(FacetId{{-1, -1, -1, -1}}) == -facet_center(FacetId{{1, 1, 1, 1}}));
  CHECK(facet_center(FacetId{{1, -1, 1, 1, 1}}) ==
        Point{q(1, 5), q(-1, 5), q(1, 5), q(1, 5), q(1, 5)});
}

TEST_CASE("facet polytope") {
  const auto seg = facet_polytope(FacetId{{1, 1}});
  CHECK(seg.contains(Point{1, 0}));
  CHECK(seg.contains(Point{0, 1}));
  CHECK(seg.contains(Point{q(1, 2), q(1, 2)}));
  CHECK_FALSE(seg.contains(Point{q(1, 2), q(1, 3)}));
  CHECK_FALSE(seg.contains(Point{q(3, 2), q(-1, 2)}));

  for (int d = 2; d <= 5; ++d) {
    for (const auto& f : FacetId::all(d)) {
      const auto poly = facet_polytope(f);
      REQUIRE(poly.halfspaces.size() == static_cast<std::size_t>(d + 2));
      for (int i = 0; i < d; ++i) CHECK(poly.contains(cross_vertex(d, i, f.signs[i])));
      for (int i = 0; i < d; ++i) CHECK_FALSE(poly.contains(cross_vertex(d, i, -f.signs[i])));
      const Point c = facet_center(f);
      for (std::size_t k = 0; k < poly.halfspaces.size(); ++k) {
        const auto& h = poly.halfspaces[k];
        const Rational lhs = dot(h.normal, c.coords());
        CHECK(lhs <= h.offset);
        CHECK((lhs == h.offset) == (k < 2));
      }
    }
  }
}

TEST_CASE("shrunk facet") {
  const FacetId plus{{1, 1, 1, 1}};
  // Image of the facet is {x in F : x_4 >= 1 - lambda}.
  const auto s = shrunk_facet(plus, 4, q(3, 4));
  CHECK(s.contains(Point{0, 0, 0, 1}));
  CHECK(s.contains(Point{q(3, 4), 0, 0, q(1, 4)}));
  CHECK_FALSE(s.contains(Point{q(3, 4) + q(1, 100), 0, 0, q(1, 4) - q(1, 100)}));
  CHECK_FALSE(s.contains(Point{q(1, 2), q(1, 2), 0, 0}));

  std::mt19937_64 rng(3);
  const Rational lambda = q(999, 1000);
  const auto almost = shrunk_facet(plus, 1, lambda);
  const auto full = facet_polytope(plus);
  for (int t = 0; t < 200; ++t) {
    const Point p = random_point_in_body(rng, 4, 10);
    Rational n;
    std::vector<Rational> c;
    for (const auto& x : p) { c.push_back(abs(x)); n += abs(x); }
    if (n.is_zero()) continue;
    for (auto& x : c) x /= n;
    const Point on(c);
    if (full.contains(on) && on[0] >= 1 - lambda) CHECK(almost.contains(on));
  }

  for (int d = 3; d <= 6; ++d) {
    const FacetId f = FacetId::all(d)[3];
    const Rational below = q(d - 1, d) - q(1, 1000);
    for (int k = 1; k <= d; ++k)
      CHECK_FALSE(shrunk_facet(f, k, below).contains(facet_center(f)));
  }
  CHECK_THROWS_AS(shrunk_facet(plus, 1, 1), Error);
  CHECK_THROWS_AS(shrunk_facet(plus, 1, 0), Error);
  CHECK_THROWS_AS(shrunk_facet(plus, 5, q(1, 2)), Error);
}
