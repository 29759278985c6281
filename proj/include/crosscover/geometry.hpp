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

#ifndef CROSSCOVER_GEOMETRY_HPP
#define CROSSCOVER_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "crosscover/rational.hpp"

namespace crosscover {

/// A point of R^d with exact coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim) {}
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  std::span<const Rational> coords() const { return coords_; }

  Point operator-() const;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

/// The closed set {x : ||x - center||_1 <= ratio}, i.e. ratio*K^d + center.
struct Homothet {
  Rational ratio;
  Point center;

  /// Throws unless 0 < ratio <= 1.
  static Homothet make(Rational ratio, Point center);
};

/// {x : normal.x <= offset}, or with '<' when strict.
struct Halfspace {
  std::vector<Rational> normal;
  Rational offset;
  bool strict = false;

  bool contains(const Point& p) const;
  /// The complementary halfspace: closed becomes strict and vice versa.
  Halfspace complement() const;
};

struct HPolytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;

  bool contains(const Point& p) const;
};

/// Sign vector of a facet of K^d. Canonical order is lexicographic with
/// + before -, so index bit (d-1-i) is set iff signs[i] is negative.
struct FacetId {
  std::vector<int> signs;

  static FacetId from_index(int dim, std::uint64_t index);
  /// All 2^d facets in canonical order.
  static std::vector<FacetId> all(int dim);

  int dim() const { return static_cast<int>(signs.size()); }
  std::uint64_t index() const;
  int negatives() const;
  friend bool operator==(const FacetId&, const FacetId&) = default;
};

/// Weight-major facet numbering: 1-based, ordered by number of negative
/// signs, then by the positions of the negative signs in lexicographic order.
/// Number 1 is (+,...,+), numbers 2..d+1 flip one coordinate, and so on.
FacetId facet_by_weight_rank(int dim, int rank);
int weight_rank(const FacetId& facet);

Rational l1_distance(const Point& p, const Point& q);
Rational l1_norm(const Point& p);
bool homothet_contains(const Homothet& h, const Point& p);

/// The 2^d closed halfspaces sigma.(x - u) <= ratio, in canonical facet order.
HPolytope homothet_halfspaces(const Homothet& h);
HPolytope cross_polytope(int dim);

/// Vertex sign * e_axis, axis is 0-based.
Point cross_vertex(int dim, int axis, int sign);
Point facet_center(const FacetId& facet);
/// sigma.x = 1 as two opposite closed halfspaces, then sigma_i x_i >= 0.
HPolytope facet_polytope(const FacetId& facet);
/// Image of the facet under x -> v + ratio (x - v), v = sigma_k e_k with
/// k = vertex_index (1-based). Requires 0 < ratio < 1.
HPolytope shrunk_facet(const FacetId& facet, int vertex_index, const Rational& ratio);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
void require_same_dim(const Point& p, const Point& q);

}  // namespace crosscover

#endif  // CROSSCOVER_GEOMETRY_HPP
