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

#include "crosscover/geometry.hpp"

#include <string>

#include "crosscover/error.hpp"

namespace crosscover {

Point Point::operator-() const {
  Point out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = -coords_[i];
  return out;
}

Homothet Homothet::make(Rational ratio, Point center) {
  if (ratio.sign() <= 0 || ratio > Rational(1))
    throw Error(ErrorCode::InvalidArgument,
                "homothet ratio must lie in (0, 1], got " + ratio.str());
  return Homothet{std::move(ratio), std::move(center)};
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "dot product of mismatched vectors");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

void require_same_dim(const Point& p, const Point& q) {
  if (p.dim() != q.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                    std::to_string(q.dim()));
}

bool Halfspace::contains(const Point& p) const {
  const Rational lhs = dot(normal, p.coords());
  return strict ? lhs < offset : lhs <= offset;
}

Halfspace Halfspace::complement() const {
  Halfspace out;
  out.normal.reserve(normal.size());
  for (const auto& a : normal) out.normal.push_back(-a);
  out.offset = -offset;
  out.strict = !strict;
  return out;
}

bool HPolytope::contains(const Point& p) const {
  for (const auto& h : halfspaces)
    if (!h.contains(p)) return false;
  return true;
}

FacetId FacetId::from_index(int dim, std::uint64_t index) {
  FacetId f;
  f.signs.resize(dim);
  for (int i = 0; i < dim; ++i)
    f.signs[i] = ((index >> (dim - 1 - i)) & 1U) ? -1 : 1;
  return f;
}

std::vector<FacetId> FacetId::all(int dim) {
  std::vector<FacetId> out;
  const std::uint64_t n = std::uint64_t{1} << dim;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(from_index(dim, i));
  return out;
}

std::uint64_t FacetId::index() const {
  std::uint64_t idx = 0;
  for (int s : signs) idx = (idx << 1) | (s < 0 ? 1U : 0U);
  return idx;
}

int FacetId::negatives() const {
  int n = 0;
  for (int s : signs) n += s < 0;
  return n;
}

namespace {

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

FacetId facet_by_weight_rank(int dim, int rank) {
  if (dim < 1 || rank < 1 || rank > (1 << dim))
    throw Error(ErrorCode::InvalidArgument, "facet rank out of range");
  int remaining = rank - 1;
  for (int k = 0; k <= dim; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      if (remaining == 0) {
        FacetId f;
        f.signs.assign(dim, 1);
        for (int pos : comb) f.signs[pos] = -1;
        return f;
      }
      --remaining;
    } while (k > 0 && next_combination(comb, dim));
  }
  throw Error(ErrorCode::Internal, "facet rank enumeration exhausted");
}

int weight_rank(const FacetId& facet) {
  const int dim = facet.dim();
  for (int r = 1; r <= (1 << dim); ++r)
    if (facet_by_weight_rank(dim, r) == facet) return r;
  throw Error(ErrorCode::Internal, "facet has no rank");
}

Rational l1_norm(const Point& p) {
  mpq_class acc = 0;
  for (const auto& c : p) acc += ::abs(c.raw());
  return Rational(acc);
}

Rational l1_distance(const Point& p, const Point& q) {
  require_same_dim(p, q);
  mpq_class acc = 0, diff;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    diff = p[i].raw() - q[i].raw();
    acc += ::abs(diff);
  }
  return Rational(acc);
}

bool homothet_contains(const Homothet& h, const Point& p) {
  return l1_distance(h.center, p) <= h.ratio;
}

HPolytope homothet_halfspaces(const Homothet& h) {
  const int dim = static_cast<int>(h.center.dim());
  HPolytope poly{dim, {}};
  for (const auto& f : FacetId::all(dim)) {
    Halfspace hs;
    hs.normal.reserve(dim);
    mpq_class offset = h.ratio.raw();
    for (int i = 0; i < dim; ++i) {
      hs.normal.emplace_back(f.signs[i]);
      offset += f.signs[i] * h.center[i].raw();
    }
    hs.offset = Rational(offset);
    poly.halfspaces.push_back(std::move(hs));
  }
  return poly;
}

HPolytope cross_polytope(int dim) {
  return homothet_halfspaces(Homothet{Rational(1), Point(dim)});
}

Point cross_vertex(int dim, int axis, int sign) {
  Point v(dim);
  v[axis] = Rational(sign);
  return v;
}

Point facet_center(const FacetId& facet) {
  const int dim = facet.dim();
  Point c(dim);
  for (int i = 0; i < dim; ++i) c[i] = Rational(facet.signs[i], dim);
  return c;
}

namespace {

std::vector<Rational> signs_as_normal(const FacetId& f, int scale) {
  std::vector<Rational> n;
  n.reserve(f.signs.size());
  for (int s : f.signs) n.emplace_back(scale * s);
  return n;
}

}  // namespace

HPolytope facet_polytope(const FacetId& facet) {
  const int dim = facet.dim();
  HPolytope poly{dim, {}};
  poly.halfspaces.push_back({signs_as_normal(facet, 1), Rational(1), false});
  poly.halfspaces.push_back({signs_as_normal(facet, -1), Rational(-1), false});
  for (int i = 0; i < dim; ++i) {
    std::vector<Rational> n(dim);
    n[i] = Rational(-facet.signs[i]);
    poly.halfspaces.push_back({std::move(n), Rational(0), false});
  }
  return poly;
}

HPolytope shrunk_facet(const FacetId& facet, int vertex_index, const Rational& ratio) {
  const int dim = facet.dim();
  if (ratio.sign() <= 0 || ratio >= Rational(1))
    throw Error(ErrorCode::InvalidArgument,
                "shrink ratio must lie in (0, 1), got " + ratio.str());
  if (vertex_index < 1 || vertex_index > dim)
    throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  HPolytope poly = facet_polytope(facet);
  // sigma_k x_k >= 1 - ratio at the fixed vertex; the other bounds are unchanged.
  poly.halfspaces[2 + vertex_index - 1].offset = ratio - Rational(1);
  return poly;
}

}  // namespace crosscover
