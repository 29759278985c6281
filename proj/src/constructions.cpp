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

#include "crosscover/constructions.hpp"

#include "crosscover/error.hpp"

namespace crosscover {

std::string to_string(ConstructionName name) {
  switch (name) {
    case ConstructionName::Trivial: return "trivial";
    case ConstructionName::Gamma2d: return "gamma2d";
    case ConstructionName::Plus4: return "plus4";
  }
  return "unknown";
}

namespace {

void pad_to(KnownConstruction& k, int m) {
  while (static_cast<int>(k.covering.centers.size()) < m)
    k.covering.centers.emplace_back(static_cast<std::size_t>(k.d));
  k.m = m;
}

Point axis_point(int d, int axis, const Rational& value) {
  Point p(d);
  p[axis] = value;
  return p;
}

}  // namespace

KnownConstruction construct_trivial(int d, int m) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (m < 1 || m >= 2 * d)
    throw Error(ErrorCode::InvalidArgument,
                "trivial construction needs 1 <= m < 2d; use a better construction for m >= 2d");
  KnownConstruction k{ConstructionName::Trivial, d, m, Rational(1), {d, Rational(1), {}}};
  pad_to(k, m);
  return k;
}

KnownConstruction construct_gamma2d(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "gamma2d construction needs d >= 2");
  const Rational ratio(d - 1, d);
  KnownConstruction k{ConstructionName::Gamma2d, d, 2 * d, ratio, {d, ratio, {}}};
  for (int sign : {1, -1})
    for (int i = 0; i < d; ++i) k.covering.centers.push_back(axis_point(d, i, Rational(sign, d)));
  return k;
}

KnownConstruction construct_plus4(int d) {
  if (d < 4) throw Error(ErrorCode::InvalidArgument, "plus4 construction needs d >= 4");
  const Rational ratio(2 * d - 3, 2 * d - 1);
  const Rational axis(2, 2 * d - 1);
  const Rational corner(3, 2 * (2 * d - 1));
  KnownConstruction k{ConstructionName::Plus4, d, 2 * d + 4, ratio, {d, ratio, {}}};
  for (int sign : {1, -1})
    for (int i = 0; i < d; ++i)
      k.covering.centers.push_back(axis_point(d, i, sign > 0 ? axis : -axis));
  // Corner copies in the order (+,+), (-,+), (-,-), (+,-) on the first two axes.
  const int corner_signs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (const auto& s : corner_signs) {
    Point p(d);
    p[0] = s[0] > 0 ? corner : -corner;
    p[1] = s[1] > 0 ? corner : -corner;
    k.covering.centers.push_back(std::move(p));
  }
  return k;
}

KnownConstruction best_known(int d, int m) {
  if (d < 2 || m < 1) throw Error(ErrorCode::InvalidArgument, "best_known needs d >= 2, m >= 1");
  if (m < 2 * d) return construct_trivial(d, m);
  KnownConstruction k = (d >= 4 && m >= 2 * d + 4) ? construct_plus4(d) : construct_gamma2d(d);
  pad_to(k, m);
  return k;
}

}  // namespace crosscover
