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

#ifndef CROSSCOVER_CONSTRUCTIONS_HPP
#define CROSSCOVER_CONSTRUCTIONS_HPP

#include <string>

#include "crosscover/verifier.hpp"

namespace crosscover {

enum class ConstructionName {
  Trivial,   // one unit copy at the origin
  Gamma2d,   // 2d copies of ratio (d-1)/d centred at +-e_i/d
  Plus4,     // 2d axis copies plus four corner copies, ratio (2d-3)/(2d-1)
};

std::string to_string(ConstructionName name);

struct KnownConstruction {
  ConstructionName name = ConstructionName::Trivial;
  int d = 0;
  int m = 0;
  Rational ratio;
  Covering covering;
};

/// Requires 1 <= m < 2d. Extra copies sit at the origin.
KnownConstruction construct_trivial(int d, int m);
/// Requires d >= 2.
KnownConstruction construct_gamma2d(int d);
/// Requires d >= 4.
KnownConstruction construct_plus4(int d);
/// Smallest-ratio construction using at most m copies, padded to exactly m
/// with copies at the origin.
KnownConstruction best_known(int d, int m);

}  // namespace crosscover

#endif  // CROSSCOVER_CONSTRUCTIONS_HPP
