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

#ifndef CROSSCOVER_BOUNDS_HPP
#define CROSSCOVER_BOUNDS_HPP

#include <string>
#include <vector>

#include "crosscover/certificates.hpp"
#include "crosscover/constructions.hpp"

namespace crosscover {

enum class CellStatus { ProvenExact, UpperOnly, Conjectural };
std::string to_string(CellStatus status);

/// Proven enclosure lower <= gamma^d_m(K^d) <= upper.
struct GammaInterval {
  int d = 0;
  int m = 0;
  Rational lower;
  LowerBoundCertificate certificate;
  Rational upper;
  KnownConstruction construction;
  CoverageResult upper_verdict;
  bool exact = false;
  CellStatus status = CellStatus::UpperOnly;
  std::vector<std::string> notes;
};

/// Verifies best_known(d, m) and checks lower_bound(d, m). Throws Internal
/// if either built-in object fails its own check.
GammaInterval gamma_interval(int d, int m, const VerifyOptions& options = {});

/// c^d(K^d) <= 2d, read off a verified cover by 2d copies of ratio < 1.
struct CoveringNumberLine {
  int d = 0;
  int copies = 0;
  long long power = 0;
  Rational ratio;
  bool verified = false;
};

struct GammaReport {
  std::vector<GammaInterval> rows;
  std::vector<CoveringNumberLine> covering_number;
};

/// Rows for d in {3, 4, 5}, 1 <= m <= 2d + 4, plus the lines for d = 4, 5.
GammaReport gamma_report(const VerifyOptions& options = {});

}  // namespace crosscover

#endif  // CROSSCOVER_BOUNDS_HPP
