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

#include "crosscover/bounds.hpp"

#include <algorithm>
#include <map>

#include "crosscover/error.hpp"

namespace crosscover {
namespace {

GammaInterval assemble(int d, int m, const KnownConstruction& k, const CoverageResult& verdict) {
  if (!verdict.covered)
    throw Error(ErrorCode::Internal, to_string(k.name) + " construction for d=" +
                                         std::to_string(d) + " failed verification");
  GammaInterval g;
  g.d = d;
  g.m = m;
  g.construction = k;
  g.upper = k.ratio;
  g.upper_verdict = verdict;
  g.certificate = lower_bound(d, m);
  const CheckResult check = check_certificate(g.certificate);
  if (!check.valid)
    throw Error(ErrorCode::Internal, "built-in certificate for d=" + std::to_string(d) +
                                         ", m=" + std::to_string(m) + " failed: " + check.failure);
  g.lower = g.certificate.lambda;
  if (g.lower > g.upper)
    throw Error(ErrorCode::Internal, "lower bound exceeds upper bound");
  g.exact = g.lower == g.upper;
  const auto& flags = g.certificate.flags;
  const bool conjectural = std::find(flags.begin(), flags.end(), kConjecturalGap) != flags.end();
  g.status = g.exact ? CellStatus::ProvenExact
                     : (conjectural ? CellStatus::Conjectural : CellStatus::UpperOnly);
  for (const auto& f : flags) g.notes.push_back(f);
  if (!g.exact)
    g.notes.push_back("gap: lower " + g.lower.str() + " from " + to_string(g.certificate.kind) +
                      " certificate, upper " + g.upper.str() + " from " + to_string(k.name));
  return g;
}

}  // namespace

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::ProvenExact: return "proven-exact";
    case CellStatus::UpperOnly: return "upper-only";
    case CellStatus::Conjectural: return "conjectural";
  }
  return "?";
}

GammaInterval gamma_interval(int d, int m, const VerifyOptions& options) {
  const KnownConstruction k = best_known(d, m);
  return assemble(d, m, k, verify_covering(k.covering, options));
}

GammaReport gamma_report(const VerifyOptions& options) {
  GammaReport report;
  // Padding copies sit at the origin, so one verdict per unpadded
  // construction serves every m that uses it.
  std::map<std::pair<int, ConstructionName>, CoverageResult> verified;
  for (int d = 3; d <= 5; ++d) {
    for (int m = 1; m <= 2 * d + 4; ++m) {
      const KnownConstruction k = best_known(d, m);
      const auto key = std::make_pair(d, k.name);
      auto it = verified.find(key);
      if (it == verified.end()) {
        KnownConstruction core = k;
        const int size = k.name == ConstructionName::Trivial
                             ? 1
                             : (k.name == ConstructionName::Gamma2d ? 2 * d : 2 * d + 4);
        core.covering.centers.resize(static_cast<std::size_t>(size));
        it = verified.emplace(key, verify_covering(core.covering, options)).first;
      }
      report.rows.push_back(assemble(d, m, k, it->second));
    }
  }
  for (int d = 4; d <= 5; ++d) {
    const auto it = verified.find({d, ConstructionName::Gamma2d});
    CoveringNumberLine line;
    line.d = d;
    line.copies = 2 * d;
    line.power = 1LL << d;
    line.ratio = best_known(d, 2 * d).ratio;
    line.verified = it != verified.end() && it->second.covered && line.ratio < Rational(1) &&
                    line.copies < line.power;
    report.covering_number.push_back(line);
  }
  return report;
}

}  // namespace crosscover
