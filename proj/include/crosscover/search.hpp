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

#ifndef CROSSCOVER_SEARCH_HPP
#define CROSSCOVER_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "crosscover/verifier.hpp"

namespace crosscover {

using FloatPoint = std::vector<double>;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2d41ULL;

/// Heuristic search settings. Everything is deterministic given seed.
struct SearchConfig {
  int d = 3;
  int m = 6;
  double lambda_hi = 0.0;
  double lambda_lo = 0.0;
  int iterations = 20000;
  int restarts = 4;
  int sample_count = 4000;
  std::uint64_t seed = kDefaultSeed;
  long max_denominator = 64;
  int bisect_steps = 10;
  /// Rounds of adding locally worst boundary points to the sample set.
  int refine_rounds = 4;
  /// Geometric cooling from initial_temperature down to
  /// initial_temperature * final_temperature_ratio over the iterations; the
  /// Gaussian step shrinks with the square root of the temperature.
  double initial_temperature = 1e-3;
  double final_temperature_ratio = 1e-4;
  double step = 0.02;
  unsigned threads = 1;

  /// Fills lambda_hi / lambda_lo around the best known ratio.
  static SearchConfig defaults(int d, int m);
  void validate() const;
};

/// Points on the boundary of K^d: all vertices, all facet centres, then
/// sample_count uniform points (uniform facet, uniform barycentric).
std::vector<FloatPoint> boundary_samples(int d, int sample_count, std::uint64_t seed);

/// max over samples of max(0, min_i ||x - u_i||_1 - lambda).
double deficiency(const std::vector<FloatPoint>& centers, double lambda,
                  const std::vector<FloatPoint>& samples);
double deficiency(const std::vector<FloatPoint>& centers, double lambda, int d,
                  int sample_count, std::uint64_t seed);

struct Optimized {
  std::vector<FloatPoint> centers;
  double deficiency = 0.0;
  double energy = 0.0;
};

/// Simulated annealing on the centre coordinates at fixed lambda, started
/// from `start` (restart 0 as given, later restarts perturbed).
Optimized optimize_centers(const SearchConfig& cfg, double lambda,
                           const std::vector<FloatPoint>& start);
/// Starts from the best known construction when one exists for (d, m).
Optimized optimize_centers(const SearchConfig& cfg, double lambda);

struct SnapResult {
  Covering covering;
  CoverageResult verdict;
};

/// Closest rational with denominator <= max_den (ties go to the smaller).
Rational snap_nearest(const Rational& x, long max_den);
/// Least rational >= x with denominator <= max_den.
Rational snap_up(const Rational& x, long max_den);
/// Ratio snapping: the nearest candidate if it is at most float noise below
/// lambda, otherwise snap_up.
Rational snap_ratio(double lambda, long max_den);

SnapResult snap_and_verify(const std::vector<FloatPoint>& centers, double lambda,
                           long max_den, const VerifyOptions& options = {});
/// As above with the ratio already chosen.
SnapResult snap_and_verify(const std::vector<FloatPoint>& centers, const Rational& ratio,
                           long max_den, const VerifyOptions& options = {});

struct SearchReport {
  SearchConfig config;
  double best_lambda_float = 1.0;
  std::vector<FloatPoint> centers_float;
  /// Present only when a snapped covering verified exactly.
  std::optional<Covering> snapped;
  std::optional<CoverageResult> exact_verdict;
  /// (lambda, deficiency) for every probe, sorted by lambda.
  std::vector<std::pair<double, double>> deficiency_curve;
};

/// Bisects lambda in [lambda_lo, lambda_hi]; the smallest probe reaching
/// zero deficiency is reported, and the smallest successful probe whose
/// snapped covering verifies exactly becomes the proven upper bound.
SearchReport bisect_lambda(const SearchConfig& cfg, const VerifyOptions& verify = {});

}  // namespace crosscover

#endif  // CROSSCOVER_SEARCH_HPP
