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

#include "crosscover/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "crosscover/constructions.hpp"
#include "crosscover/error.hpp"
#include "parallel.hpp"

namespace crosscover {
namespace {

constexpr double kFloatSlack = 1e-9;
constexpr double kTargetMargin = 5e-3;
constexpr double kRatioSnapSlack = 1e-6;
constexpr std::size_t kAdversaries = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t bits_of(double x) {
  std::uint64_t b = 0;
  static_assert(sizeof b == sizeof x);
  std::memcpy(&b, &x, sizeof b);
  return b;
}

double l1(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int k = 0; k < d; ++k) s += std::fabs(a[k] - b[k]);
  return s;
}

void project_into_body(double* x, int d) {
  double n = 0.0;
  for (int k = 0; k < d; ++k) n += std::fabs(x[k]);
  if (n > 1.0) {
    for (int k = 0; k < d; ++k) x[k] /= n;
  }
}

std::vector<FloatPoint> to_float(const std::vector<Point>& pts) {
  std::vector<FloatPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    FloatPoint f;
    for (const auto& c : p) f.push_back(c.to_double());
    out.push_back(std::move(f));
  }
  return out;
}

// Annealing state over flattened centres and a fixed sample set.
class Annealer {
 public:
  Annealer(const std::vector<FloatPoint>& samples, const std::vector<FloatPoint>& start,
           double lambda)
      : d_(static_cast<int>(start.front().size())),
        m_(static_cast<int>(start.size())),
        n_(samples.size()),
        lambda_(lambda) {
    samples_.reserve(n_ * d_);
    for (const auto& s : samples) samples_.insert(samples_.end(), s.begin(), s.end());
    centers_.reserve(m_ * d_);
    for (const auto& c : start) centers_.insert(centers_.end(), c.begin(), c.end());
    dist_.assign(n_ * m_, 0.0);
    min_.assign(n_, 0.0);
    old_col_.resize(n_);
    old_min_.resize(n_);
    for (std::size_t s = 0; s < n_; ++s) {
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double v = l1(&samples_[s * d_], &centers_[i * d_], d_);
        dist_[s * m_ + i] = v;
        best = std::min(best, v);
      }
      min_[s] = best;
    }
    score();
  }

  double energy() const { return max_ + mean_; }
  double deficiency() const { return std::max(0.0, max_); }
  /// Sampled covering radius minus lambda; negative once samples are covered.
  double excess() const { return max_; }

  // Moves centre i to x; returns the new energy. Call undo() to revert.
  double move(int i, const double* x) {
    moved_ = i;
    std::copy(&centers_[i * d_], &centers_[i * d_] + d_, old_center_.begin());
    std::copy(x, x + d_, &centers_[i * d_]);
    for (std::size_t s = 0; s < n_; ++s) {
      double& cell = dist_[s * m_ + i];
      old_col_[s] = cell;
      old_min_[s] = min_[s];
      const double v = l1(&samples_[s * d_], x, d_);
      cell = v;
      if (v <= min_[s]) {
        min_[s] = v;
      } else if (old_col_[s] == min_[s]) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < m_; ++j) best = std::min(best, dist_[s * m_ + j]);
        min_[s] = best;
      }
    }
    old_max_ = max_;
    old_mean_ = mean_;
    score();
    return energy();
  }

  void undo() {
    const int i = moved_;
    std::copy(old_center_.begin(), old_center_.end(), &centers_[i * d_]);
    for (std::size_t s = 0; s < n_; ++s) {
      dist_[s * m_ + i] = old_col_[s];
      min_[s] = old_min_[s];
    }
    max_ = old_max_;
    mean_ = old_mean_;
  }

  void prepare() { old_center_.resize(d_); }
  const double* center(int i) const { return &centers_[i * d_]; }

  std::vector<FloatPoint> centers() const {
    std::vector<FloatPoint> out(m_);
    for (int i = 0; i < m_; ++i)
      out[i].assign(&centers_[i * d_], &centers_[i * d_] + d_);
    return out;
  }

 private:
  void score() {
    double mx = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t s = 0; s < n_; ++s) {
      const double v = min_[s] - lambda_;
      mx = std::max(mx, v);
      sum += std::max(0.0, v);
    }
    max_ = mx;
    mean_ = n_ == 0 ? 0.0 : sum / static_cast<double>(n_);
  }

  int d_;
  int m_;
  std::size_t n_;
  double lambda_;
  std::vector<double> samples_;
  std::vector<double> centers_;
  std::vector<double> dist_;
  std::vector<double> min_;
  std::vector<double> old_col_;
  std::vector<double> old_min_;
  std::vector<double> old_center_;
  int moved_ = 0;
  double max_ = 0.0;
  double mean_ = 0.0;
  double old_max_ = 0.0;
  double old_mean_ = 0.0;
};

Optimized anneal(const SearchConfig& cfg, double lambda,
                 const std::vector<FloatPoint>& samples, std::vector<FloatPoint> start,
                 std::uint64_t seed, bool perturb) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d = cfg.d;
  if (perturb) {
    for (auto& c : start) {
      for (auto& x : c) x += 0.05 * gauss(rng);
      project_into_body(c.data(), d);
    }
  }
  Annealer state(samples, start, lambda);
  state.prepare();
  Optimized best{state.centers(), state.deficiency(), state.energy()};
  if (state.excess() <= -kTargetMargin) return best;

  std::uniform_int_distribution<int> pick(0, cfg.m - 1);
  std::uniform_int_distribution<int> axis(0, d - 1);
  std::vector<double> trial(d);
  const double cooling =
      cfg.iterations > 0 ? std::pow(cfg.final_temperature_ratio, 1.0 / cfg.iterations) : 1.0;
  double temperature = cfg.initial_temperature;
  double current = state.energy();
  for (int it = 0; it < cfg.iterations; ++it) {
    const int i = pick(rng);
    const double scale = cfg.step * std::sqrt(temperature / cfg.initial_temperature);
    const double* c = state.center(i);
    std::copy(c, c + d, trial.begin());
    trial[axis(rng)] += scale * gauss(rng);
    project_into_body(trial.data(), d);
    const double next = state.move(i, trial.data());
    const double delta = next - current;
    if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
      current = next;
      if (next < best.energy) {
        best = {state.centers(), state.deficiency(), next};
        if (state.excess() <= -kTargetMargin) break;
      }
    } else {
      state.undo();
    }
    temperature *= cooling;
  }
  return best;
}

double nearest(const double* x, const std::vector<FloatPoint>& centers, int d) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : centers) best = std::min(best, l1(x, c.data(), d));
  return best;
}

// Pattern search on the facet of x for a local maximum of the distance to
// the nearest centre. Moves barycentric mass between coordinates.
FloatPoint climb(FloatPoint x, const std::vector<FloatPoint>& centers, int d) {
  std::vector<double> sign(d);
  std::vector<double> w(d);
  for (int k = 0; k < d; ++k) {
    sign[k] = x[k] < 0.0 ? -1.0 : 1.0;
    w[k] = std::fabs(x[k]);
  }
  auto place = [&](const std::vector<double>& weights) {
    for (int k = 0; k < d; ++k) x[k] = sign[k] * weights[k];
  };
  place(w);
  double value = nearest(x.data(), centers, d);
  std::vector<double> t(d);
  for (double delta = 0.05; delta > 1e-7; delta *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          if (j == k || w[k] < delta) continue;
          t = w;
          t[j] += delta;
          t[k] -= delta;
          place(t);
          const double v = nearest(x.data(), centers, d);
          if (v > value) {
            value = v;
            w = t;
            improved = true;
          }
        }
      }
    }
  }
  place(w);
  return x;
}

// Local maxima of the uncovered distance started from the worst samples.
std::vector<FloatPoint> adversarial_points(const std::vector<FloatPoint>& centers,
                                           const std::vector<FloatPoint>& samples,
                                           int d, std::size_t count) {
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s)
    order.emplace_back(-nearest(samples[s].data(), centers, d), s);
  count = std::min(count, order.size());
  std::partial_sort(order.begin(), order.begin() + count, order.end());
  std::vector<FloatPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(climb(samples[order[i].second], centers, d));
  return out;
}

std::vector<FloatPoint> default_start(const SearchConfig& cfg) {
  try {
    return to_float(best_known(cfg.d, cfg.m).covering.centers);
  } catch (const Error&) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<FloatPoint> out(cfg.m, FloatPoint(cfg.d));
    for (auto& c : out) {
      for (auto& x : c) x = unit(rng);
      project_into_body(c.data(), cfg.d);
    }
    return out;
  }
}

// Farey neighbours of x among fractions with denominator <= max_den.
// Returns {lower, upper}; both equal x when x is representable.
std::pair<mpq_class, mpq_class> farey_bracket(const mpq_class& x, long max_den) {
  mpz_class a;
  mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x == mpq_class(a)) return {x, x};
  mpz_class b = 1;
  mpz_class c = a + 1;
  mpz_class dd = 1;
  const mpz_class cap = max_den;
  while (b + dd <= cap) {
    const mpq_class med(a + c, b + dd);
    mpq_class med_c = med;
    med_c.canonicalize();
    if (med_c == x) return {x, x};
    if (med_c < x) {
      // Largest k with (a + k c) / (b + k dd) < x.
      const mpq_class room = (x * b - a) / (c - x * dd);
      mpz_class k;
      mpz_fdiv_q(k.get_mpz_t(), room.get_num_mpz_t(), room.get_den_mpz_t());
      if (mpq_class(k) == room) {
        if (b + k * dd <= cap) return {x, x};
        k -= 1;
      }
      k = std::min(k, mpz_class((cap - b) / dd));
      a += k * c;
      b += k * dd;
    } else {
      const mpq_class room = (c - x * dd) / (x * b - a);
      mpz_class k;
      mpz_fdiv_q(k.get_mpz_t(), room.get_num_mpz_t(), room.get_den_mpz_t());
      if (mpq_class(k) == room) {
        if (dd + k * b <= cap) return {x, x};
        k -= 1;
      }
      k = std::min(k, mpz_class((cap - dd) / b));
      c += k * a;
      dd += k * b;
    }
  }
  mpq_class lo(a, b);
  mpq_class hi(c, dd);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace

SearchConfig SearchConfig::defaults(int d, int m) {
  SearchConfig cfg;
  cfg.d = d;
  cfg.m = m;
  const double ratio = best_known(d, m).ratio.to_double();
  cfg.lambda_hi = std::min(1.0, ratio + 0.02);
  cfg.lambda_lo = std::max(0.0, ratio - 0.15);
  return cfg;
}

void SearchConfig::validate() const {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "search needs d >= 2");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "search needs m >= 1");
  if (!(lambda_lo >= 0.0 && lambda_lo < lambda_hi && lambda_hi <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "need 0 <= lambda_lo < lambda_hi <= 1");
  if (iterations < 0 || restarts < 1 || refine_rounds < 0 || bisect_steps < 0)
    throw Error(ErrorCode::InvalidArgument, "search counts must be non-negative");
  if (sample_count < 1000)
    throw Error(ErrorCode::InvalidArgument, "sample_count must be at least 1000");
  if (max_denominator < 1)
    throw Error(ErrorCode::InvalidArgument, "max_denominator must be positive");
  if (!(initial_temperature > 0.0) || !(final_temperature_ratio > 0.0 && final_temperature_ratio <= 1.0) || !(step > 0.0))
    throw Error(ErrorCode::InvalidArgument, "bad annealing schedule");
}

std::vector<FloatPoint> boundary_samples(int d, int sample_count, std::uint64_t seed) {
  if (d < 1 || d > 20) throw Error(ErrorCode::InvalidArgument, "unsupported dimension");
  std::vector<FloatPoint> out;
  for (int axis = 0; axis < d; ++axis) {
    for (int sign : {1, -1}) {
      FloatPoint v(d, 0.0);
      v[axis] = sign;
      out.push_back(std::move(v));
    }
  }
  const std::uint64_t facets = std::uint64_t{1} << d;
  for (std::uint64_t f = 0; f < facets; ++f) {
    FloatPoint c(d);
    for (int k = 0; k < d; ++k) c[k] = ((f >> (d - 1 - k)) & 1U) ? -1.0 / d : 1.0 / d;
    out.push_back(std::move(c));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> facet(0, facets - 1);
  std::exponential_distribution<double> expo(1.0);
  for (int s = 0; s < sample_count; ++s) {
    const std::uint64_t f = facet(rng);
    FloatPoint x(d);
    double total = 0.0;
    for (auto& v : x) total += (v = expo(rng));
    for (int k = 0; k < d; ++k) {
      x[k] /= total;
      if ((f >> (d - 1 - k)) & 1U) x[k] = -x[k];
    }
    out.push_back(std::move(x));
  }
  return out;
}

double deficiency(const std::vector<FloatPoint>& centers, double lambda,
                  const std::vector<FloatPoint>& samples) {
  if (centers.empty()) throw Error(ErrorCode::InvalidArgument, "no centres");
  const auto d = centers.front().size();
  double worst = 0.0;
  for (const auto& s : samples) {
    if (s.size() != d) throw Error(ErrorCode::DimensionMismatch, "sample dimension");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : centers) {
      if (c.size() != d) throw Error(ErrorCode::DimensionMismatch, "centre dimension");
      best = std::min(best, l1(s.data(), c.data(), static_cast<int>(d)));
    }
    worst = std::max(worst, best - lambda);
  }
  return worst;
}

double deficiency(const std::vector<FloatPoint>& centers, double lambda, int d,
                  int sample_count, std::uint64_t seed) {
  return deficiency(centers, lambda, boundary_samples(d, sample_count, seed));
}

namespace {

// Worst nearest-centre distance minus lambda over the samples and the local
// maxima climbed from the worst of them.
double refined_deficiency(const std::vector<FloatPoint>& centers, double lambda,
                          const std::vector<FloatPoint>& samples,
                          const std::vector<FloatPoint>& probes, int d) {
  double out = deficiency(centers, lambda, samples);
  if (out > kFloatSlack) return out;
  for (const auto* set : {&probes, &samples}) {
    for (const auto& x : adversarial_points(centers, *set, d, kAdversaries))
      out = std::max(out, nearest(x.data(), centers, d) - lambda);
  }
  return std::max(0.0, out);
}

// Rounds every coordinate onto the grid (1/q)Z for q = 1..max_den and keeps
// the first rounding that passes the refined test.
std::optional<std::vector<FloatPoint>> grid_round(const std::vector<FloatPoint>& centers,
                                                  double lambda, long max_den,
                                                  const std::vector<FloatPoint>& samples,
                                                  const std::vector<FloatPoint>& probes, int d) {
  for (long q = 1; q <= max_den; ++q) {
    auto trial = centers;
    bool inside = true;
    for (auto& c : trial) {
      double norm = 0.0;
      for (auto& x : c) {
        x = std::round(x * static_cast<double>(q)) / static_cast<double>(q);
        norm += std::fabs(x);
      }
      inside = inside && norm <= 1.0 + kFloatSlack;
    }
    if (inside && refined_deficiency(trial, lambda, samples, probes, d) <= kFloatSlack)
      return trial;
  }
  return std::nullopt;
}

}  // namespace

Optimized optimize_centers(const SearchConfig& cfg, double lambda,
                           const std::vector<FloatPoint>& start) {
  cfg.validate();
  if (static_cast<int>(start.size()) != cfg.m)
    throw Error(ErrorCode::InvalidArgument, "start has the wrong number of centres");
  for (const auto& c : start) {
    if (static_cast<int>(c.size()) != cfg.d)
      throw Error(ErrorCode::DimensionMismatch, "start centre dimension");
  }
  auto samples = boundary_samples(cfg.d, cfg.sample_count, splitmix64(cfg.seed));
  const auto probes = boundary_samples(cfg.d, 4 * cfg.sample_count, splitmix64(cfg.seed + 1));
  std::uint64_t base = splitmix64(cfg.seed ^ bits_of(lambda));
  std::vector<FloatPoint> from = start;
  Optimized best;
  for (int round = 0; round <= cfg.refine_rounds; ++round) {
    std::vector<Optimized> runs(cfg.restarts);
    detail::parallel_for(runs.size(), cfg.threads, [&](std::size_t r) {
      runs[r] = anneal(cfg, lambda, samples, from, splitmix64(base + r), r > 0);
    });
    std::size_t pick = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
      const auto& a = runs[r];
      const auto& b = runs[pick];
      if (a.deficiency < b.deficiency ||
          (a.deficiency == b.deficiency && a.energy < b.energy))
        pick = r;
    }
    best = std::move(runs[pick]);
    const double trained = best.deficiency;
    // The training deficiency is optimistic; score against refined points.
    auto hard = adversarial_points(best.centers, probes, cfg.d, kAdversaries);
    for (const auto& x : adversarial_points(best.centers, samples, cfg.d, kAdversaries))
      hard.push_back(x);
    best.deficiency = std::max(best.deficiency, deficiency(best.centers, lambda, hard));
    if (best.deficiency > kFloatSlack) {
      if (auto rounded = grid_round(best.centers, lambda, cfg.max_denominator, samples, probes,
                                    cfg.d)) {
        best = {*rounded, 0.0, Annealer(samples, *rounded, lambda).energy()};
        break;
      }
    }
    if (best.deficiency > kFloatSlack && trained <= kFloatSlack) {
      for (auto& x : hard) {
        if (nearest(x.data(), best.centers, cfg.d) > lambda) samples.push_back(std::move(x));
      }
      from = best.centers;
      base = splitmix64(base);
      continue;
    }
    break;
  }
  return best;
}

Optimized optimize_centers(const SearchConfig& cfg, double lambda) {
  return optimize_centers(cfg, lambda, default_start(cfg));
}

Rational snap_nearest(const Rational& x, long max_den) {
  if (max_den < 1) throw Error(ErrorCode::InvalidArgument, "max_den must be positive");
  auto [lo, hi] = farey_bracket(x.raw(), max_den);
  const mpq_class dlo = x.raw() - lo;
  const mpq_class dhi = hi - x.raw();
  if (dlo < dhi) return Rational(lo);
  if (dhi < dlo) return Rational(hi);
  return Rational(lo.get_den() <= hi.get_den() ? lo : hi);
}

Rational snap_up(const Rational& x, long max_den) {
  if (max_den < 1) throw Error(ErrorCode::InvalidArgument, "max_den must be positive");
  return Rational(farey_bracket(x.raw(), max_den).second);
}

Rational snap_ratio(double lambda, long max_den) {
  if (!(lambda > 0.0) || lambda > 1.0 + kRatioSnapSlack)
    throw Error(ErrorCode::InvalidArgument, "ratio must lie in (0, 1]");
  const Rational exact = Rational::from_double(lambda);
  Rational r = snap_nearest(exact, max_den);
  if (r < exact - Rational::from_double(kRatioSnapSlack) || r.sign() <= 0)
    r = snap_up(exact, max_den);
  return std::min(r, Rational(1));
}

SnapResult snap_and_verify(const std::vector<FloatPoint>& centers, double lambda,
                           long max_den, const VerifyOptions& options) {
  return snap_and_verify(centers, snap_ratio(lambda, max_den), max_den, options);
}

SnapResult snap_and_verify(const std::vector<FloatPoint>& centers, const Rational& ratio_q,
                           long max_den, const VerifyOptions& options) {
  if (centers.empty()) throw Error(ErrorCode::InvalidArgument, "no centres");
  SnapResult out;
  out.covering.dim = static_cast<int>(centers.front().size());
  out.covering.ratio = ratio_q;
  for (const auto& c : centers) {
    std::vector<Rational> coords;
    for (double x : c) coords.push_back(snap_nearest(Rational::from_double(x), max_den));
    out.covering.centers.emplace_back(std::move(coords));
  }
  out.covering.validate();

  // Cheap exact refutation on boundary samples before the full subtraction.
  const int d = out.covering.dim;
  const double ratio = out.covering.ratio.to_double();
  const auto snapped = to_float(out.covering.centers);
  for (const auto& s : boundary_samples(d, 2000, kDefaultSeed)) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : snapped) best = std::min(best, l1(s.data(), c.data(), d));
    if (best <= ratio - kFloatSlack) continue;
    std::vector<Rational> coords;
    Rational norm;
    for (double x : s) {
      coords.push_back(Rational::from_double(x));
      norm += abs(coords.back());
    }
    for (auto& v : coords) v /= norm;
    Point p(std::move(coords));
    Rational gap = l1_distance(p, out.covering.centers.front()) - out.covering.ratio;
    for (const auto& c : out.covering.centers)
      gap = std::min(gap, l1_distance(p, c) - out.covering.ratio);
    if (gap.sign() > 0) {
      out.verdict.covered = false;
      out.verdict.witness = std::move(p);
      out.verdict.margin = gap;
      out.verdict.mode_used = options.mode;
      return out;
    }
  }
  out.verdict = verify_covering(out.covering, options);
  return out;
}

SearchReport bisect_lambda(const SearchConfig& cfg, const VerifyOptions& verify) {
  cfg.validate();
  SearchReport report;
  report.config = cfg;
  struct Probe {
    double lambda;
    Optimized result;
  };
  std::vector<Probe> wins;
  auto probe = [&](double lambda, const std::vector<FloatPoint>& start) {
    Optimized r = optimize_centers(cfg, lambda, start);
    report.deficiency_curve.emplace_back(lambda, r.deficiency);
    const bool ok = r.deficiency <= kFloatSlack;
    if (ok) wins.push_back({lambda, std::move(r)});
    return ok;
  };

  const auto seed_centers = default_start(cfg);
  double hi = cfg.lambda_hi;
  if (!probe(hi, seed_centers)) {
    throw Error(ErrorCode::InvalidArgument,
                "lambda_hi = " + std::to_string(hi) +
                    " does not reach zero deficiency; start from a larger ratio");
  }
  double lo = cfg.lambda_lo;
  for (int step = 0; step < cfg.bisect_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid, wins.back().result.centers)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  std::sort(report.deficiency_curve.begin(), report.deficiency_curve.end());
  std::sort(wins.begin(), wins.end(),
            [](const Probe& a, const Probe& b) { return a.lambda < b.lambda; });
  report.best_lambda_float = wins.front().lambda;
  report.centers_float = wins.front().result.centers;

  // A nearby smaller fraction is tried first; the exact check decides.
  for (const auto& w : wins) {
    std::vector<Rational> ratios;
    const Rational near = snap_nearest(Rational::from_double(w.lambda), cfg.max_denominator);
    const Rational up = snap_ratio(w.lambda, cfg.max_denominator);
    if (near < up && near.sign() > 0) ratios.push_back(near);
    ratios.push_back(up);
    for (const auto& ratio : ratios) {
      try {
        SnapResult s = snap_and_verify(w.result.centers, ratio, cfg.max_denominator, verify);
        if (s.verdict.covered) {
          report.snapped = std::move(s.covering);
          report.exact_verdict = std::move(s.verdict);
          return report;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RegionCap) throw;
      }
    }
  }
  return report;
}

}  // namespace crosscover
