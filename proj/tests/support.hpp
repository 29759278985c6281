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

// Independent oracles and generators shared by the test binaries. Nothing
// here calls the code under test except to build inputs.
#ifndef CROSSCOVER_TESTS_SUPPORT_HPP
#define CROSSCOVER_TESTS_SUPPORT_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "crosscover/geometry.hpp"
#include "crosscover/lp.hpp"

namespace testing_support {

using crosscover::Point;
using crosscover::Rational;

inline Rational q(long p, long d = 1) { return Rational(p, d); }

/// Random rational in [lo, hi] with denominator den.
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> pick(lo * den, hi * den);
  return Rational(pick(rng), den);
}

/// Random rational point of K^d: integer numerators over den, pulled back
/// into the body by its norm when needed.
inline Point random_point_in_body(std::mt19937_64& rng, int d, long den = 12) {
  std::vector<Rational> c;
  Rational norm;
  for (int i = 0; i < d; ++i) {
    c.push_back(random_rational(rng, -1, 1, den));
    norm += crosscover::abs(c.back());
  }
  if (norm > Rational(1))
    for (auto& x : c) x /= norm;
  return Point(std::move(c));
}

/// Exact solution of the square system M x = r by Gauss-Jordan elimination,
/// or nothing when M is singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M,
                                                         std::vector<Rational> r) {
  const std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col].is_zero()) continue;
      const Rational f = M[row][col] / M[col][col];
      for (std::size_t k = col; k < n; ++k) M[row][k] -= f * M[col][k];
      r[row] -= f * r[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / M[i][i];
  return x;
}

/// Maximum of the objective over a bounded polytope by enumerating every
/// basis of dim tight constraints. Nothing when infeasible.
inline std::optional<Rational> brute_force_lp_max(const crosscover::LinearProgram& lp) {
  const int n = lp.dim;
  const auto& cons = lp.constraints;
  std::optional<Rational> best;
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  const int total = static_cast<int>(cons.size());
  if (total < n) return std::nullopt;
  while (true) {
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> r;
    for (int i : pick) {
      M.push_back(cons[i].normal);
      r.push_back(cons[i].offset);
    }
    if (auto x = solve_square(M, r)) {
      bool feasible = true;
      for (const auto& h : cons) {
        Rational lhs;
        for (int k = 0; k < n; ++k) lhs += h.normal[k] * (*x)[k];
        if (lhs > h.offset) { feasible = false; break; }
      }
      if (feasible) {
        Rational v;
        for (int k = 0; k < n; ++k) v += lp.objective[k] * (*x)[k];
        if (!best || v > *best) best = v;
      }
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == total - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

/// Plain Bron-Kerbosch maximum clique size; used as an oracle on small graphs.
inline std::size_t bk_max_clique(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  std::vector<std::size_t> r;
  auto rec = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) { best = std::max(best, r.size()); return; }
    if (r.size() + p.size() <= best) return;
    while (!p.empty()) {
      const std::size_t v = p.back();
      std::vector<std::size_t> np, nx;
      for (auto u : p) if (u != v && adj[v][u]) np.push_back(u);
      for (auto u : x) if (adj[v][u]) nx.push_back(u);
      r.push_back(v);
      self(self, np, nx);
      r.pop_back();
      p.pop_back();
      x.push_back(v);
    }
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  rec(rec, all, {});
  return best;
}

/// Largest subset of pairwise compatible vertices, by enumerating every
/// compatible subset in increasing vertex order. compat[i] has bit j set iff
/// i and j may share a copy (bit i included). At most 64 vertices.
inline std::size_t enumerate_compatible_subsets(const std::vector<std::uint64_t>& compat,
                                                std::uint64_t* count = nullptr) {
  std::size_t best = 0;
  std::uint64_t seen = 0;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t allowed, std::size_t size) -> void {
    ++seen;
    best = std::max(best, size);
    for (std::size_t v = from; v < compat.size(); ++v)
      if ((allowed >> v) & 1U) self(self, v + 1, allowed & compat[v], size + 1);
  };
  const std::uint64_t all = compat.size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << compat.size()) - 1;
  rec(rec, 0, all, 0);
  if (count != nullptr) *count = seen;
  return best;
}

/// Chromatic number by trying k = 1, 2, ... with plain backtracking.
inline std::size_t brute_force_chromatic(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<int> colour(n, -1);
    auto place = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < static_cast<int>(k); ++c) {
        bool ok = true;
        for (std::size_t u = 0; u < v; ++u)
          if (adj[v][u] && colour[u] == c) { ok = false; break; }
        if (!ok) continue;
        colour[v] = c;
        if (self(self, v + 1)) return true;
      }
      colour[v] = -1;
      return false;
    };
    if (place(place, 0)) return k;
  }
  return n;
}

/// Exact l1 membership with 128-bit integers after clearing denominators.
/// Independent of the Rational class: inputs are (numerator, denominator)
/// pairs that fit in 64 bits.
struct IntFrac {
  std::int64_t num;
  std::int64_t den;
};

inline bool int_within(const std::vector<IntFrac>& x, const std::vector<IntFrac>& u,
                       IntFrac lambda) {
  // sum |x_k - u_k| <= lambda, multiplied through by all denominators.
  __int128 common = lambda.den;
  for (std::size_t k = 0; k < x.size(); ++k) {
    common = std::lcm(static_cast<std::int64_t>(common), x[k].den);
    common = std::lcm(static_cast<std::int64_t>(common), u[k].den);
  }
  __int128 lhs = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const __int128 a = static_cast<__int128>(x[k].num) * (common / x[k].den);
    const __int128 b = static_cast<__int128>(u[k].num) * (common / u[k].den);
    lhs += a > b ? a - b : b - a;
  }
  return lhs <= static_cast<__int128>(lambda.num) * (common / lambda.den);
}

inline IntFrac to_int_frac(const Rational& r) {
  return {r.numerator().get_si(), r.denominator().get_si()};
}

inline std::vector<IntFrac> to_int_fracs(const Point& p) {
  std::vector<IntFrac> out;
  for (const auto& c : p) out.push_back(to_int_frac(c));
  return out;
}

}  // namespace testing_support

#endif  // CROSSCOVER_TESTS_SUPPORT_HPP
