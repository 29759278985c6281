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

#include "crosscover/graph.hpp"

#include <algorithm>
#include <bit>

#include "crosscover/error.hpp"

namespace crosscover {

namespace {

using Mask = std::uint64_t;

inline Mask bit(std::size_t v) { return Mask{1} << v; }

class CliqueSearch {
 public:
  explicit CliqueSearch(const BitGraph& adj) : adj_(adj) {}

  std::vector<std::size_t> run() {
    const std::size_t n = adj_.size();
    Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential colouring of cand; colour k bounds the clique size
  // reachable from the vertices coloured up to k.
  void colour(Mask cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bounds) {
    std::size_t k = 0;
    while (cand) {
      ++k;
      Mask q = cand;
      while (q) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(q));
        q &= ~bit(v);
        q &= ~adj_[v];
        cand &= ~bit(v);
        order.push_back(v);
        bounds.push_back(k);
      }
    }
  }

  void expand(Mask cand) {
    std::vector<std::size_t> order, bounds;
    colour(cand, order, bounds);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bounds[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      const Mask next = cand & adj_[v];
      if (next)
        expand(next);
      else if (current_.size() > best_.size())
        best_ = current_;
      current_.pop_back();
      cand &= ~bit(v);
    }
  }

  const BitGraph& adj_;
  std::vector<std::size_t> current_, best_;
};

class Colouring {
 public:
  explicit Colouring(const BitGraph& adj)
      : adj_(adj), n_(adj.size()), colour_(n_, -1), forbidden_(n_, std::vector<int>(n_ + 1)) {}

  std::size_t run(std::size_t lower) {
    lower_ = lower;
    best_ = n_;
    search(0, 0);
    return best_;
  }

 private:
  std::size_t saturation(std::size_t v) const {
    std::size_t s = 0;
    for (std::size_t c = 0; c < n_; ++c) s += forbidden_[v][c] > 0;
    return s;
  }

  void assign(std::size_t v, int c, int delta) {
    Mask nb = adj_[v];
    while (nb) {
      const std::size_t u = static_cast<std::size_t>(std::countr_zero(nb));
      nb &= nb - 1;
      forbidden_[u][c] += delta;
    }
  }

  void search(std::size_t coloured, std::size_t used) {
    if (best_ == lower_) return;
    if (coloured == n_) {
      best_ = std::min(best_, used);
      return;
    }
    std::size_t pick = n_, pick_sat = 0, pick_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const std::size_t sat = saturation(v);
      const std::size_t deg = static_cast<std::size_t>(std::popcount(adj_[v]));
      if (pick == n_ || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const std::size_t limit = std::min(used + 1, best_ - 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbidden_[pick][c] > 0) continue;
      colour_[pick] = static_cast<int>(c);
      assign(pick, static_cast<int>(c), 1);
      search(coloured + 1, std::max(used, c + 1));
      assign(pick, static_cast<int>(c), -1);
      colour_[pick] = -1;
      if (best_ == lower_) return;
    }
  }

  const BitGraph& adj_;
  std::size_t n_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> forbidden_;
  std::size_t lower_ = 0, best_ = 0;
};

void require_small(const BitGraph& adj) {
  if (adj.size() > 64) throw Error(ErrorCode::InvalidArgument, "graph exceeds 64 vertices");
}

}  // namespace

std::vector<std::size_t> maximum_clique(const BitGraph& adj) {
  require_small(adj);
  if (adj.empty()) return {};
  return CliqueSearch(adj).run();
}

std::size_t chromatic_number(const BitGraph& adj) {
  require_small(adj);
  if (adj.empty()) return 0;
  return Colouring(adj).run(maximum_clique(adj).size());
}

}  // namespace crosscover
