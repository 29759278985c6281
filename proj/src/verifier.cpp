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

#include "crosscover/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "crosscover/error.hpp"
#include "crosscover/lp.hpp"
#include "parallel.hpp"

namespace crosscover {

void Covering::validate() const {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "covering dimension must be positive");
  if (centers.empty()) throw Error(ErrorCode::InvalidArgument, "covering has no centers");
  if (ratio.sign() <= 0 || ratio > Rational(1))
    throw Error(ErrorCode::InvalidArgument, "covering ratio must lie in (0, 1], got " + ratio.str());
  for (std::size_t i = 0; i < centers.size(); ++i)
    if (centers[i].dim() != static_cast<std::size_t>(dim))
      throw Error(ErrorCode::DimensionMismatch,
                  "center " + std::to_string(i) + " has dimension " +
                      std::to_string(centers[i].dim()) + ", expected " + std::to_string(dim));
}

std::vector<Region> subtract_homothet(const Region& region, const Homothet& h) {
  const std::size_t d = h.center.dim();
  for (const auto& c : region)
    if (c.normal.size() != d)
      throw Error(ErrorCode::DimensionMismatch, "region and homothet dimensions differ");
  const HPolytope hs = homothet_halfspaces(h);
  std::vector<Region> pieces;
  pieces.reserve(hs.halfspaces.size());
  Region prefix = region;
  for (const auto& H : hs.halfspaces) {
    Region piece = prefix;
    piece.push_back(H.complement());
    pieces.push_back(std::move(piece));
    prefix.push_back(H);
  }
  return pieces;
}

namespace {

struct LiveRegion {
  Region constraints;
  Point witness;
  Rational margin;
};

struct Counters {
  std::atomic<std::size_t> lp_solves{0};
  std::atomic<std::size_t> regions{0};
};

class Subtractor {
 public:
  Subtractor(int dim, bool prune_redundant, Counters& counters)
      : dim_(dim), prune_redundant_(prune_redundant), counters_(counters) {}

  // Appends the pieces of region \ h to out; h is given by its halfspaces.
  void subtract(const LiveRegion& region, const HPolytope& h, std::vector<LiveRegion>& out) {
    if (!h.contains(region.witness)) {
      Region both = region.constraints;
      both.insert(both.end(), h.halfspaces.begin(), h.halfspaces.end());
      if (empty(both).empty) {
        out.push_back(region);
        return;
      }
    }
    std::vector<const Halfspace*> cutting;
    for (const auto& H : h.halfspaces)
      if (!H.contains(region.witness) || cuts(region.constraints, H)) cutting.push_back(&H);
    if (cutting.empty()) return;  // region lies inside h

    Region prefix = region.constraints;
    for (const Halfspace* H : cutting) {
      Region piece = prefix;
      piece.push_back(H->complement());
      Emptiness e = empty(piece);
      if (!e.empty) {
        if (prune_redundant_) drop_redundant(piece);
        counters_.regions++;
        out.push_back({std::move(piece), std::move(e.witness), std::move(e.margin)});
      }
      prefix.push_back(*H);
    }
  }

 private:
  Emptiness empty(const Region& r) {
    counters_.lp_solves++;
    return region_emptiness(r, dim_);
  }

  // True iff sup of H.normal over the closure of r exceeds H.offset.
  bool cuts(const Region& r, const Halfspace& H) {
    LinearProgram lp{dim_, {}, H.normal};
    lp.constraints.reserve(r.size());
    for (const auto& c : r) lp.constraints.push_back({c.normal, c.offset, false});
    counters_.lp_solves++;
    const LpOutcome res = lp_solve(lp);
    if (res.status == LpOutcome::Status::Unbounded) return true;
    return res.optimal() && res.value > H.offset;
  }

  void drop_redundant(Region& r) {
    for (std::size_t i = 0; i < r.size();) {
      Region probe;
      probe.reserve(r.size());
      for (std::size_t j = 0; j < r.size(); ++j)
        if (j != i) probe.push_back(r[j]);
      probe.push_back(r[i].complement());
      if (empty(probe).empty)
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      else
        ++i;
    }
  }

  int dim_;
  bool prune_redundant_;
  Counters& counters_;
};

bool contains_origin(const Homothet& h) {
  return l1_norm(h.center) <= h.ratio;
}

// Runs every homothet against the worklist, parallel across live regions.
std::vector<LiveRegion> run_worklist(std::vector<LiveRegion> live,
                                     const std::vector<HPolytope>& homothets, int dim,
                                     const VerifyOptions& options, Counters& counters,
                                     std::size_t& peak, unsigned threads) {
  for (const auto& h : homothets) {
    if (live.empty()) break;
    std::vector<std::vector<LiveRegion>> parts(live.size());
    detail::parallel_for(live.size(), threads, [&](std::size_t i) {
      Subtractor local(dim, options.prune_redundant, counters);
      local.subtract(live[i], h, parts[i]);
    });
    std::vector<LiveRegion> next;
    for (auto& p : parts)
      for (auto& r : p) next.push_back(std::move(r));
    live = std::move(next);
    peak = std::max(peak, live.size());
    if (live.size() > options.region_cap)
      throw Error(ErrorCode::RegionCap,
                  "live region count " + std::to_string(live.size()) + " exceeds cap " +
                      std::to_string(options.region_cap));
  }
  return live;
}

// The reported margin is min_i ||w - u_i||_1 - ratio for the region witness w
// that maximises it.
void pick_witness(const std::vector<LiveRegion>& live, const Covering& covering,
                  CoverageResult& result) {
  bool found = false;
  for (const auto& r : live) {
    Rational gap = l1_distance(r.witness, covering.centers.front()) - covering.ratio;
    for (const auto& u : covering.centers)
      gap = std::min(gap, l1_distance(r.witness, u) - covering.ratio);
    if (gap.sign() <= 0)
      throw Error(ErrorCode::Internal, "region witness lies inside a homothet");
    if (!found || gap > result.margin) {
      found = true;
      result.covered = false;
      result.witness = r.witness;
      result.margin = gap;
    }
    result.uncovered_regions.push_back(r.constraints);
  }
}

}  // namespace

CoverageResult verify_covering(const Covering& covering, const VerifyOptions& options) {
  covering.validate();
  const int dim = covering.dim;
  std::vector<HPolytope> homothets;
  homothets.reserve(covering.centers.size());
  VerifyMode mode = options.mode;
  bool all_contain_origin = true;
  for (std::size_t i = 0; i < covering.centers.size(); ++i) {
    const Homothet h = covering.homothet(i);
    if (!contains_origin(h)) {
      all_contain_origin = false;
      if (mode == VerifyMode::BoundaryOnly)
        throw Error(ErrorCode::Precondition,
                    "boundary-only mode needs every homothet to contain the origin; homothet " +
                        std::to_string(i) + " does not");
    }
    homothets.push_back(homothet_halfspaces(h));
  }
  if (mode == VerifyMode::Auto)
    mode = all_contain_origin ? VerifyMode::BoundaryOnly : VerifyMode::FullBody;

  Counters counters;
  CoverageResult result;
  result.mode_used = mode;
  result.covered = true;
  std::size_t peak = 1;

  if (mode == VerifyMode::FullBody) {
    LiveRegion start{cross_polytope(dim).halfspaces, Point(dim), Rational(1)};
    counters.regions++;
    auto live = run_worklist({std::move(start)}, homothets, dim, options, counters, peak,
                             options.threads);
    pick_witness(live, covering, result);
  } else {
    const auto facets = FacetId::all(dim);
    std::vector<std::vector<LiveRegion>> leftovers(facets.size());
    std::vector<std::size_t> peaks(facets.size(), 1);
    detail::parallel_for(facets.size(), options.threads, [&](std::size_t f) {
      const FacetId& facet = facets[f];
      // Homothets with 1 - sigma.u > ratio miss the facet entirely.
      std::vector<HPolytope> touching;
      for (std::size_t i = 0; i < covering.centers.size(); ++i) {
        Rational s;
        for (int k = 0; k < dim; ++k)
          if (facet.signs[k] > 0) s += covering.centers[i][k]; else s -= covering.centers[i][k];
        if (Rational(1) - s <= covering.ratio) touching.push_back(homothets[i]);
      }
      LiveRegion start{facet_polytope(facet).halfspaces, facet_center(facet), Rational(1)};
      counters.regions++;
      leftovers[f] = run_worklist({std::move(start)}, touching, dim, options, counters,
                                  peaks[f], 1);
    });
    std::vector<LiveRegion> all;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      peak = std::max(peak, peaks[f]);
      for (auto& r : leftovers[f]) all.push_back(std::move(r));
    }
    pick_witness(all, covering, result);
  }
  result.trace.lp_solves = counters.lp_solves;
  result.trace.regions_explored = counters.regions;
  result.trace.peak_live_regions = peak;
  return result;
}

bool facet_shadow_check(const FacetId& facet, int vertex_index, const Homothet& h) {
  const int dim = facet.dim();
  if (h.center.dim() != static_cast<std::size_t>(dim))
    throw Error(ErrorCode::DimensionMismatch, "facet and homothet dimensions differ");
  if (vertex_index < 1 || vertex_index > dim)
    throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  if (h.ratio.sign() <= 0 || h.ratio >= Rational(1))
    throw Error(ErrorCode::InvalidArgument, "ratio must lie in (0, 1)");
  const Point v = cross_vertex(dim, vertex_index - 1, facet.signs[vertex_index - 1]);
  if (!homothet_contains(h, v))
    throw Error(ErrorCode::Precondition, "the selected vertex is not contained in the homothet");

  LinearProgram lp;
  lp.dim = dim;
  lp.constraints = facet_polytope(facet).halfspaces;
  for (auto& c : homothet_halfspaces(h).halfspaces) lp.constraints.push_back(std::move(c));
  for (const auto& c : shrunk_facet(facet, vertex_index, h.ratio).halfspaces) {
    lp.objective = c.normal;
    const LpOutcome res = lp_solve(lp);
    if (!res.optimal())
      throw Error(ErrorCode::Internal, "facet and homothet intersection is not a polytope");
    if (res.value > c.offset) return false;
  }
  return true;
}

}  // namespace crosscover
