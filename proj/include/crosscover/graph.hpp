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

#ifndef CROSSCOVER_GRAPH_HPP
#define CROSSCOVER_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crosscover {

/// Adjacency of a simple graph on at most 64 vertices, one bitmask per vertex.
using BitGraph = std::vector<std::uint64_t>;

/// Exact maximum clique by branch and bound with a greedy colouring bound.
/// Returns the members in increasing order.
std::vector<std::size_t> maximum_clique(const BitGraph& adj);

/// Exact chromatic number by DSATUR branch and bound, seeded with the
/// maximum clique as lower bound. Requires at most 64 vertices.
std::size_t chromatic_number(const BitGraph& adj);

}  // namespace crosscover

#endif  // CROSSCOVER_GRAPH_HPP
