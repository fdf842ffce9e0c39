// Copyright 2026 The tsreconf Authors
//
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

#ifndef TSRECONF_TSS_SOLVER_HPP_
#define TSRECONF_TSS_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "tsreconf/threshold_graph.hpp"
#include "tsreconf/vertex_set.hpp"

namespace tsr {

// Default vertex limit for exhaustive subset searches. Callers may raise it
// up to kMaskBits.
inline constexpr std::size_t kDefaultExactLimit = 24;

struct TssResult {
  std::size_t size = 0;
  VertexSet witness;
};

// Vertices with tau(v) > deg(v); every target set contains them.
VertexSet forced_vertices(const ThresholdGraph& g);

// Minimum target set by enumerating subsets in order of cardinality, then
// lexicographically; the witness is the lexicographically smallest minimum.
// Throws InstanceTooLarge when g.n() exceeds `limit`.
TssResult min_target_set_exact(const ThresholdGraph& g, std::size_t limit = kDefaultExactLimit);

// Every minimum target set, in lexicographic order.
std::vector<VertexSet> all_min_target_sets(const ThresholdGraph& g,
                                           std::size_t limit = kDefaultExactLimit);

// Greedy upper bound: add the vertex that maximizes |A(current + v)|,
// smallest id on ties, until everything is active.
VertexSet min_target_set_greedy(const ThresholdGraph& g);

}  // namespace tsr

#endif  // TSRECONF_TSS_SOLVER_HPP_
