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

#ifndef TSRECONF_ACTIVATION_HPP_
#define TSRECONF_ACTIVATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "tsreconf/threshold_graph.hpp"
#include "tsreconf/vertex_set.hpp"

namespace tsr {

// The chain A(0) = S, A(1), ..., ending with a repeated entry: steps[k+1]
// equals steps[k] where k = converged_at is the first fixpoint, and every
// earlier step grows strictly.
struct ActivationTrace {
  std::vector<VertexSet> steps;
  std::size_t converged_at = 0;

  const VertexSet& final_set() const { return steps.back(); }
};

// One synchronous round: active plus every v with |N(v) & active| >= tau(v).
VertexSet step(const ThresholdGraph& g, const VertexSet& active);

// Iterates `step` until two consecutive sets coincide.
ActivationTrace closure(const ThresholdGraph& g, const VertexSet& seeds);

// A(S) without the trace.
VertexSet active_set(const ThresholdGraph& g, const VertexSet& seeds);

bool is_target_set(const ThresholdGraph& g, const VertexSet& seeds);

// Event-driven closure with reusable buffers, for callers that test many
// seed sets against one graph. Each vertex keeps a count of its active
// neighbors and is queued once the count reaches its threshold; the result
// equals the fixpoint of `step`. Holds a reference to the graph.
class Activator {
 public:
  explicit Activator(const ThresholdGraph& g);

  // Returns |A(seeds)|; active() then holds the membership flags.
  std::size_t run(std::span<const Vertex> seeds);
  // Bit i of `seeds` seeds vertex i.
  std::size_t run(Mask seeds);

  bool activates_all(std::span<const Vertex> seeds) { return run(seeds) == graph_.n(); }
  bool activates_all(Mask seeds) { return run(seeds) == graph_.n(); }

  const std::vector<char>& active() const noexcept { return active_; }
  const ThresholdGraph& graph() const noexcept { return graph_; }

 private:
  void reset();
  void seed(Vertex v);
  std::size_t propagate();

  const ThresholdGraph& graph_;
  std::vector<char> active_;
  std::vector<Threshold> count_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> unconditional_;  // tau == 0
  std::size_t active_count_ = 0;
};

}  // namespace tsr

#endif  // TSRECONF_ACTIVATION_HPP_
