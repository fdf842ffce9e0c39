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

#ifndef TSRECONF_RECONFIG_HPP_
#define TSRECONF_RECONFIG_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tsreconf/threshold_graph.hpp"
#include "tsreconf/tss_solver.hpp"
#include "tsreconf/vertex_set.hpp"

namespace tsr {

// A walk through target sets under token addition/removal: consecutive sets
// differ in exactly one vertex.
struct ReconfigSequence {
  std::vector<VertexSet> sets;

  // max_t |S(t)|; 0 for an empty sequence.
  std::size_t max_size() const;
  std::size_t length() const { return sets.size(); }

  friend bool operator==(const ReconfigSequence&, const ReconfigSequence&) = default;
};

using MembershipOracle = std::function<bool(const VertexSet&)>;

struct SequenceVerdict {
  bool valid = false;
  std::size_t size = 0;
  // Index of the first offending set when invalid.
  std::optional<std::size_t> first_violation;
  std::string reason;
};

SequenceVerdict validate_sequence(const ThresholdGraph& g, const ReconfigSequence& seq,
                                  const VertexSet& x, const VertexSet& y);
// Same checks with an arbitrary membership predicate in place of
// is_target_set; ids are not range-checked.
SequenceVerdict validate_sequence(const MembershipOracle& is_member,
                                  const ReconfigSequence& seq, const VertexSet& x,
                                  const VertexSet& y);

// X -> X u Y -> Y, adding Y \ X then removing X \ Y, each in ascending id
// order. Throws InvalidInput if x or y is not a target set.
ReconfigSequence two_approx(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y);

struct MinmaxReport {
  std::size_t value = 0;
  ReconfigSequence witness;
  // The last cap the search ran with.
  std::size_t cap_tried = 0;
  // Distinct sets dequeued, summed over every cap tried.
  std::size_t states_explored = 0;
};

// Breadth-first search over member sets of a universe of at most 64
// vertices, restricted to sets of size <= cap. Membership answers are
// memoized for the lifetime of the object. Moves toggle one vertex, tried in
// ascending id order, and the first discovery of a set fixes its
// predecessor, so witnesses are deterministic.
class CapSearch {
 public:
  CapSearch(std::size_t universe, std::function<bool(Mask)> is_member);

  // Shortest path from x to y through member sets of size <= cap.
  std::optional<std::vector<Mask>> path_under_cap(Mask x, Mask y, std::size_t cap);
  // Tries caps max(|x|, |y|), +1, ... up to the universe size. Throws
  // InvalidInput if y is unreachable even then.
  MinmaxReport minimize(Mask x, Mask y);

  std::size_t states_explored() const noexcept { return states_explored_; }

 private:
  bool member(Mask s);

  std::size_t universe_;
  std::function<bool(Mask)> is_member_;
  std::unordered_map<Mask, bool> memo_;
  std::size_t states_explored_ = 0;
};

ReconfigSequence sequence_from_masks(const std::vector<Mask>& path);

// opt_G(X <-> Y) by ascending-cap BFS over target sets of g. Throws
// InvalidInput if x or y is not a target set and InstanceTooLarge if g.n()
// exceeds `limit` (itself capped at 64).
MinmaxReport minmax_exact(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y,
                          std::size_t limit = kDefaultExactLimit);

// Whether some reconfiguration sequence from x to y stays within `cap`.
bool reachable_under_cap(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y,
                         std::size_t cap, std::size_t limit = kDefaultExactLimit);

struct CapReport {
  bool reachable = false;
  std::size_t cap = 0;
  std::size_t states_explored = 0;
  std::optional<ReconfigSequence> witness;
};

// reachable_under_cap with its witness and search statistics.
CapReport search_under_cap(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y,
                           std::size_t cap, std::size_t limit = kDefaultExactLimit);

}  // namespace tsr

#endif  // TSRECONF_RECONFIG_HPP_
