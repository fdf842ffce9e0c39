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

#include "tsreconf/reconfig.hpp"

#include <algorithm>
#include <memory>

#include "tsreconf/activation.hpp"
#include "tsreconf/errors.hpp"

namespace tsr {

std::size_t ReconfigSequence::max_size() const {
  std::size_t best = 0;
  for (const VertexSet& s : sets) best = std::max(best, s.size());
  return best;
}

SequenceVerdict validate_sequence(const MembershipOracle& is_member,
                                  const ReconfigSequence& seq, const VertexSet& x,
                                  const VertexSet& y) {
  SequenceVerdict verdict;
  verdict.size = seq.max_size();
  auto fail = [&](std::size_t index, std::string reason) {
    verdict.valid = false;
    verdict.first_violation = index;
    verdict.reason = std::move(reason);
    return verdict;
  };

  if (seq.sets.empty()) return fail(0, "empty sequence");
  if (seq.sets.front() != x) return fail(0, "sequence does not start at X");
  for (std::size_t t = 0; t < seq.sets.size(); ++t) {
    if (t > 0 && seq.sets[t - 1].distance(seq.sets[t]) != 1) {
      return fail(t, "consecutive sets do not differ by exactly one vertex");
    }
    if (!is_member(seq.sets[t])) return fail(t, "not a target set");
  }
  if (seq.sets.back() != y) return fail(seq.sets.size() - 1, "sequence does not end at Y");
  verdict.valid = true;
  return verdict;
}

SequenceVerdict validate_sequence(const ThresholdGraph& g, const ReconfigSequence& seq,
                                  const VertexSet& x, const VertexSet& y) {
  Activator act(g);
  bool out_of_range = false;
  auto member = [&](const VertexSet& s) {
    if (s.bound() > g.n()) {
      out_of_range = true;
      return false;
    }
    return act.activates_all(s.ids());
  };
  SequenceVerdict verdict = validate_sequence(member, seq, x, y);
  if (out_of_range) verdict.reason = "vertex id outside the graph";
  return verdict;
}

namespace {

void require_target(const ThresholdGraph& g, const VertexSet& s, const char* name) {
  if (s.bound() > g.n()) {
    throw InvalidInput(std::string(name) + " has a vertex id outside the graph");
  }
  if (!is_target_set(g, s)) throw InvalidInput(std::string(name) + " is not a target set");
}

}  // namespace

ReconfigSequence two_approx(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y) {
  require_target(g, x, "X");
  require_target(g, y, "Y");
  ReconfigSequence seq;
  seq.sets.push_back(x);
  VertexSet current = x;
  for (Vertex v : y.minus(x)) {
    current = current.with(v);
    seq.sets.push_back(current);
  }
  for (Vertex v : x.minus(y)) {
    current = current.without(v);
    seq.sets.push_back(current);
  }
  return seq;
}

CapSearch::CapSearch(std::size_t universe, std::function<bool(Mask)> is_member)
    : universe_(universe), is_member_(std::move(is_member)) {
  if (universe_ > kMaskBits) {
    throw InstanceTooLarge("cap search supports universes of at most 64 vertices");
  }
}

bool CapSearch::member(Mask s) {
  auto [it, inserted] = memo_.try_emplace(s, false);
  if (inserted) it->second = is_member_(s);
  return it->second;
}

std::optional<std::vector<Mask>> CapSearch::path_under_cap(Mask x, Mask y, std::size_t cap) {
  if (static_cast<std::size_t>(popcount(x)) > cap ||
      static_cast<std::size_t>(popcount(y)) > cap) {
    return std::nullopt;
  }
  if (!member(x) || !member(y)) return std::nullopt;

  std::unordered_map<Mask, Mask> parent;
  parent.emplace(x, x);
  std::vector<Mask> queue{x};
  bool found = x == y;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const Mask s = queue[head];
    ++states_explored_;
    const bool can_grow = static_cast<std::size_t>(popcount(s)) < cap;
    for (std::size_t v = 0; v < universe_; ++v) {
      const Mask bit = Mask{1} << v;
      if (!(s & bit) && !can_grow) continue;
      const Mask next = s ^ bit;
      if (parent.contains(next) || !member(next)) continue;
      parent.emplace(next, s);
      if (next == y) {
        found = true;
        break;
      }
      queue.push_back(next);
    }
  }
  if (!found) return std::nullopt;

  std::vector<Mask> path{y};
  while (path.back() != x) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

MinmaxReport CapSearch::minimize(Mask x, Mask y) {
  const auto lower = static_cast<std::size_t>(std::max(popcount(x), popcount(y)));
  for (std::size_t cap = lower; cap <= std::max(universe_, lower); ++cap) {
    if (auto path = path_under_cap(x, y, cap)) {
      MinmaxReport report;
      report.witness = sequence_from_masks(*path);
      report.value = report.witness.max_size();
      report.cap_tried = cap;
      report.states_explored = states_explored_;
      return report;
    }
  }
  throw InvalidInput("Y is unreachable from X through member sets");
}

ReconfigSequence sequence_from_masks(const std::vector<Mask>& path) {
  ReconfigSequence seq;
  seq.sets.reserve(path.size());
  for (Mask m : path) seq.sets.push_back(VertexSet::from_mask(m));
  return seq;
}

namespace {

CapSearch make_graph_search(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y,
                            std::size_t limit) {
  const std::size_t cap = std::min(limit, kMaskBits);
  if (g.n() > cap) {
    throw InstanceTooLarge("exact reconfiguration search supports at most " +
                           std::to_string(cap) + " vertices, got " + std::to_string(g.n()));
  }
  require_target(g, x, "X");
  require_target(g, y, "Y");
  auto act = std::make_shared<Activator>(g);
  return CapSearch(g.n(), [act](Mask s) { return act->activates_all(s); });
}

}  // namespace

MinmaxReport minmax_exact(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y,
                          std::size_t limit) {
  CapSearch search = make_graph_search(g, x, y, limit);
  return search.minimize(x.to_mask(), y.to_mask());
}

CapReport search_under_cap(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y,
                           std::size_t cap, std::size_t limit) {
  CapSearch search = make_graph_search(g, x, y, limit);
  auto path = search.path_under_cap(x.to_mask(), y.to_mask(), cap);
  CapReport report;
  report.reachable = path.has_value();
  report.cap = cap;
  report.states_explored = search.states_explored();
  if (path) report.witness = sequence_from_masks(*path);
  return report;
}

bool reachable_under_cap(const ThresholdGraph& g, const VertexSet& x, const VertexSet& y,
                         std::size_t cap, std::size_t limit) {
  return search_under_cap(g, x, y, cap, limit).reachable;
}

}  // namespace tsr
