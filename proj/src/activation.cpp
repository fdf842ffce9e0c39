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

#include "tsreconf/activation.hpp"

#include <string>

#include "tsreconf/errors.hpp"

namespace tsr {

namespace {

void check_range(const ThresholdGraph& g, const VertexSet& s) {
  if (s.bound() > g.n()) {
    throw InvalidInput("vertex id " + std::to_string(s.bound()) + " outside 1.." +
                       std::to_string(g.n()));
  }
}

}  // namespace

VertexSet step(const ThresholdGraph& g, const VertexSet& active) {
  check_range(g, active);
  std::vector<char> is_active(g.n(), 0);
  for (Vertex v : active) is_active[v] = 1;

  std::vector<Vertex> next;
  next.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (is_active[v]) {
      next.push_back(v);
      continue;
    }
    std::size_t hits = 0;
    for (Vertex w : g.neighbors(v)) hits += is_active[w];
    if (hits >= g.tau(v)) next.push_back(v);
  }
  return VertexSet(std::move(next));
}

ActivationTrace closure(const ThresholdGraph& g, const VertexSet& seeds) {
  check_range(g, seeds);
  ActivationTrace trace;
  trace.steps.push_back(seeds);
  while (true) {
    VertexSet next = step(g, trace.steps.back());
    const bool fixed = next == trace.steps.back();
    trace.steps.push_back(std::move(next));
    if (fixed) break;
  }
  trace.converged_at = trace.steps.size() - 2;
  return trace;
}

VertexSet active_set(const ThresholdGraph& g, const VertexSet& seeds) {
  check_range(g, seeds);
  Activator act(g);
  act.run(seeds.ids());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (act.active()[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool is_target_set(const ThresholdGraph& g, const VertexSet& seeds) {
  check_range(g, seeds);
  Activator act(g);
  return act.activates_all(seeds.ids());
}

Activator::Activator(const ThresholdGraph& g)
    : graph_(g), active_(g.n(), 0), count_(g.n(), 0) {
  queue_.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.tau(v) == 0) unconditional_.push_back(v);
  }
}

void Activator::reset() {
  std::fill(active_.begin(), active_.end(), 0);
  std::fill(count_.begin(), count_.end(), 0);
  queue_.clear();
  active_count_ = 0;
}

void Activator::seed(Vertex v) {
  if (v >= graph_.n()) {
    throw InvalidInput("vertex id " + std::to_string(v + 1) + " outside 1.." +
                       std::to_string(graph_.n()));
  }
  if (active_[v]) return;
  active_[v] = 1;
  ++active_count_;
  queue_.push_back(v);
}

std::size_t Activator::propagate() {
  for (Vertex v : unconditional_) seed(v);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex u = queue_[head];
    for (Vertex w : graph_.neighbors(u)) {
      if (active_[w]) continue;
      if (++count_[w] >= graph_.tau(w)) {
        active_[w] = 1;
        ++active_count_;
        queue_.push_back(w);
      }
    }
  }
  return active_count_;
}

std::size_t Activator::run(std::span<const Vertex> seeds) {
  reset();
  for (Vertex v : seeds) seed(v);
  return propagate();
}

std::size_t Activator::run(Mask seeds) {
  reset();
  while (seeds != 0) {
    seed(static_cast<Vertex>(__builtin_ctzll(seeds)));
    seeds &= seeds - 1;
  }
  return propagate();
}

}  // namespace tsr
