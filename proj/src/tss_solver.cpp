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

#include "tsreconf/tss_solver.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tsreconf/activation.hpp"
#include "tsreconf/errors.hpp"

namespace tsr {

namespace {

void check_limit(const ThresholdGraph& g, std::size_t limit) {
  const std::size_t cap = std::min(limit, kMaskBits);
  if (g.n() > cap) {
    throw InstanceTooLarge("exhaustive target set search supports at most " +
                           std::to_string(cap) + " vertices, got " + std::to_string(g.n()));
  }
}

// Visits every k-subset of `pool` in lexicographic order until `visit`
// returns false. Returns false iff stopped early.
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t k,
                          const std::function<bool(Mask)>& visit) {
  const std::size_t m = pool.size();
  if (k > m) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask mask = 0;
    for (std::size_t i : idx) mask |= Mask{1} << pool[i];
    if (!visit(mask)) return false;
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls `visit` on each minimum target set (lexicographic order) until it
// returns false.
void enumerate_minimum(const ThresholdGraph& g, std::size_t limit,
                       const std::function<bool(Mask)>& visit) {
  check_limit(g, limit);
  const Mask forced = forced_vertices(g).to_mask();
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!(forced >> v & 1)) pool.push_back(v);
  }

  Activator act(g);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    bool found = false;
    bool stopped = false;
    for_each_combination(pool, k, [&](Mask chosen) {
      const Mask candidate = chosen | forced;
      if (!act.activates_all(candidate)) return true;
      found = true;
      if (!visit(candidate)) {
        stopped = true;
        return false;
      }
      return true;
    });
    if (found || stopped) return;
  }
}

}  // namespace

VertexSet forced_vertices(const ThresholdGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.tau(v) > g.degree(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

TssResult min_target_set_exact(const ThresholdGraph& g, std::size_t limit) {
  // V is always a target set, so the callback runs exactly once.
  TssResult result;
  enumerate_minimum(g, limit, [&](Mask m) {
    result.witness = VertexSet::from_mask(m);
    result.size = result.witness.size();
    return false;
  });
  return result;
}

std::vector<VertexSet> all_min_target_sets(const ThresholdGraph& g, std::size_t limit) {
  std::vector<VertexSet> out;
  enumerate_minimum(g, limit, [&](Mask m) {
    out.push_back(VertexSet::from_mask(m));
    return true;
  });
  return out;
}

VertexSet min_target_set_greedy(const ThresholdGraph& g) {
  Activator act(g);
  std::vector<Vertex> chosen;
  std::size_t reached = act.run(chosen);
  while (reached < g.n()) {
    std::vector<char> current_active = act.active();
    Vertex best = 0;
    std::size_t best_reach = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (current_active[v]) continue;
      chosen.push_back(v);
      const std::size_t r = act.run(chosen);
      chosen.pop_back();
      if (r > best_reach) {
        best_reach = r;
        best = v;
      }
    }
    chosen.push_back(best);
    reached = act.run(chosen);
  }
  return VertexSet(std::move(chosen));
}

}  // namespace tsr
