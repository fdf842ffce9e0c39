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

#ifndef TSRECONF_THRESHOLD_GRAPH_HPP_
#define TSRECONF_THRESHOLD_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsreconf/vertex_set.hpp"

namespace tsr {

using Threshold = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A simple undirected graph with a threshold per vertex.
//
// Invariants (checked on construction): neighbor lists are sorted ascending
// and duplicate-free, no self-loops, and adjacency is symmetric. Thresholds
// are unbounded; tau(v) > deg(v) marks a vertex that only a seed can
// activate, and tau(v) == 0 marks one that activates unconditionally.
class ThresholdGraph {
 public:
  ThresholdGraph() = default;
  // Throws InvalidInput naming the violated invariant.
  ThresholdGraph(std::vector<std::vector<Vertex>> adjacency, std::vector<Threshold> tau);

  // Edges may be given in any order and orientation; duplicates and
  // self-loops are rejected.
  static ThresholdGraph from_edges(std::size_t n, std::span<const Edge> edges,
                                   std::vector<Threshold> tau);

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  Threshold tau(Vertex v) const { return tau_.at(v); }
  std::span<const Threshold> thresholds() const noexcept { return tau_; }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }

  // Edges with u < v, ascending.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::range(0, static_cast<Vertex>(n())); }
  bool has_isolated_vertex() const noexcept;

  friend bool operator==(const ThresholdGraph&, const ThresholdGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Threshold> tau_;
  std::size_t num_edges_ = 0;
};

// Returns a description of the first violated invariant, or nullopt.
std::optional<std::string> check_graph_invariants(
    const std::vector<std::vector<Vertex>>& adjacency, std::span<const Threshold> tau);

// TSS text format:
//   c <comment>
//   p tss <n> <m>     exactly once, first non-comment line
//   t <v> <tau>       exactly one per vertex
//   e <u> <v>         m lines, 1 <= u < v <= n, no duplicates
ThresholdGraph parse_graph(std::istream& in);
ThresholdGraph parse_graph(const std::string& text);
// Canonical form: header, thresholds by vertex, edges ascending.
std::string serialize_graph(const ThresholdGraph& g);

enum class CoverMode { kVertexCover, kFeedbackVertexSet };

// tau(v) = deg(v) for vertex cover, max(deg(v) - 1, 0) for feedback vertex set.
ThresholdGraph set_cover_thresholds(const ThresholdGraph& g, CoverMode mode);

struct TauRule {
  enum class Kind { kConstant, kUniform, kProportional };
  Kind kind = Kind::kConstant;
  Threshold constant = 1;
  double rho = 0.5;

  static TauRule constant_value(Threshold c) { return {Kind::kConstant, c, 0.0}; }
  // Uniform on 1..deg(v); isolated vertices get 1.
  static TauRule uniform() { return {Kind::kUniform, 0, 0.0}; }
  // ceil(rho * deg(v)).
  static TauRule proportional(double rho) { return {Kind::kProportional, 0, rho}; }
};

// G(n, p) with thresholds drawn by `rule`; deterministic in `seed`.
ThresholdGraph random_graph(std::size_t n, double p, const TauRule& rule, std::uint64_t seed);

// Graphviz rendering with 1-based labels "v<i> (tau)".
std::string to_dot(const ThresholdGraph& g);

}  // namespace tsr

#endif  // TSRECONF_THRESHOLD_GRAPH_HPP_
