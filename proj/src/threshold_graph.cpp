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

#include "tsreconf/threshold_graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "tsreconf/errors.hpp"

namespace tsr {

std::optional<std::string> check_graph_invariants(
    const std::vector<std::vector<Vertex>>& adjacency, std::span<const Threshold> tau) {
  const std::size_t n = adjacency.size();
  if (tau.size() != n) {
    return "threshold count " + std::to_string(tau.size()) + " differs from vertex count " +
           std::to_string(n);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nbrs = adjacency[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      const std::string where = "vertex " + std::to_string(v + 1);
      if (w >= n) return where + ": neighbor id out of range";
      if (w == v) return where + ": self-loop";
      if (i > 0 && nbrs[i - 1] >= w) {
        return where + ": neighbor list not sorted ascending and duplicate-free";
      }
      const auto& back = adjacency[w];
      if (!std::binary_search(back.begin(), back.end(), static_cast<Vertex>(v))) {
        return "asymmetric adjacency: " + std::to_string(v + 1) + " lists " +
               std::to_string(w + 1) + " but not vice versa";
      }
    }
  }
  return std::nullopt;
}

ThresholdGraph::ThresholdGraph(std::vector<std::vector<Vertex>> adjacency,
                               std::vector<Threshold> tau)
    : adjacency_(std::move(adjacency)), tau_(std::move(tau)) {
  if (auto err = check_graph_invariants(adjacency_, tau_)) throw InvalidInput(*err);
  std::size_t degree_sum = 0;
  for (const auto& nbrs : adjacency_) degree_sum += nbrs.size();
  num_edges_ = degree_sum / 2;
}

ThresholdGraph ThresholdGraph::from_edges(std::size_t n, std::span<const Edge> edges,
                                          std::vector<Threshold> tau) {
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidInput("edge (" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) +
                         ") has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u + 1));
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nbrs = adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw InvalidInput("duplicate edge at vertex " + std::to_string(v + 1));
    }
  }
  return ThresholdGraph(std::move(adjacency), std::move(tau));
}

std::vector<Edge> ThresholdGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool ThresholdGraph::has_isolated_vertex() const noexcept {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& nbrs) { return nbrs.empty(); });
}

namespace {

std::uint64_t parse_count(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what +
                               ", got '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError(line, std::string(what) + " out of range");
  }
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

}  // namespace

ThresholdGraph parse_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::vector<std::optional<Threshold>> tau;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    const std::string& kind = tokens[0];

    if (kind == "p") {
      if (n) throw ParseError(lineno, "duplicate 'p' header");
      if (tokens.size() != 4 || tokens[1] != "tss") {
        throw ParseError(lineno, "header must be 'p tss <n> <m>'");
      }
      const auto nv = parse_count(tokens[2], lineno, "vertex count");
      if (nv > std::numeric_limits<Vertex>::max()) {
        throw ParseError(lineno, "vertex count out of range");
      }
      n = static_cast<std::size_t>(nv);
      m = static_cast<std::size_t>(parse_count(tokens[3], lineno, "edge count"));
      tau.assign(*n, std::nullopt);
      continue;
    }
    if (!n) throw ParseError(lineno, "'" + kind + "' line before the 'p tss' header");

    if (kind == "t") {
      if (tokens.size() != 3) throw ParseError(lineno, "threshold line must be 't <v> <tau>'");
      const auto v = parse_count(tokens[1], lineno, "vertex id");
      const auto t = parse_count(tokens[2], lineno, "threshold");
      if (v < 1 || v > *n) {
        throw ParseError(lineno, "vertex id " + tokens[1] + " outside 1.." + std::to_string(*n));
      }
      if (t > std::numeric_limits<Threshold>::max()) {
        throw ParseError(lineno, "threshold out of range");
      }
      if (tau[v - 1]) throw ParseError(lineno, "second threshold for vertex " + tokens[1]);
      tau[v - 1] = static_cast<Threshold>(t);
    } else if (kind == "e") {
      if (tokens.size() != 3) throw ParseError(lineno, "edge line must be 'e <u> <v>'");
      const auto u = parse_count(tokens[1], lineno, "vertex id");
      const auto v = parse_count(tokens[2], lineno, "vertex id");
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw ParseError(lineno, "edge endpoint outside 1.." + std::to_string(*n));
      }
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + tokens[1]);
      if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
      const auto key = std::make_pair(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      if (!seen.insert(key).second) {
        throw ParseError(lineno, "duplicate edge " + tokens[1] + " " + tokens[2]);
      }
      edges.push_back({key.first, key.second});
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }

  if (!n) throw ParseError(0, "missing 'p tss <n> <m>' header");
  if (edges.size() != m) {
    throw InvalidInput("header declares " + std::to_string(m) + " edges but " +
                       std::to_string(edges.size()) + " were given");
  }
  std::vector<Threshold> thresholds(*n);
  for (std::size_t v = 0; v < *n; ++v) {
    if (!tau[v]) throw InvalidInput("missing threshold for vertex " + std::to_string(v + 1));
    thresholds[v] = *tau[v];
  }
  return ThresholdGraph::from_edges(*n, edges, std::move(thresholds));
}

ThresholdGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const ThresholdGraph& g) {
  std::ostringstream out;
  out << "p tss " << g.n() << ' ' << g.num_edges() << '\n';
  for (Vertex v = 0; v < g.n(); ++v) out << "t " << v + 1 << ' ' << g.tau(v) << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

ThresholdGraph set_cover_thresholds(const ThresholdGraph& g, CoverMode mode) {
  std::vector<Threshold> tau(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto d = static_cast<Threshold>(g.degree(v));
    tau[v] = mode == CoverMode::kVertexCover ? d : (d == 0 ? 0 : d - 1);
  }
  return ThresholdGraph(g.adjacency(), std::move(tau));
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ThresholdGraph random_graph(std::size_t n, double p, const TauRule& rule, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_graph: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("random_graph: p must lie in [0, 1]");
  if (rule.kind == TauRule::Kind::kProportional && !(rule.rho >= 0.0 && rule.rho <= 1.0)) {
    throw InvalidInput("random_graph: rho must lie in [0, 1]");
  }

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_interval(rng) < p) edges.push_back({u, v});
    }
  }
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }

  std::vector<Threshold> tau(n);
  for (std::size_t v = 0; v < n; ++v) {
    switch (rule.kind) {
      case TauRule::Kind::kConstant:
        tau[v] = rule.constant;
        break;
      case TauRule::Kind::kUniform:
        tau[v] = degree[v] == 0 ? 1 : static_cast<Threshold>(1 + rng() % degree[v]);
        break;
      case TauRule::Kind::kProportional:
        tau[v] = static_cast<Threshold>(std::ceil(rule.rho * static_cast<double>(degree[v])));
        break;
    }
  }
  return ThresholdGraph::from_edges(n, edges, std::move(tau));
}

std::string to_dot(const ThresholdGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    out << "  " << v + 1 << " [label=\"v" << v + 1 << " (" << g.tau(v) << ")\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tsr
