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

// Gap-preserving reduction from Target Set Selection on G to Minmax Target
// Set Reconfiguration on (H; X, Y).
//
// H is G plus four vertex groups wired together by one-way gadgets:
//
//   V -> X -> A -> V     and     V -> Y -> B -> V
//
// X and Y hold ell vertices each, with threshold n = |V(G)|. A and B hold one
// vertex a(v, j) / b(v, j) per vertex v of G and 1 <= j <= deg(v), with
// threshold ell. A one-way gadget from tail u to head w is the 4-cycle
// t - b1 - h - b2 - t with tau(t) = tau(b1) = tau(b2) = 1, tau(h) = 2, plus
// the edges (u, t) and (w, h): activating u activates the whole gadget,
// while activating w alone does nothing.
//
// Vertex numbering of H is fixed: the originals 0..n-1 keep their ids, then
// X, Y, A and B (both ordered by (v, j)), then the gadget internals t, h, b1,
// b2 gadget by gadget, families in the order V->X, X->A, A->V, V->Y, Y->B,
// B->V. In particular V u X u Y is the id prefix [0, n + 2 ell).

#ifndef TSRECONF_REDUCTION_HPP_
#define TSRECONF_REDUCTION_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsreconf/reconfig.hpp"
#include "tsreconf/threshold_graph.hpp"
#include "tsreconf/tss_solver.hpp"
#include "tsreconf/vertex_set.hpp"

namespace tsr {

enum class GadgetFamily { kVtoX, kXtoA, kAtoV, kVtoY, kYtoB, kBtoV };
enum class GadgetPart { kT, kH, kB1, kB2 };

const char* to_string(GadgetFamily family);
const char* to_string(GadgetPart part);

struct Gadget {
  GadgetFamily family;
  Vertex tail;
  Vertex head;
  // t, h, b1, b2
  std::array<Vertex, 4> internals;

  Vertex t() const { return internals[0]; }
  Vertex h() const { return internals[1]; }
};

enum class RoleKind { kOriginal, kX, kY, kA, kB, kGadgetInternal };

// What a vertex of H stands for. Indices are 0-based here; describe() prints
// them 1-based, e.g. "original:3", "x:2", "a:3,1", "gadget:17:h".
struct Role {
  RoleKind kind = RoleKind::kOriginal;
  // v for kOriginal, kA, kB.
  Vertex original = 0;
  // i for kX/kY, j for kA/kB, the gadget id for kGadgetInternal.
  std::size_t index = 0;
  GadgetPart part = GadgetPart::kT;

  std::string describe() const;
  friend bool operator==(const Role&, const Role&) = default;
};

struct ReductionOutput {
  ThresholdGraph g;
  std::size_t ell = 0;
  ThresholdGraph h;
  VertexSet x;
  VertexSet y;
  VertexSet a;
  VertexSet b;
  // a_by_vertex[v][j] is a(v, j + 1); likewise for B.
  std::vector<std::vector<Vertex>> a_by_vertex;
  std::vector<std::vector<Vertex>> b_by_vertex;
  std::vector<Role> roles;
  std::vector<Gadget> gadgets;
  std::map<std::pair<Vertex, Vertex>, std::size_t> gadget_by_ends;

  std::size_t n() const { return g.n(); }
  // |V u X u Y| = n + 2 ell.
  std::size_t restricted_size() const { return g.n() + 2 * ell; }
  // |V(G)| + |X| + |Y| + |A| + |B|, i.e. everything but gadget internals.
  std::size_t named_size() const { return restricted_size() + a.size() + b.size(); }
  bool is_internal(Vertex v) const { return roles.at(v).kind == RoleKind::kGadgetInternal; }
  const Gadget* find_gadget(Vertex tail, Vertex head) const;
};

// Throws InvalidInput if ell == 0, if g has an isolated vertex, or if some
// tau(v) > deg(v) (then A alone cannot activate v and X is not a target set
// of H).
ReductionOutput build_h(const ThresholdGraph& g, std::size_t ell);

// X -> X + S -> S -> Y + S -> Y, one vertex per step, ascending ids within
// each phase. Throws InvalidInput if s is not a target set of G.
ReconfigSequence canonical_sequence(const ReductionOutput& r, const VertexSet& s);

// Replaces gadget internals by the gadget's tail, set by set, and merges
// consecutive repeats. Throws InvalidInput if seq is not valid for H.
ReconfigSequence collapse_gadgets(const ReductionOutput& r, const ReconfigSequence& seq);

// Replaces a(v, j) and b(v, j) by v, set by set, and merges consecutive
// repeats. Throws InvalidInput if seq holds gadget internals or is not valid
// for H.
ReconfigSequence collapse_ab(const ReductionOutput& r, const ReconfigSequence& seq);

// s plus every a(v, j), b(v, j) with v in s: the largest set that
// collapse_ab maps to s. Throws InvalidInput unless s is within V u X u Y.
VertexSet expand_ab(const ReductionOutput& r, const VertexSet& s);

// Target-set test for subsets of V u X u Y without simulating H:
// X within s, Y within s, or s & V is a target set of G.
bool is_target_restricted(const ReductionOutput& r, const VertexSet& s);

enum class SetClass { kC1, kC2, kC3, kXY };
const char* to_string(SetClass c);

// C1: contains X only; C2: contains Y only; C3: neither; XY: both.
SetClass classify(const ReductionOutput& r, const VertexSet& s);

struct RestrictedMinmax {
  std::size_t value = 0;
  ReconfigSequence witness;
  std::size_t states_explored = 0;
};

// opt_H(X <-> Y) by cap search over subsets of V u X u Y with
// is_target_restricted as membership. Throws InstanceTooLarge when
// n + 2 ell exceeds `limit` (itself capped at 64).
RestrictedMinmax restricted_minmax(const ReductionOutput& r,
                                   std::size_t limit = kDefaultExactLimit);

struct ImplicationCheck {
  bool triggered = false;
  // Vacuously true when not triggered.
  bool holds = true;
};

struct VerificationReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t ell = 0;
  std::size_t k_c = 0;
  std::size_t k_s = 0;
  std::size_t opt_g = 0;
  VertexSet opt_g_witness;
  std::size_t opt_h = 0;
  ReconfigSequence opt_h_witness;
  std::size_t states_explored = 0;
  std::size_t h_vertices = 0;
  std::size_t h_edges = 0;
  std::size_t named_vertices = 0;
  std::size_t gadgets = 0;
  // |V(G)|^2 + ell, the quantity H's size is compared against.
  std::size_t quadratic_reference = 0;
  bool soundness_hypothesis = false;  // ell >= k_s + 1
  ImplicationCheck completeness;  // opt(G) <= k_c  =>  opt_H <= k_c + ell
  ImplicationCheck soundness;     // opt(G) > k_s   =>  opt_H > k_s + ell
  // Shape of the witness when opt_H <= k_s + ell < 2 ell: no set holds both
  // X and Y, and some set holds neither.
  bool witness_has_xy = false;
  bool witness_has_c3 = false;

  bool ok() const { return completeness.holds && soundness.holds; }
};

// Throws InvalidInput unless ell > k_s >= k_c.
VerificationReport verify_reduction(const ThresholdGraph& g, std::size_t ell, std::size_t k_c,
                                    std::size_t k_s, std::size_t limit = kDefaultExactLimit);

// Graphviz rendering of H with each gadget drawn as a single arrow from
// tail to head.
std::string to_dot(const ReductionOutput& r);

}  // namespace tsr

#endif  // TSRECONF_REDUCTION_HPP_
