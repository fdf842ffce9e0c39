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

#include "tsreconf/reduction.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "tsreconf/activation.hpp"
#include "tsreconf/errors.hpp"

namespace tsr {

const char* to_string(GadgetFamily family) {
  switch (family) {
    case GadgetFamily::kVtoX: return "V->X";
    case GadgetFamily::kXtoA: return "X->A";
    case GadgetFamily::kAtoV: return "A->V";
    case GadgetFamily::kVtoY: return "V->Y";
    case GadgetFamily::kYtoB: return "Y->B";
    case GadgetFamily::kBtoV: return "B->V";
  }
  return "?";
}

const char* to_string(GadgetPart part) {
  switch (part) {
    case GadgetPart::kT: return "t";
    case GadgetPart::kH: return "h";
    case GadgetPart::kB1: return "b1";
    case GadgetPart::kB2: return "b2";
  }
  return "?";
}

const char* to_string(SetClass c) {
  switch (c) {
    case SetClass::kC1: return "C1";
    case SetClass::kC2: return "C2";
    case SetClass::kC3: return "C3";
    case SetClass::kXY: return "XY";
  }
  return "?";
}

std::string Role::describe() const {
  switch (kind) {
    case RoleKind::kOriginal: return "original:" + std::to_string(original + 1);
    case RoleKind::kX: return "x:" + std::to_string(index + 1);
    case RoleKind::kY: return "y:" + std::to_string(index + 1);
    case RoleKind::kA:
      return "a:" + std::to_string(original + 1) + "," + std::to_string(index + 1);
    case RoleKind::kB:
      return "b:" + std::to_string(original + 1) + "," + std::to_string(index + 1);
    case RoleKind::kGadgetInternal:
      return "gadget:" + std::to_string(index + 1) + ":" + to_string(part);
  }
  return "?";
}

const Gadget* ReductionOutput::find_gadget(Vertex tail, Vertex head) const {
  auto it = gadget_by_ends.find({tail, head});
  return it == gadget_by_ends.end() ? nullptr : &gadgets[it->second];
}

ReductionOutput build_h(const ThresholdGraph& g, std::size_t ell) {
  if (ell == 0) throw InvalidInput("build_h: ell must be at least 1");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      throw InvalidInput("build_h: vertex " + std::to_string(v + 1) + " is isolated");
    }
    if (g.tau(v) > g.degree(v)) {
      throw InvalidInput("build_h: vertex " + std::to_string(v + 1) +
                         " has threshold above its degree");
    }
  }

  ReductionOutput r;
  r.g = g;
  r.ell = ell;
  const std::size_t n = g.n();

  std::vector<Threshold> tau(g.thresholds().begin(), g.thresholds().end());
  std::vector<Edge> edges = g.edges();
  auto add_vertex = [&](Threshold t, Role role) {
    tau.push_back(t);
    r.roles.push_back(role);
    return static_cast<Vertex>(tau.size() - 1);
  };

  for (Vertex v = 0; v < n; ++v) r.roles.push_back({RoleKind::kOriginal, v, 0, {}});

  std::vector<Vertex> xs, ys, as, bs;
  for (std::size_t i = 0; i < ell; ++i) {
    xs.push_back(add_vertex(static_cast<Threshold>(n), {RoleKind::kX, 0, i, {}}));
  }
  for (std::size_t i = 0; i < ell; ++i) {
    ys.push_back(add_vertex(static_cast<Threshold>(n), {RoleKind::kY, 0, i, {}}));
  }
  r.a_by_vertex.resize(n);
  r.b_by_vertex.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < g.degree(v); ++j) {
      const Vertex a = add_vertex(static_cast<Threshold>(ell), {RoleKind::kA, v, j, {}});
      as.push_back(a);
      r.a_by_vertex[v].push_back(a);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < g.degree(v); ++j) {
      const Vertex b = add_vertex(static_cast<Threshold>(ell), {RoleKind::kB, v, j, {}});
      bs.push_back(b);
      r.b_by_vertex[v].push_back(b);
    }
  }

  auto connect = [&](GadgetFamily family, Vertex tail, Vertex head) {
    const std::size_t id = r.gadgets.size();
    Gadget gadget{family, tail, head, {}};
    const GadgetPart parts[] = {GadgetPart::kT, GadgetPart::kH, GadgetPart::kB1,
                                GadgetPart::kB2};
    const Threshold thresholds[] = {1, 2, 1, 1};
    for (int k = 0; k < 4; ++k) {
      gadget.internals[k] =
          add_vertex(thresholds[k], {RoleKind::kGadgetInternal, 0, id, parts[k]});
    }
    const auto [t, h, b1, b2] = gadget.internals;
    edges.push_back({t, b1});
    edges.push_back({t, b2});
    edges.push_back({h, b1});
    edges.push_back({h, b2});
    edges.push_back({tail, t});
    edges.push_back({head, h});
    r.gadget_by_ends.emplace(std::make_pair(tail, head), id);
    r.gadgets.push_back(gadget);
  };

  for (Vertex v = 0; v < n; ++v) {
    for (Vertex x : xs) connect(GadgetFamily::kVtoX, v, x);
  }
  for (Vertex x : xs) {
    for (Vertex a : as) connect(GadgetFamily::kXtoA, x, a);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex a : r.a_by_vertex[v]) connect(GadgetFamily::kAtoV, a, v);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex y : ys) connect(GadgetFamily::kVtoY, v, y);
  }
  for (Vertex y : ys) {
    for (Vertex b : bs) connect(GadgetFamily::kYtoB, y, b);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex b : r.b_by_vertex[v]) connect(GadgetFamily::kBtoV, b, v);
  }

  const std::size_t total = tau.size();
  r.h = ThresholdGraph::from_edges(total, edges, std::move(tau));
  r.x = VertexSet(xs);
  r.y = VertexSet(ys);
  r.a = VertexSet(as);
  r.b = VertexSet(bs);
  return r;
}

ReconfigSequence canonical_sequence(const ReductionOutput& r, const VertexSet& s) {
  if (s.bound() > r.n() || !is_target_set(r.g, s)) {
    throw InvalidInput("canonical_sequence: S is not a target set of G");
  }
  ReconfigSequence seq;
  VertexSet current = r.x;
  seq.sets.push_back(current);
  auto add_all = [&](const VertexSet& vs) {
    for (Vertex v : vs) {
      current = current.with(v);
      seq.sets.push_back(current);
    }
  };
  auto remove_all = [&](const VertexSet& vs) {
    for (Vertex v : vs) {
      current = current.without(v);
      seq.sets.push_back(current);
    }
  };
  add_all(s);
  remove_all(r.x);
  add_all(r.y);
  remove_all(s);
  return seq;
}

namespace {

void require_valid(const ReductionOutput& r, const ReconfigSequence& seq, const char* op) {
  const SequenceVerdict verdict = validate_sequence(r.h, seq, r.x, r.y);
  if (!verdict.valid) {
    throw InvalidInput(std::string(op) + ": input sequence is not valid for H (set " +
                       std::to_string(*verdict.first_violation + 1) + ": " + verdict.reason +
                       ")");
  }
}

void require_restricted(const ReductionOutput& r, const VertexSet& s, const char* op) {
  if (s.bound() > r.restricted_size()) {
    throw InvalidInput(std::string(op) + ": set is not within V u X u Y");
  }
}

template <typename Projection>
ReconfigSequence project(const ReconfigSequence& seq, Projection proj) {
  ReconfigSequence out;
  for (const VertexSet& s : seq.sets) {
    VertexSet p = proj(s);
    if (out.sets.empty() || out.sets.back() != p) out.sets.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ReconfigSequence collapse_gadgets(const ReductionOutput& r, const ReconfigSequence& seq) {
  require_valid(r, seq, "collapse_gadgets");
  return project(seq, [&](const VertexSet& s) {
    std::vector<Vertex> out;
    for (Vertex v : s) {
      const Role& role = r.roles[v];
      out.push_back(role.kind == RoleKind::kGadgetInternal ? r.gadgets[role.index].tail : v);
    }
    return VertexSet(std::move(out));
  });
}

ReconfigSequence collapse_ab(const ReductionOutput& r, const ReconfigSequence& seq) {
  for (const VertexSet& s : seq.sets) {
    for (Vertex v : s) {
      if (v < r.h.n() && r.is_internal(v)) {
        throw InvalidInput("collapse_ab: sequence holds gadget internals; collapse gadgets first");
      }
    }
  }
  require_valid(r, seq, "collapse_ab");
  return project(seq, [&](const VertexSet& s) {
    std::vector<Vertex> out;
    for (Vertex v : s) {
      const Role& role = r.roles[v];
      const bool ab = role.kind == RoleKind::kA || role.kind == RoleKind::kB;
      out.push_back(ab ? role.original : v);
    }
    return VertexSet(std::move(out));
  });
}

VertexSet expand_ab(const ReductionOutput& r, const VertexSet& s) {
  require_restricted(r, s, "expand_ab");
  std::vector<Vertex> out(s.begin(), s.end());
  for (Vertex v : s) {
    if (v >= r.n()) break;
    out.insert(out.end(), r.a_by_vertex[v].begin(), r.a_by_vertex[v].end());
    out.insert(out.end(), r.b_by_vertex[v].begin(), r.b_by_vertex[v].end());
  }
  return VertexSet(std::move(out));
}

bool is_target_restricted(const ReductionOutput& r, const VertexSet& s) {
  require_restricted(r, s, "is_target_restricted");
  if (r.x.is_subset_of(s) || r.y.is_subset_of(s)) return true;
  return is_target_set(r.g, s.intersected(r.g.vertices()));
}

SetClass classify(const ReductionOutput& r, const VertexSet& s) {
  require_restricted(r, s, "classify");
  const bool has_x = r.x.is_subset_of(s);
  const bool has_y = r.y.is_subset_of(s);
  if (has_x && has_y) return SetClass::kXY;
  if (has_x) return SetClass::kC1;
  if (has_y) return SetClass::kC2;
  return SetClass::kC3;
}

RestrictedMinmax restricted_minmax(const ReductionOutput& r, std::size_t limit) {
  const std::size_t cap = std::min(limit, kMaskBits);
  if (r.restricted_size() > cap) {
    throw InstanceTooLarge("restricted search needs n + 2 ell <= " + std::to_string(cap) +
                           ", got " + std::to_string(r.restricted_size()));
  }
  const Mask x_mask = r.x.to_mask();
  const Mask y_mask = r.y.to_mask();
  const Mask v_mask = r.g.vertices().to_mask();
  auto act = std::make_shared<Activator>(r.g);
  CapSearch search(r.restricted_size(), [=](Mask s) {
    return (s & x_mask) == x_mask || (s & y_mask) == y_mask || act->activates_all(s & v_mask);
  });
  const MinmaxReport report = search.minimize(x_mask, y_mask);
  return {report.value, report.witness, report.states_explored};
}

VerificationReport verify_reduction(const ThresholdGraph& g, std::size_t ell, std::size_t k_c,
                                    std::size_t k_s, std::size_t limit) {
  if (!(ell > k_s && k_s >= k_c)) {
    throw InvalidInput("verify_reduction: parameters must satisfy ell > k_s >= k_c");
  }
  VerificationReport rep;
  rep.n = g.n();
  rep.m = g.num_edges();
  rep.ell = ell;
  rep.k_c = k_c;
  rep.k_s = k_s;

  const TssResult opt = min_target_set_exact(g, limit);
  rep.opt_g = opt.size;
  rep.opt_g_witness = opt.witness;

  const ReductionOutput r = build_h(g, ell);
  rep.h_vertices = r.h.n();
  rep.h_edges = r.h.num_edges();
  rep.named_vertices = r.named_size();
  rep.gadgets = r.gadgets.size();
  rep.quadratic_reference = g.n() * g.n() + ell;

  const RestrictedMinmax mm = restricted_minmax(r, limit);
  rep.opt_h = mm.value;
  rep.opt_h_witness = mm.witness;
  rep.states_explored = mm.states_explored;

  rep.soundness_hypothesis = ell >= k_s + 1;
  rep.completeness.triggered = rep.opt_g <= k_c;
  rep.completeness.holds = !rep.completeness.triggered || rep.opt_h <= k_c + ell;
  rep.soundness.triggered = rep.opt_g > k_s;
  rep.soundness.holds = !rep.soundness.triggered || rep.opt_h > k_s + ell;

  for (const VertexSet& s : mm.witness.sets) {
    const SetClass c = classify(r, s);
    rep.witness_has_xy |= c == SetClass::kXY;
    rep.witness_has_c3 |= c == SetClass::kC3;
  }
  return rep;
}

std::string to_dot(const ReductionOutput& r) {
  std::ostringstream out;
  out << "digraph H {\n";
  for (Vertex v = 0; v < r.named_size(); ++v) {
    out << "  " << v + 1 << " [label=\"" << r.roles[v].describe() << " (" << r.h.tau(v)
        << ")\"];\n";
  }
  for (const Edge& e : r.g.edges()) {
    out << "  " << e.u + 1 << " -> " << e.v + 1 << " [dir=none];\n";
  }
  for (std::size_t id = 0; id < r.gadgets.size(); ++id) {
    const Gadget& gd = r.gadgets[id];
    out << "  " << gd.tail + 1 << " -> " << gd.head + 1 << " [label=\"D" << id + 1
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tsr
