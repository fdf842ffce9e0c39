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

#include <random>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "support/sequences.hpp"
#include "tsreconf/activation.hpp"
#include "tsreconf/errors.hpp"

namespace tsr {
namespace {

using ::testing::HasSubstr;
using testing::path_graph;
using testing::two_k2;

// Seeds H with the restricted-universe mask and simulates it from scratch.
bool h_target_by_simulation(const ReductionOutput& r, Mask restricted) {
  std::vector<char> flags(r.h.n(), 0);
  for (std::size_t v = 0; v < r.restricted_size(); ++v) flags[v] = (restricted >> v) & 1;
  const auto last = testing::naive_rounds(r.h, flags).back();
  return std::all_of(last.begin(), last.end(), [](char c) { return c != 0; });
}

TEST(BuildH, SizesForPathOnTwoVertices) {
  const ReductionOutput r = build_h(path_graph(2, 1), 2);
  // Gadgets: V->X 2*2, X->A 2*2, A->V 2, V->Y 4, Y->B 4, B->V 2.
  EXPECT_EQ(r.gadgets.size(), 20u);
  EXPECT_EQ(r.named_size(), 10u);
  EXPECT_EQ(r.h.n(), 10u + 4 * 20);
  EXPECT_EQ(r.h.num_edges(), 1u + 6 * 20);
  EXPECT_EQ(r.x, (VertexSet{2, 3}));
  EXPECT_EQ(r.y, (VertexSet{4, 5}));
}

TEST(BuildH, ThresholdsAndRoles) {
  const ReductionOutput r = build_h(path_graph(3, 1), 2);
  for (Vertex x : r.x) EXPECT_EQ(r.h.tau(x), 3u);
  for (Vertex y : r.y) EXPECT_EQ(r.h.tau(y), 3u);
  for (Vertex a : r.a) EXPECT_EQ(r.h.tau(a), 2u);
  for (Vertex b : r.b) EXPECT_EQ(r.h.tau(b), 2u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(r.h.tau(v), 1u);
  EXPECT_EQ(r.a_by_vertex[1].size(), 2u);
  for (const Gadget& gd : r.gadgets) {
    EXPECT_EQ(r.h.tau(gd.t()), 1u);
    EXPECT_EQ(r.h.tau(gd.h()), 2u);
    EXPECT_EQ(r.h.tau(gd.internals[2]), 1u);
    EXPECT_EQ(r.h.tau(gd.internals[3]), 1u);
    EXPECT_EQ(r.find_gadget(gd.tail, gd.head), &gd);
    EXPECT_TRUE(r.is_internal(gd.t()));
  }
  EXPECT_EQ(r.roles[0].describe(), "original:1");
  EXPECT_EQ(r.roles[*r.x.begin()].describe(), "x:1");
  EXPECT_EQ(r.roles[r.a_by_vertex[1][1]].describe(), "a:2,2");
  EXPECT_THAT(r.roles[r.gadgets[0].h()].describe(), HasSubstr(":h"));
}

TEST(BuildH, EndpointsAreTargetSets) {
  for (const ThresholdGraph& g : {path_graph(2, 1), path_graph(4, 1), testing::triangle(2), two_k2(1)}) {
    for (std::size_t ell : {1u, 2u, 3u}) {
      const ReductionOutput r = build_h(g, ell);
      EXPECT_TRUE(is_target_set(r.h, r.x));
      EXPECT_TRUE(is_target_set(r.h, r.y));
    }
  }
}

TEST(BuildH, Rejections) {
  EXPECT_THROW(build_h(path_graph(2, 1), 0), InvalidInput);
  EXPECT_THROW(build_h(testing::make_graph(3, {{0, 1}}, {1, 1, 1}), 2), InvalidInput);
  EXPECT_THROW(build_h(testing::make_graph(2, {{0, 1}}, {2, 1}), 2), InvalidInput);
}

TEST(BuildH, GadgetIsOneWayInsideH) {
  const ReductionOutput r = build_h(path_graph(2, 1), 2);
  // Heads in X or Y cannot push activity back: tau(x) = n and tau(a) = ell
  // keep a single head from reaching anything past its own out-gadgets.
  for (const Gadget& gd : r.gadgets) {
    if (gd.family != GadgetFamily::kVtoX && gd.family != GadgetFamily::kVtoY) continue;
    const VertexSet from_head = active_set(r.h, VertexSet{gd.head});
    EXPECT_FALSE(from_head.contains(gd.h()));
    EXPECT_FALSE(from_head.contains(gd.t()));
    EXPECT_FALSE(from_head.contains(gd.tail));
  }
  // An x vertex alone reaches its X->A gadgets but not past tau(a) = ell.
  const VertexSet from_x = active_set(r.h, VertexSet{*r.x.begin()});
  for (Vertex a : r.a) EXPECT_FALSE(from_x.contains(a));
}

TEST(CanonicalSequence, ValidAndSized) {
  const ReductionOutput r = build_h(path_graph(2, 1), 2);
  const ReconfigSequence seq = canonical_sequence(r, VertexSet{0});
  EXPECT_TRUE(validate_sequence(r.h, seq, r.x, r.y).valid);
  EXPECT_EQ(seq.max_size(), 1u + 2);
  const ReconfigSequence full = canonical_sequence(r, VertexSet{0, 1});
  EXPECT_TRUE(validate_sequence(r.h, full, r.x, r.y).valid);
  EXPECT_EQ(full.max_size(), 2u + 2);
  EXPECT_THROW(canonical_sequence(r, VertexSet{}), InvalidInput);
}

TEST(CollapseAb, MergesAVerticesIntoTheirOriginal) {
  const ReductionOutput r = build_h(path_graph(3, 1), 2);
  const Vertex a11 = r.a_by_vertex[1][0];
  const Vertex a12 = r.a_by_vertex[1][1];
  const ReconfigSequence canonical = canonical_sequence(r, VertexSet{1});
  ASSERT_EQ(canonical.sets[1], r.x.with(1));
  // Detour through a(2, 1) and a(2, 2) before settling on X + {v2}.
  ReconfigSequence seq{{r.x, r.x.with(a11), r.x.with(a11).with(a12),
                        r.x.with(a11).with(a12).with(1), r.x.with(a12).with(1)}};
  seq.sets.insert(seq.sets.end(), canonical.sets.begin() + 1, canonical.sets.end());
  ASSERT_TRUE(validate_sequence(r.h, seq, r.x, r.y).valid);
  EXPECT_EQ(collapse_ab(r, seq), canonical);
}

TEST(CollapseAb, RejectsGadgetInternalsAndInvalidSequences) {
  const ReductionOutput r = build_h(path_graph(2, 1), 1);
  const Vertex t = r.gadgets[0].t();
  EXPECT_THROW(collapse_ab(r, {{r.x, r.x.with(t)}}), InvalidInput);
  EXPECT_THROW(collapse_ab(r, {{r.x, VertexSet{}}}), InvalidInput);
}

TEST(CollapseGadgets, ReplacesInternalsByTail) {
  const ReductionOutput r = build_h(path_graph(2, 1), 1);
  const Gadget* gd = r.find_gadget(0, *r.x.begin());
  ASSERT_NE(gd, nullptr);
  const ReconfigSequence canonical = canonical_sequence(r, VertexSet{0});
  ReconfigSequence seq{{r.x, r.x.with(gd->h()), r.x.with(gd->h()).with(gd->t()),
                        r.x.with(gd->t()), r.x.with(gd->t()).with(0)}};
  seq.sets.insert(seq.sets.end(), canonical.sets.begin() + 1, canonical.sets.end());
  ASSERT_TRUE(validate_sequence(r.h, seq, r.x, r.y).valid);
  EXPECT_EQ(collapse_gadgets(r, seq), canonical);
  EXPECT_THROW(collapse_gadgets(r, {{VertexSet{}}}), InvalidInput);
}

TEST(ExpandAb, Examples) {
  const ReductionOutput r = build_h(path_graph(3, 1), 2);
  EXPECT_EQ(expand_ab(r, r.x), r.x);
  const VertexSet e = expand_ab(r, VertexSet{1});
  EXPECT_EQ(e.size(), 1u + 2 + 2);
  EXPECT_TRUE(VertexSet(r.a_by_vertex[1]).is_subset_of(e));
  EXPECT_TRUE(VertexSet(r.b_by_vertex[1]).is_subset_of(e));
  EXPECT_THROW(expand_ab(r, VertexSet{r.a_by_vertex[0][0]}), InvalidInput);
}

TEST(ExpandAb, KeepsRestrictedPartAndTargetness) {
  const ReductionOutput r = build_h(path_graph(3, 1), 2);
  const VertexSet restricted = VertexSet::range(0, static_cast<Vertex>(r.restricted_size()));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const VertexSet s = testing::random_subset(r.restricted_size(), rng);
    const VertexSet e = expand_ab(r, s);
    EXPECT_EQ(e.intersected(restricted), s);
    std::size_t extra = 0;
    for (Vertex v : s) extra += v < r.n() ? 2 * r.g.degree(v) : 0;
    EXPECT_EQ(e.size(), s.size() + extra);
    EXPECT_EQ(is_target_set(r.h, e), is_target_restricted(r, s));
  }
}

TEST(IsTargetRestricted, AgreesWithSimulationOnH) {
  for (const ThresholdGraph& g : {path_graph(2, 1), path_graph(3, 1), two_k2(1)}) {
    const ReductionOutput r = build_h(g, 2);
    const std::size_t u = r.restricted_size();
    for (Mask m = 0; m < (Mask{1} << u); ++m) {
      ASSERT_EQ(is_target_restricted(r, VertexSet::from_mask(m)), h_target_by_simulation(r, m))
          << VertexSet::from_mask(m);
    }
  }
}

TEST(IsTargetRestricted, SingleXAndYIsNotEnough) {
  const ReductionOutput r = build_h(path_graph(2, 1), 2);
  const VertexSet s{*r.x.begin(), *r.y.begin()};
  EXPECT_FALSE(is_target_restricted(r, s));
  EXPECT_FALSE(is_target_set(r.h, s));
}

TEST(Classify, FourClasses) {
  const ReductionOutput r = build_h(path_graph(2, 1), 2);
  EXPECT_EQ(classify(r, r.x), SetClass::kC1);
  EXPECT_EQ(classify(r, r.y.with(0)), SetClass::kC2);
  EXPECT_EQ(classify(r, VertexSet{0}), SetClass::kC3);
  EXPECT_EQ(classify(r, r.x.united(r.y)), SetClass::kXY);
  EXPECT_STREQ(to_string(SetClass::kC3), "C3");
}

TEST(RestrictedMinmax, PathOnTwoVertices) {
  const ReductionOutput r = build_h(path_graph(2, 1), 2);
  const std::size_t oracle = testing::bottleneck_minmax(
      r.restricted_size(), r.x.to_mask(), r.y.to_mask(),
      [&](Mask m) { return h_target_by_simulation(r, m); });
  ASSERT_EQ(oracle, 3u);
  const RestrictedMinmax mm = restricted_minmax(r);
  EXPECT_EQ(mm.value, 3u);
  EXPECT_TRUE(validate_sequence(r.h, mm.witness, r.x, r.y).valid);
  EXPECT_EQ(mm.witness.max_size(), 3u);
}

TEST(RestrictedMinmax, TwoDisjointEdges) {
  const ReductionOutput r = build_h(two_k2(1), 2);
  const std::size_t oracle = testing::bottleneck_minmax(
      r.restricted_size(), r.x.to_mask(), r.y.to_mask(),
      [&](Mask m) { return h_target_by_simulation(r, m); });
  ASSERT_EQ(oracle, 4u);
  EXPECT_EQ(restricted_minmax(r).value, 4u);
}

TEST(RestrictedMinmax, MatchesSearchOverAllOfH) {
  const ReductionOutput r = build_h(path_graph(2, 1), 1);
  ASSERT_LE(r.h.n(), 64u);
  const MinmaxReport full = minmax_exact(r.h, r.x, r.y, 64);
  EXPECT_EQ(full.value, 2u);
  EXPECT_EQ(restricted_minmax(r).value, full.value);
}

TEST(RestrictedMinmax, RespectsLimit) {
  const ReductionOutput r = build_h(path_graph(6, 1), 10);
  EXPECT_THROW(restricted_minmax(r), InstanceTooLarge);
}

TEST(Projections, RandomPaddedWalksCollapseToValidSequences) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    ThresholdGraph g = random_graph(n, 0.7, TauRule::uniform(), rng());
    if (g.has_isolated_vertex()) continue;
    const ReductionOutput r = build_h(g, 1 + rng() % 3);
    const ReconfigSequence walk = testing::random_restricted_walk(r, rng, 20);
    ASSERT_TRUE(validate_sequence(r.h, walk, r.x, r.y).valid);
    const ReconfigSequence padded = testing::pad_walk(r, walk, rng);
    ASSERT_TRUE(validate_sequence(r.h, padded, r.x, r.y).valid);

    const ReconfigSequence s1 = collapse_gadgets(r, padded);
    const SequenceVerdict v1 = validate_sequence(r.h, s1, r.x, r.y);
    EXPECT_TRUE(v1.valid) << v1.reason;
    EXPECT_LE(s1.max_size(), padded.max_size());
    for (const VertexSet& s : s1.sets) {
      for (Vertex v : s) EXPECT_FALSE(r.is_internal(v));
    }

    const ReconfigSequence s2 = collapse_ab(r, s1);
    const SequenceVerdict v2 = validate_sequence(r.h, s2, r.x, r.y);
    EXPECT_TRUE(v2.valid) << v2.reason;
    EXPECT_LE(s2.max_size(), s1.max_size());
    for (const VertexSet& s : s2.sets) EXPECT_LE(s.bound(), r.restricted_size());
  }
}

TEST(VerifyReduction, PathOnTwoVertices) {
  const VerificationReport rep = verify_reduction(path_graph(2, 1), 2, 1, 1);
  EXPECT_EQ(rep.opt_g, 1u);
  EXPECT_EQ(rep.opt_h, 3u);
  EXPECT_TRUE(rep.completeness.triggered);
  EXPECT_TRUE(rep.completeness.holds);
  EXPECT_FALSE(rep.soundness.triggered);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.h_vertices, 90u);
  EXPECT_EQ(rep.named_vertices, 10u);
  EXPECT_EQ(rep.quadratic_reference, 4u + 2);
  EXPECT_FALSE(rep.witness_has_xy);
  EXPECT_TRUE(rep.witness_has_c3);
}

TEST(VerifyReduction, SoundnessSide) {
  // opt(2K2, tau = 1) = 2 > k_s = 1.
  const VerificationReport rep = verify_reduction(two_k2(1), 2, 1, 1);
  EXPECT_EQ(rep.opt_g, 2u);
  EXPECT_TRUE(rep.soundness.triggered);
  EXPECT_TRUE(rep.soundness.holds);
  EXPECT_GT(rep.opt_h, rep.k_s + rep.ell);
}

TEST(VerifyReduction, ParameterErrors) {
  EXPECT_THROW(verify_reduction(path_graph(2, 1), 1, 1, 1), InvalidInput);
  EXPECT_THROW(verify_reduction(path_graph(2, 1), 3, 2, 1), InvalidInput);
}

TEST(ToDot, DrawsGadgetsAsArrows) {
  const std::string dot = to_dot(build_h(path_graph(2, 1), 1));
  EXPECT_THAT(dot, HasSubstr("digraph"));
  EXPECT_THAT(dot, HasSubstr("D1"));
}

}  // namespace
}  // namespace tsr
