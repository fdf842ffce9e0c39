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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "tsreconf/activation.hpp"
#include "tsreconf/errors.hpp"
#include "tsreconf/gap_ratio.hpp"
#include "tsreconf/reconfig.hpp"
#include "tsreconf/reduction.hpp"
#include "tsreconf/threshold_graph.hpp"
#include "tsreconf/tss_solver.hpp"

namespace tsr::cli {
namespace {

class Checker {
 public:
  explicit Checker(SelftestResult& res) : res_(res) {}

  void set_scope(std::string scope) { scope_ = std::move(scope); }

  void expect(bool ok, const std::string& what) {
    ++res_.checks;
    if (!ok) res_.failures.push_back(scope_ + ": " + what);
  }

 private:
  SelftestResult& res_;
  std::string scope_;
};

bool reducible(const ThresholdGraph& g) {
  if (g.has_isolated_vertex()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.tau(v) > g.degree(v)) return false;
  }
  return true;
}

void check_activation(Checker& c, const ThresholdGraph& g) {
  std::vector<VertexSet> seeds;
  if (g.n() <= 10) {
    for (Mask m = 0; m < (Mask{1} << g.n()); ++m) seeds.push_back(VertexSet::from_mask(m));
  } else {
    std::mt19937_64 rng(g.n());
    for (int i = 0; i < 256; ++i) {
      std::vector<Vertex> ids;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (rng() & 1) ids.push_back(v);
      }
      seeds.emplace_back(std::move(ids));
    }
  }
  Activator act(g);
  bool monotone = true, bounded = true, agrees = true;
  for (const VertexSet& s : seeds) {
    const ActivationTrace t = closure(g, s);
    bounded = bounded && t.converged_at <= g.n() && t.steps.size() == t.converged_at + 2;
    for (std::size_t i = 1; i < t.steps.size(); ++i) {
      monotone = monotone && t.steps[i - 1].is_subset_of(t.steps[i]);
    }
    std::vector<Vertex> ids(s.begin(), s.end());
    agrees = agrees && act.run(ids) == t.final_set().size() && step(g, t.final_set()) == t.final_set();
  }
  c.expect(monotone, "activation rounds are nested");
  c.expect(bounded, "closure converges within n rounds");
  c.expect(agrees, "closure is a fixpoint and matches the counting activator");
}

void check_solver_and_reconfig(Checker& c, const ThresholdGraph& g, std::size_t limit,
                               std::size_t& opt_out) {
  const TssResult opt = min_target_set_exact(g, limit);
  opt_out = opt.size;
  c.expect(is_target_set(g, opt.witness), "exact witness is a target set");
  bool minimal = true;
  for (Vertex v : opt.witness) minimal = minimal && !is_target_set(g, opt.witness.without(v));
  c.expect(minimal, "exact witness is inclusion-minimal");
  c.expect(min_target_set_greedy(g).size() >= opt.size, "greedy never beats exact");

  const auto minima = all_min_target_sets(g, limit);
  bool all_ok = !minima.empty();
  for (const VertexSet& s : minima) all_ok = all_ok && s.size() == opt.size && is_target_set(g, s);
  c.expect(all_ok, "every listed minimum target set has size opt(G)");

  const VertexSet& x = minima.front();
  const VertexSet& y = minima.back();
  const MinmaxReport mm = minmax_exact(g, x, y, limit);
  const ReconfigSequence approx = two_approx(g, x, y);
  c.expect(validate_sequence(g, mm.witness, x, y).valid, "minmax witness is valid");
  c.expect(validate_sequence(g, approx, x, y).valid, "two_approx sequence is valid");
  c.expect(mm.value >= std::max(x.size(), y.size()), "minmax >= max(|X|, |Y|)");
  c.expect(mm.value <= approx.max_size(), "minmax <= |X u Y|");
  c.expect(approx.max_size() <= 2 * mm.value, "two_approx within factor 2");
}

void check_reduction(Checker& c, const ThresholdGraph& g, std::size_t opt, std::size_t limit) {
  for (std::size_t ell = 1; ell <= 2; ++ell) {
    const ReductionOutput r = build_h(g, ell);
    c.expect(is_target_set(r.h, r.x) && is_target_set(r.h, r.y), "X and Y are target sets of H");
    for (const VertexSet& s : all_min_target_sets(g, limit)) {
      const ReconfigSequence seq = canonical_sequence(r, s);
      c.expect(validate_sequence(r.h, seq, r.x, r.y).valid && seq.max_size() == opt + ell,
               "canonical sequence is valid with size opt(G) + ell");
    }
    if (r.restricted_size() <= 12) {
      bool agree = true;
      for (Mask m = 0; m < (Mask{1} << r.restricted_size()); ++m) {
        const VertexSet s = VertexSet::from_mask(m);
        agree = agree && is_target_restricted(r, s) == is_target_set(r.h, s);
      }
      c.expect(agree, "restricted target test agrees with simulation on H");
    }
  }
  if (g.n() + 2 * (opt + 1) <= std::min<std::size_t>(limit, 20)) {
    const VerificationReport rep = verify_reduction(g, opt + 1, opt, opt, limit);
    c.expect(rep.ok(), "completeness and soundness at k_c = k_s = opt(G)");
  }
}

void check_gap_arithmetic(Checker& c) {
  Rational prev = 0;
  for (int k = 1; k <= 20; ++k) {
    const GapRatio r = gap_ratio(std::uint64_t{1} << k);
    // N = 2 is degenerate (k_s = k_c), so only >= 1 is asked of it.
    c.expect(k == 1 ? r.ratio >= 1 : r.ratio > 1, "ratio above 1 at k = " + std::to_string(k));
    c.expect(r.ratio < 2, "ratio below 2 at k = " + std::to_string(k));
    c.expect(r.lower_bound <= r.ratio, "closed-form bound at k = " + std::to_string(k));
    c.expect(r.ratio >= prev, "ratio monotone at k = " + std::to_string(k));
    prev = r.ratio;
  }
}

}  // namespace

SelftestResult selftest(const std::string& data_dir, std::size_t limit) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(data_dir)) throw InvalidInput("corpus directory not found: " + data_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(data_dir)) {
    if (entry.path().extension() == ".tss") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidInput("no .tss files in " + data_dir);

  SelftestResult res;
  Checker c(res);
  for (const fs::path& file : files) {
    const std::string name = file.filename().string();
    c.set_scope(name);
    const std::size_t before = res.checks;
    try {
      std::ifstream in(file);
      const ThresholdGraph g = parse_graph(in);
      c.expect(parse_graph(serialize_graph(g)) == g, "serialization round-trips");
      check_activation(c, g);
      std::size_t opt = 0;
      check_solver_and_reconfig(c, g, limit, opt);
      if (reducible(g)) check_reduction(c, g, opt, limit);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected error: ") + e.what());
    }
    res.log.push_back("checked " + name + " (" + std::to_string(res.checks - before) +
                      " checks)");
  }
  c.set_scope("gap-ratio");
  check_gap_arithmetic(c);
  res.log.push_back("checked gap arithmetic for N = 2^1 .. 2^20");
  return res;
}

}  // namespace tsr::cli
