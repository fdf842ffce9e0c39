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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsreconf/activation.hpp"
#include "tsreconf/errors.hpp"
#include "tsreconf/gap_ratio.hpp"
#include "tsreconf/reconfig.hpp"
#include "tsreconf/reduction.hpp"
#include "tsreconf/threshold_graph.hpp"
#include "tsreconf/tss_solver.hpp"

#ifndef TSR_DEFAULT_DATA_DIR
#define TSR_DEFAULT_DATA_DIR "data"
#endif

namespace tsr::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ThresholdGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

VertexSet load_set(const std::string& path, std::size_t n) {
  return parse_vertex_set(read_file(path), n);
}

std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(dir) / path).string();
}

void write_file(const std::string& path, const std::string& text) {
  const std::string resolved = resolve_output(path);
  std::ofstream out(resolved);
  if (!out) throw InvalidInput("cannot write " + resolved);
  out << text;
}

Json ids_json(const VertexSet& s) {
  Json arr = Json::array();
  for (Vertex v : s) arr.push_back(v + 1);
  return arr;
}

Json sequence_json(const ReconfigSequence& seq) {
  Json arr = Json::array();
  for (const VertexSet& s : seq.sets) arr.push_back(ids_json(s));
  return arr;
}

Json envelope(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

std::string sequence_text(const ReconfigSequence& seq) {
  std::ostringstream os;
  for (const VertexSet& s : seq.sets) os << s.encode() << '\n';
  return os.str();
}

// Shared state for one invocation; subcommand callbacks fill `report` and
// `status`, and run() decides where the report goes.
struct Invocation {
  std::uint64_t seed = 1;
  std::size_t limit = kDefaultExactLimit;
  bool json = false;
  std::string out_path;
  std::string report;
  int status = kOk;
};

void add_check_target(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("check-target", "Decide whether a seed set activates every vertex");
  auto graph = std::make_shared<std::string>();
  auto set = std::make_shared<std::string>();
  cmd->add_option("graph", *graph, "Graph file")->required();
  cmd->add_option("set", *set, "Seed set file")->required();
  cmd->callback([&inv, graph, set] {
    const ThresholdGraph g = load_graph(*graph);
    const ActivationTrace trace = closure(g, load_set(*set, g.n()));
    const bool target = trace.final_set().size() == g.n();
    if (inv.json) {
      Json j = envelope("check-target");
      j["target"] = target;
      j["converged_at"] = trace.converged_at;
      j["active"] = trace.final_set().size();
      j["n"] = g.n();
      inv.report = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << (target ? "TARGET" : "NOT-TARGET") << " active " << trace.final_set().size() << "/"
         << g.n() << " converged_at " << trace.converged_at << "\n";
      inv.report = os.str();
    }
  });
}

void add_trace(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("trace", "Print every activation round as a JSON array");
  auto graph = std::make_shared<std::string>();
  auto set = std::make_shared<std::string>();
  cmd->add_option("graph", *graph, "Graph file")->required();
  cmd->add_option("set", *set, "Seed set file")->required();
  cmd->callback([&inv, graph, set] {
    const ThresholdGraph g = load_graph(*graph);
    const ActivationTrace trace = closure(g, load_set(*set, g.n()));
    Json steps = Json::array();
    for (const VertexSet& s : trace.steps) steps.push_back(ids_json(s));
    if (inv.json) {
      Json j = envelope("trace");
      j["converged_at"] = trace.converged_at;
      j["steps"] = steps;
      inv.report = j.dump(2) + "\n";
    } else {
      inv.report = steps.dump() + "\n";
    }
  });
}

void add_solve_tss(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("solve-tss", "Find a minimum (or greedy) target set");
  auto graph = std::make_shared<std::string>();
  auto greedy = std::make_shared<bool>(false);
  cmd->add_option("graph", *graph, "Graph file")->required();
  auto* exact_flag = cmd->add_flag("--exact", "Exhaustive search (default)");
  cmd->add_flag("--greedy", *greedy, "Largest-closure-first heuristic")->excludes(exact_flag);
  cmd->callback([&inv, graph, greedy] {
    const ThresholdGraph g = load_graph(*graph);
    const VertexSet witness =
        *greedy ? min_target_set_greedy(g) : min_target_set_exact(g, inv.limit).witness;
    if (inv.json) {
      Json j = envelope("solve-tss");
      j["method"] = *greedy ? "greedy" : "exact";
      j["size"] = witness.size();
      j["witness"] = ids_json(witness);
      inv.report = j.dump(2) + "\n";
    } else {
      inv.report = "size " + std::to_string(witness.size()) + "\n" + witness.encode() + "\n";
    }
  });
}

void add_reconfig(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("reconfig", "Reconfigure target set X into Y");
  struct Args {
    std::string graph, x, y;
    bool approx = false;
    std::optional<std::size_t> cap;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("graph", a->graph, "Graph file")->required();
  cmd->add_option("X", a->x, "Source set file")->required();
  cmd->add_option("Y", a->y, "Destination set file")->required();
  auto* exact_flag = cmd->add_flag("--exact", "Exact minmax by capped search (default)");
  auto* approx_flag =
      cmd->add_flag("--approx", a->approx, "X -> X u Y -> Y")->excludes(exact_flag);
  cmd->add_option("--cap", a->cap, "Only decide reachability under this size")
      ->excludes(exact_flag)
      ->excludes(approx_flag);
  cmd->callback([&inv, a] {
    const ThresholdGraph g = load_graph(a->graph);
    const VertexSet x = load_set(a->x, g.n());
    const VertexSet y = load_set(a->y, g.n());
    Json j = envelope("reconfig");
    std::ostringstream text;
    if (a->cap) {
      const CapReport rep = search_under_cap(g, x, y, *a->cap, inv.limit);
      j["method"] = "cap";
      j["cap"] = rep.cap;
      j["reachable"] = rep.reachable;
      j["states_explored"] = rep.states_explored;
      j["witness"] = rep.witness ? sequence_json(*rep.witness) : Json(nullptr);
      text << (rep.reachable ? "REACHABLE" : "UNREACHABLE") << " cap " << rep.cap << "\n";
      if (rep.witness) text << sequence_text(*rep.witness);
    } else if (a->approx) {
      const ReconfigSequence seq = two_approx(g, x, y);
      j["method"] = "approx";
      j["value"] = seq.max_size();
      j["witness"] = sequence_json(seq);
      text << "size " << seq.max_size() << "\n" << sequence_text(seq);
    } else {
      const MinmaxReport rep = minmax_exact(g, x, y, inv.limit);
      j["method"] = "exact";
      j["value"] = rep.value;
      j["cap_tried"] = rep.cap_tried;
      j["states_explored"] = rep.states_explored;
      j["witness"] = sequence_json(rep.witness);
      text << "size " << rep.value << "\n" << sequence_text(rep.witness);
    }
    inv.report = inv.json ? j.dump(2) + "\n" : text.str();
  });
}

Json roles_json(const ReductionOutput& r) {
  Json j = envelope("roles");
  j["n"] = r.n();
  j["ell"] = r.ell;
  j["h_vertices"] = r.h.n();
  j["x"] = ids_json(r.x);
  j["y"] = ids_json(r.y);
  Json roles = Json::array();
  for (std::size_t v = 0; v < r.roles.size(); ++v) roles.push_back(r.roles[v].describe());
  j["roles"] = roles;
  return j;
}

void add_reduce(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("reduce", "Build the reconfiguration instance (H; X, Y)");
  struct Args {
    std::string graph, roles, dot;
    std::size_t ell = 0;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("graph", a->graph, "Graph file")->required();
  cmd->add_option("--ell", a->ell, "Size of X and Y")->required();
  cmd->add_option("--roles", a->roles, "Write the vertex roles of H as JSON here");
  cmd->add_option("--dot", a->dot, "Write a Graphviz rendering here");
  cmd->callback([&inv, a] {
    const ReductionOutput r = build_h(load_graph(a->graph), a->ell);
    if (!a->roles.empty()) write_file(a->roles, roles_json(r).dump(2) + "\n");
    if (!a->dot.empty()) write_file(a->dot, to_dot(r));
    if (inv.json) {
      Json j = envelope("reduce");
      j["h_vertices"] = r.h.n();
      j["h_edges"] = r.h.num_edges();
      j["gadgets"] = r.gadgets.size();
      j["x"] = ids_json(r.x);
      j["y"] = ids_json(r.y);
      j["graph"] = serialize_graph(r.h);
      inv.report = j.dump(2) + "\n";
    } else {
      inv.report = serialize_graph(r.h);
    }
  });
}

Json verification_json(const VerificationReport& rep) {
  Json j = envelope("verify-reduction");
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["ell"] = rep.ell;
  j["k_c"] = rep.k_c;
  j["k_s"] = rep.k_s;
  j["opt_g"] = rep.opt_g;
  j["opt_g_witness"] = ids_json(rep.opt_g_witness);
  j["opt_h"] = rep.opt_h;
  j["opt_h_witness"] = sequence_json(rep.opt_h_witness);
  j["states_explored"] = rep.states_explored;
  j["h_vertices"] = rep.h_vertices;
  j["h_edges"] = rep.h_edges;
  j["named_vertices"] = rep.named_vertices;
  j["gadgets"] = rep.gadgets;
  j["quadratic_reference"] = rep.quadratic_reference;
  j["soundness_hypothesis"] = rep.soundness_hypothesis;
  j["completeness"] = {{"triggered", rep.completeness.triggered},
                       {"holds", rep.completeness.holds}};
  j["soundness"] = {{"triggered", rep.soundness.triggered}, {"holds", rep.soundness.holds}};
  j["witness_has_xy"] = rep.witness_has_xy;
  j["witness_has_c3"] = rep.witness_has_c3;
  j["ok"] = rep.ok();
  return j;
}

void add_verify_reduction(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("verify-reduction",
                                 "Check completeness and soundness on one small instance");
  struct Args {
    std::string graph;
    std::size_t ell = 0, kc = 0, ks = 0;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("graph", a->graph, "Graph file")->required();
  cmd->add_option("--ell", a->ell, "Size of X and Y")->required();
  cmd->add_option("--kc", a->kc, "Completeness threshold")->required();
  cmd->add_option("--ks", a->ks, "Soundness threshold")->required();
  cmd->callback([&inv, a] {
    const VerificationReport rep =
        verify_reduction(load_graph(a->graph), a->ell, a->kc, a->ks, inv.limit);
    inv.report = verification_json(rep).dump(2) + "\n";
    if (!rep.ok()) inv.status = kInvariantViolation;
  });
}

void add_gap_ratio(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("gap-ratio", "Evaluate the gap ratio for a Label Cover size");
  auto n = std::make_shared<std::uint64_t>(0);
  cmd->add_option("--n", *n, "Number of Label Cover vertices (>= 2)")->required();
  cmd->callback([&inv, n] {
    const GapRatio r = gap_ratio(*n);
    if (inv.json) {
      Json j = envelope("gap-ratio");
      j["n"] = r.n_labelcover;
      j["exponent"] = r.exponent;
      j["g"] = r.g.str();
      j["k_c"] = to_string(r.k_c);
      j["k_s"] = to_string(r.k_s);
      j["ell"] = r.ell.str();
      j["ratio"] = to_string(r.ratio);
      j["ratio_decimal"] = to_decimal(r.ratio);
      j["lower_bound"] = to_string(r.lower_bound);
      j["lower_bound_decimal"] = to_decimal(r.lower_bound);
      inv.report = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "N " << r.n_labelcover << "\ng " << r.g << "\nk_s " << to_string(r.k_s) << "\nell "
         << r.ell << "\nratio " << to_string(r.ratio) << " = " << to_decimal(r.ratio)
         << "\nlower_bound " << to_string(r.lower_bound) << " = " << to_decimal(r.lower_bound)
         << "\n";
      inv.report = os.str();
    }
  });
}

void add_bench(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("bench", "Sweep random instances and emit CSV");
  auto grid = std::make_shared<BenchGrid>();
  cmd->add_option("--grid-n", grid->n, "Vertex counts")->delimiter(',')->capture_default_str();
  cmd->add_option("--grid-p", grid->p, "Edge probabilities")->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--grid-tau", grid->tau, "Threshold rules: uniform, prop:<rho>, const:<c>")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--grid-ell", grid->ell, "Values of ell")->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--reps", grid->reps, "Instances per grid point")->capture_default_str();
  cmd->add_option("--threads", grid->threads, "Worker threads")->capture_default_str();
  cmd->callback([&inv, grid] {
    grid->seed = inv.seed;
    grid->limit = inv.limit;
    inv.report = bench_csv(*grid);
  });
}

void add_selftest(CLI::App& app, Invocation& inv) {
  auto* cmd = app.add_subcommand("selftest", "Run the invariant suite on the bundled corpus");
  auto dir = std::make_shared<std::string>(TSR_DEFAULT_DATA_DIR);
  cmd->add_option("--data", *dir, "Corpus directory")->capture_default_str();
  cmd->callback([&inv, dir] {
    const SelftestResult res = selftest(*dir, inv.limit);
    std::ostringstream os;
    for (const std::string& line : res.log) os << line << '\n';
    for (const std::string& f : res.failures) os << "FAIL " << f << '\n';
    os << (res.failures.empty() ? "selftest passed" : "selftest FAILED") << ": " << res.checks
       << " checks, " << res.failures.size() << " failures\n";
    inv.report = os.str();
    if (!res.failures.empty()) inv.status = kInvariantViolation;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Target set selection and minmax target set reconfiguration", "tsreconf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", inv.seed, "Base seed for randomized commands")->capture_default_str();
  app.add_option("--limit-n", inv.limit, "Largest universe for exhaustive searches (<= 64)")
      ->capture_default_str();
  app.add_flag("--json", inv.json, "Machine-readable output");
  app.add_option("--out", inv.out_path, "Write the report here instead of stdout");

  add_check_target(app, inv);
  add_trace(app, inv);
  add_solve_tss(app, inv);
  add_reconfig(app, inv);
  add_reduce(app, inv);
  add_verify_reduction(app, inv);
  add_gap_ratio(app, inv);
  add_bench(app, inv);
  add_selftest(app, inv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (inv.out_path.empty()) {
      out << inv.report;
    } else {
      write_file(inv.out_path, inv.report);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return inv.status;
}

}  // namespace tsr::cli
