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
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "tsreconf/errors.hpp"
#include "tsreconf/gap_ratio.hpp"
#include "tsreconf/reconfig.hpp"
#include "tsreconf/reduction.hpp"
#include "tsreconf/threshold_graph.hpp"
#include "tsreconf/tss_solver.hpp"

namespace tsr::cli {
namespace {

constexpr const char* kHeader =
    "schema_version,instance,n,p,tau,ell,seed,m,status,opt_g,opt_h,two_approx,minmax_exact,"
    "approx_ratio";

TauRule parse_rule(const std::string& text) {
  if (text == "uniform") return TauRule::uniform();
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string value = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (kind == "prop" && !value.empty()) return TauRule::proportional(std::stod(value));
    if (kind == "const" && !value.empty()) {
      return TauRule::constant_value(static_cast<Threshold>(std::stoul(value)));
    }
  } catch (const std::logic_error&) {
    // fall through to the diagnostic below
  }
  throw InvalidInput("unknown threshold rule '" + text + "' (uniform, prop:<rho>, const:<c>)");
}

struct Instance {
  std::size_t n;
  double p;
  std::string tau;
  std::size_t ell;
  std::uint64_t seed;
};

std::string na_if_empty(const std::string& s) { return s.empty() ? "NA" : s; }

std::string run_instance(std::size_t index, const Instance& inst, std::size_t limit) {
  const ThresholdGraph g = random_graph(inst.n, inst.p, parse_rule(inst.tau), inst.seed);
  std::string status = "ok";
  std::string opt_g, opt_h, two, exact, ratio;
  try {
    const auto minima = all_min_target_sets(g, limit);
    const VertexSet& x = minima.front();
    const VertexSet& y = minima.back();
    opt_g = std::to_string(x.size());
    const std::size_t approx = two_approx(g, x, y).max_size();
    const std::size_t mm = minmax_exact(g, x, y, limit).value;
    two = std::to_string(approx);
    exact = std::to_string(mm);
    ratio = mm == 0 ? "NA" : to_decimal(Rational(approx, mm), 6);
    try {
      opt_h = std::to_string(restricted_minmax(build_h(g, inst.ell), limit).value);
    } catch (const InstanceTooLarge&) {
      status = "too_large";
    } catch (const InvalidInput&) {
      status = "not_reducible";
    }
  } catch (const InstanceTooLarge&) {
    status = "too_large";
  }
  std::ostringstream row;
  row << kSchemaVersion << ',' << index << ',' << inst.n << ',' << inst.p << ',' << inst.tau
      << ',' << inst.ell << ',' << inst.seed << ',' << g.num_edges() << ',' << status << ','
      << na_if_empty(opt_g) << ',' << na_if_empty(opt_h) << ',' << na_if_empty(two) << ','
      << na_if_empty(exact) << ',' << na_if_empty(ratio);
  return row.str();
}

}  // namespace

std::string bench_csv(const BenchGrid& grid) {
  for (const std::string& t : grid.tau) parse_rule(t);  // reject bad rules before any work

  std::mt19937_64 seeds(grid.seed);
  std::vector<Instance> instances;
  for (std::size_t n : grid.n) {
    for (double p : grid.p) {
      for (const std::string& tau : grid.tau) {
        for (std::size_t ell : grid.ell) {
          for (std::size_t rep = 0; rep < grid.reps; ++rep) {
            instances.push_back({n, p, tau, ell, seeds()});
          }
        }
      }
    }
  }

  // Workers claim instances by index and write into their own slot, so the
  // output order is the grid order whatever the scheduling.
  std::vector<std::string> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        rows[i] = run_instance(i, instances[i], grid.limit);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(grid.threads, 1, 64);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::string csv = std::string(kHeader) + "\n";
  for (const std::string& row : rows) csv += row + "\n";
  return csv;
}

}  // namespace tsr::cli
