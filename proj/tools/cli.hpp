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

// The tsreconf command-line front end, kept callable in-process so tests can
// drive it without spawning a shell.

#ifndef TSRECONF_TOOLS_CLI_HPP_
#define TSRECONF_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsr::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kTooLarge = 2,
  kInvariantViolation = 3,
};

// Bumped whenever a JSON field or CSV column changes meaning.
inline constexpr int kSchemaVersion = 1;

// Relative --out, --roles and --dot paths resolve against this variable
// when it is set.
inline constexpr const char* kOutputDirEnv = "TSR_OUTPUT_DIR";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One row per grid point and repetition; rows come back in grid order no
// matter how many workers ran them.
struct BenchGrid {
  std::vector<std::size_t> n{6, 8};
  std::vector<double> p{0.3, 0.5};
  std::vector<std::string> tau{"uniform", "prop:0.5"};
  std::vector<std::size_t> ell{1, 2};
  std::size_t reps = 2;
  std::uint64_t seed = 1;
  std::size_t limit = 24;
  std::size_t threads = 1;
};

std::string bench_csv(const BenchGrid& grid);

struct SelftestResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> log;
};

// Runs the invariant suite over every *.tss file in data_dir plus built-in
// arithmetic checks.
SelftestResult selftest(const std::string& data_dir, std::size_t limit);

}  // namespace tsr::cli

#endif  // TSRECONF_TOOLS_CLI_HPP_
