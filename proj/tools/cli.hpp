// Copyright 2026 The fairdec Authors
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

#ifndef FAIRDEC_TOOLS_CLI_HPP_
#define FAIRDEC_TOOLS_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fairdec/io.hpp"

namespace fairdec::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kValidation = 2,
  kCapExceeded = 3,
  kDegenerate = 4,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker threads allowed by FAIRDEC_THREADS, else the hardware concurrency.
unsigned worker_count();

struct BenchConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t n = 3;
  std::size_t m = 5;
  std::size_t k = 2;
  std::int64_t umax = 5;
  std::uint64_t cap = 10'000'000;
  unsigned threads = 1;
};

/// Audits round robin, leximin and MNW on `trials` random public instances.
/// Trial t draws its instance from a generator seeded with (seed, t), so the
/// table does not depend on the thread count.
std::vector<BenchRow> run_bench(const BenchConfig& config);

}  // namespace fairdec::cli

#endif  // FAIRDEC_TOOLS_CLI_HPP_
