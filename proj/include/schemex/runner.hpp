// Copyright 2026 The scheme-explorer Authors
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

// Executes scripts statement by statement and renders the report.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "schemex/dsl.hpp"

namespace schemex {

struct RunOptions {
  bool json = false;
  long bound = 10;          // default --bound of spec queries
  std::uint64_t seed = 1;   // default --seed of randomized queries
};

struct RunResult {
  int exit_code = 0;   // 0 ok, 1 some query failed, 2 the script did not parse
  std::string output;  // the rendered report, or the syntax error
};

RunResult run_script(std::string_view source, const RunOptions& options);

}  // namespace schemex
