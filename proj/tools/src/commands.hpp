// Copyright 2026 The aqnn Authors
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

#ifndef AQNN_TOOLS_COMMANDS_HPP
#define AQNN_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqnn/errors.hpp"
#include "aqnn/serialization.hpp"

namespace aqnn::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kDimension = 3,
  kNotCptp = 4,
  kInfeasible = 5,
  kSolver = 6,
};

int exit_code_for(ErrorCode code);

struct Options {
  std::vector<std::string> specs;
  std::string state;
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  int iterations = 1;
  std::string method;
  int trials = 0;
  long budget = 10'000;
};

Json read_json_file(const std::string& path);
/// Writes to `path`, or to stdout when it is empty.
void emit(const Json& doc, const std::string& path);

int cmd_apply(const Options& o);
int cmd_iterate(const Options& o);
int cmd_choi(const Options& o);
int cmd_cptp_check(const Options& o);
int cmd_classify(const Options& o);
int cmd_dilate(const Options& o);
int cmd_diamond(const Options& o);
int cmd_experiment(const Options& o);

}  // namespace aqnn::cli

#endif  // AQNN_TOOLS_COMMANDS_HPP
