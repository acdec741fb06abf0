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

#ifndef AQNN_TOOLS_EXPERIMENTS_HPP
#define AQNN_TOOLS_EXPERIMENTS_HPP

#include <cstdint>
#include <string>

#include "aqnn/serialization.hpp"
#include "csv.hpp"

namespace aqnn::cli {

/// Config: {"experiment": name, "parameters": {...}, "output_path": csv}.
/// `out_override`, when non-empty, replaces output_path. Writes the CSV and
/// returns a summary document. Config errors throw ParseError; failures of
/// individual rows are recorded in the row's error column.
Json run_experiment(const Json& config, const std::string& out_override,
                    std::uint64_t default_seed);

/// The table alone, for callers that handle output themselves.
Table experiment_table(const Json& config, std::uint64_t default_seed, Json& summary);

}  // namespace aqnn::cli

#endif  // AQNN_TOOLS_EXPERIMENTS_HPP
