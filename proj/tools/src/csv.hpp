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

#ifndef AQNN_TOOLS_CSV_HPP
#define AQNN_TOOLS_CSV_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace aqnn::cli {

/// An empty cell is written as nothing between the delimiters.
using Cell = std::variant<std::monostate, double, long, bool, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest locale-independent form with 12 significant digits.
std::string format_number(double x);
std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Table& table);

}  // namespace aqnn::cli

#endif  // AQNN_TOOLS_CSV_HPP
