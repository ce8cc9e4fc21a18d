// Copyright 2026 The primegap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "run_config.hpp"

namespace primegap::cli {

inline constexpr int kOutputSchemaVersion = 1;

/// 17 significant digits, round-trippable.
std::string format_real(double value);

using Cell = std::variant<std::uint64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV: header line then one LF-terminated line per row. JSON: an object with
/// `meta` and `rows`, rows keyed by column name.
void write_table(std::ostream& out, OutputFormat format, const Table& table, const nlohmann::ordered_json& meta);

}  // namespace primegap::cli
