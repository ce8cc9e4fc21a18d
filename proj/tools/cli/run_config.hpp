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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primegap/andrica.hpp"
#include "primegap/sieve.hpp"

namespace primegap::cli {

/// Bad flag values; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { csv, json };

struct RunConfig {
  std::uint64_t limit = 0;
  double alpha = 0.5;
  double beta = 0.25;
  std::vector<double> c_values;
  std::uint64_t segment_span = kDefaultSegmentSpan;
  unsigned threads = 1;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> checkpoint_path;
  bool resume = false;
  std::uint64_t checkpoint_every = kDefaultCheckpointCadence;
  /// records: "min" or "max"; gapstats: "cramer", "bhp", "conj1" or "all".
  std::string kind;

  SievePlan plan() const { return {segment_span, threads}; }
};

/// Accepts plain integers, underscores as digit separators and exact
/// scientific notation: "426000000", "426_000_000", "4.26e8".
std::uint64_t parse_limit(std::string_view text);

}  // namespace primegap::cli
