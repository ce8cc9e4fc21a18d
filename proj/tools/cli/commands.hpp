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

#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace primegap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Each command writes its table to `out` and diagnostics to `err`. Invalid
// input surfaces as an exception; run() maps those to exit codes.
int cmd_andrica(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_records(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_smarandache(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_alpha_curve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gapstats(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line, args[0] being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primegap::cli
