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
#include <vector>

#include "primegap/functional.hpp"
#include "primegap/sieve.hpp"

namespace primegap {

inline constexpr int kCheckpointSchemaVersion = 1;

/// Unreadable, corrupted or incompatible checkpoint. Never handled by
/// silently starting over.
class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resumable state of a long scan. `resume` locates the stitching prime;
/// the remaining fields carry whatever the command accumulates.
struct Checkpoint {
  int schema_version = kCheckpointSchemaVersion;
  std::string command;
  ResumePoint resume;
  std::vector<RecordEvent> records_so_far;
  std::optional<ConsecutivePair> max_witness;
  double max_value = 0;
  std::vector<ConsecutivePair> violations;
  /// Command parameters that must match on resume (e.g. alpha, beta, kind).
  std::string params;
  /// UTC, ISO 8601; preserved verbatim across read/write.
  std::string created_at;

  std::uint64_t verified_below() const noexcept { return resume.verified_below; }

  /// Throws CheckpointError when fields contradict each other.
  void validate() const;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::string current_utc_timestamp();

std::string to_json(const Checkpoint& checkpoint);
Checkpoint checkpoint_from_json(const std::string& text);

/// Writes to `<path>.tmp` then renames over `path`.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace primegap
