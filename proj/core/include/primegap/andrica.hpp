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
#include <vector>

#include "primegap/checkpoint.hpp"
#include "primegap/sieve.hpp"

namespace primegap {

inline constexpr const char* kAndricaCommand = "andrica";
inline constexpr std::uint64_t kDefaultCheckpointCadence = 10'000'000;

/// sqrt(q) - sqrt(p) < 1, decided exactly as (g - 1)^2 < 4p.
bool andrica_holds_exact(const ConsecutivePair& pair) noexcept;

/// sqrt(q) - sqrt(p) as g / (sqrt(q) + sqrt(p)). For reporting only.
double andrica_value(const ConsecutivePair& pair) noexcept;

struct AndricaReport {
  std::uint64_t verified_below = 0;
  std::vector<ConsecutivePair> violations;
  std::optional<ConsecutivePair> max_witness;
  double max_value = 0;

  friend bool operator==(const AndricaReport&, const AndricaReport&) = default;
};

/// Per-pair fold of violations and the largest sqrt(q) - sqrt(p). Merging
/// partial accumulators over disjoint ranges is commutative; ties on the
/// maximum keep the smaller p.
class AndricaAccumulator {
 public:
  void observe(const ConsecutivePair& pair);
  void merge(const AndricaAccumulator& other);

  const std::vector<ConsecutivePair>& violations() const noexcept { return violations_; }
  const std::optional<ConsecutivePair>& max_witness() const noexcept { return max_witness_; }
  double max_value() const noexcept { return max_value_; }

  void restore(const Checkpoint& checkpoint);
  AndricaReport report(std::uint64_t verified_below) const;

 private:
  std::vector<ConsecutivePair> violations_;
  std::optional<ConsecutivePair> max_witness_;
  double max_value_ = 0;
};

struct CheckpointPolicy {
  std::filesystem::path path;
  /// A checkpoint is written each time the verified bound crosses another
  /// multiple of this many numbers, and once at the end.
  std::uint64_t cadence = kDefaultCheckpointCadence;
};

Checkpoint make_andrica_checkpoint(const AndricaReport& report, const ResumePoint& resume);

/// Checks every pair with q < limit. With `resume_from`, only the pairs past
/// its verified bound are sieved. Throws CheckpointError if the checkpoint
/// belongs to another command or lies beyond the bound.
AndricaReport verify_range(PrimeBound bound, const SievePlan& plan = {},
                           const std::optional<Checkpoint>& resume_from = std::nullopt,
                           const std::optional<CheckpointPolicy>& persist = std::nullopt);

}  // namespace primegap
