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
#include <optional>
#include <ranges>
#include <vector>

#include "primegap/sieve.hpp"

namespace primegap {

/// Exponent in the unconditional gap bound g_n << p_n^0.525.
inline constexpr double kBhpExponent = 0.525;

enum class RatioKind { cramer, bhp, conj1 };

const char* to_string(RatioKind kind) noexcept;

/// g / (ln p)^2, normalized by the prime rather than its index.
double cramer_ratio(const ConsecutivePair& pair) noexcept;

/// g / p^0.525.
double bhp_ratio(const ConsecutivePair& pair) noexcept;

/// q^alpha - p^alpha, cancellation-safe. Requires 0 <= alpha < 1.
double power_gap(const ConsecutivePair& pair, double alpha);

/// (p + C ln^2 p)^alpha - p^alpha <= C alpha ln^2 p p^(alpha - 1), with 1e-12
/// relative slack. Always true for valid inputs; kept as an executable check.
bool cramer_bound_check(std::uint64_t p, double c, double alpha);

struct RatioRecord {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t g = 0;
  double ratio = 0;
  RatioKind kind = RatioKind::cramer;

  friend bool operator==(const RatioRecord&, const RatioRecord&) = default;
};

/// Running strict maximum of one ratio. Merge keeps the larger ratio, the
/// smaller p on exact ties.
class RatioTracker {
 public:
  explicit RatioTracker(RatioKind kind, double alpha = 0.5);

  RatioKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  double ratio_of(const ConsecutivePair& pair) const;

  std::optional<RatioRecord> observe(const ConsecutivePair& pair);
  void merge(const RatioTracker& other);
  const std::optional<RatioRecord>& best() const noexcept { return best_; }

 private:
  RatioKind kind_;
  double alpha_;
  std::optional<RatioRecord> best_;
};

template <std::ranges::input_range R>
std::vector<RatioRecord> ratio_records(R&& pairs, RatioKind kind, double alpha = 0.5) {
  RatioTracker tracker(kind, alpha);
  std::vector<RatioRecord> records;
  for (const ConsecutivePair& pair : pairs) {
    if (auto record = tracker.observe(pair)) records.push_back(*record);
  }
  return records;
}

/// Running maxima of q^alpha - p^alpha; the last one is the empirical C(alpha).
template <std::ranges::input_range R>
std::vector<RatioRecord> conjecture1_sup(R&& pairs, double alpha) {
  return ratio_records(std::forward<R>(pairs), RatioKind::conj1, alpha);
}

}  // namespace primegap
