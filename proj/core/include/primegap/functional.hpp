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
#include <stdexcept>
#include <vector>

#include "primegap/sieve.hpp"

namespace primegap {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Infinitely many prime pairs p, p + 246 exist; pairs with g <= 246 are the
/// witnesses that drive f(n) to zero.
inline constexpr std::uint64_t kWitnessGapBound = 246;

/// Exponents (alpha, beta) of f(n) = p_n^beta (p_{n+1}^alpha - p_n^alpha).
/// Construction enforces alpha, beta >= 0, both finite, alpha + beta < 1.
class ExponentPair {
 public:
  ExponentPair(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// p^beta (q^alpha - p^alpha), evaluated as p^(alpha+beta) expm1(alpha log1p(g/p))
/// so pairs with g << p keep full relative precision.
double eval_functional(const ExponentPair& ab, const ConsecutivePair& pair);

struct MvtBounds {
  double lower = 0;
  double upper = 0;
};

/// Mean value sandwich g*alpha*p^beta*q^(alpha-1) <= f <= g*alpha*p^(alpha+beta-1).
/// Throws DomainError unless 0 < alpha < 1.
MvtBounds mvt_bounds(const ExponentPair& ab, const ConsecutivePair& pair);

enum class RecordKind { minimum, maximum };

const char* to_string(RecordKind kind) noexcept;

struct RecordEvent {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t g = 0;
  double value = 0;
  RecordKind kind = RecordKind::minimum;

  friend bool operator==(const RecordEvent&, const RecordEvent&) = default;
};

/// Running strict minimum or maximum of a per-pair value. The tracker state
/// (best value and its witness) merges associatively, so partial folds over
/// disjoint index ranges can be combined.
class RecordTracker {
 public:
  explicit RecordTracker(RecordKind kind) : kind_(kind) {}

  RecordKind kind() const noexcept { return kind_; }
  const std::optional<RecordEvent>& best() const noexcept { return best_; }

  /// Returns the event if `value` strictly improves the current record.
  std::optional<RecordEvent> observe(const ConsecutivePair& pair, double value);

  /// Seeds the tracker from a previously emitted record (checkpoint resume).
  void restore(const RecordEvent& event);

  /// Keeps the better record; exact ties go to the smaller index.
  void merge(const RecordTracker& other);

 private:
  bool improves(double value) const noexcept;

  RecordKind kind_;
  std::optional<RecordEvent> best_;
};

template <std::ranges::input_range R>
  requires std::same_as<std::ranges::range_value_t<R>, ConsecutivePair>
std::vector<RecordEvent> record_events(R&& pairs, const ExponentPair& ab, RecordKind kind) {
  RecordTracker tracker(kind);
  std::vector<RecordEvent> events;
  for (const ConsecutivePair& pair : pairs) {
    if (auto event = tracker.observe(pair, eval_functional(ab, pair))) events.push_back(*event);
  }
  return events;
}

template <std::ranges::input_range R>
std::vector<RecordEvent> record_minima(R&& pairs, const ExponentPair& ab) {
  return record_events(std::forward<R>(pairs), ab, RecordKind::minimum);
}

template <std::ranges::input_range R>
std::vector<RecordEvent> record_maxima(R&& pairs, const ExponentPair& ab) {
  return record_events(std::forward<R>(pairs), ab, RecordKind::maximum);
}

constexpr bool is_witness_pair(const ConsecutivePair& pair, std::uint64_t max_gap) noexcept {
  return pair.g <= max_gap;
}

/// Pairs with g <= max_gap, order preserved. Throws DomainError if max_gap < 1.
template <std::ranges::viewable_range R>
auto witness_pairs(R&& pairs, std::uint64_t max_gap = kWitnessGapBound) {
  if (max_gap < 1) throw DomainError("witness gap bound must be at least 1");
  return std::forward<R>(pairs) |
         std::views::filter([max_gap](const ConsecutivePair& pair) { return is_witness_pair(pair, max_gap); });
}

}  // namespace primegap
