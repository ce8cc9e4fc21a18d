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

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <vector>

namespace primegap {

class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by non-streaming calls whose result would not fit the memory budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 63;
inline constexpr std::uint64_t kDefaultSegmentSpan = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMinSegmentSpan = std::uint64_t{1} << 16;
/// Segment spans are whole 64-bit words of the odd-only bitmap.
inline constexpr std::uint64_t kSegmentGranularity = 128;
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

/// Exclusive upper bound on the primes considered by a run.
class PrimeBound {
 public:
  explicit PrimeBound(std::uint64_t limit) : limit_(limit) {
    if (limit < 3) {
      throw BoundError("prime bound must be at least 3, got " + std::to_string(limit));
    }
    if (limit > kMaxLimit) {
      throw BoundError("prime bound above 2^63 is not supported");
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// The n-th prime p, its successor q and the gap g = q - p. Indexing is
/// 1-based with p_1 = 2.
struct ConsecutivePair {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t g = 0;

  static constexpr ConsecutivePair of(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
    return {n, p, q, q - p};
  }

  friend bool operator==(const ConsecutivePair&, const ConsecutivePair&) = default;
};

struct SievePlan {
  std::uint64_t segment_span = kDefaultSegmentSpan;
  unsigned thread_count = 1;

  /// Throws BoundError if the span is too small or not word aligned, or if
  /// thread_count is zero.
  void validate() const;
};

/// Where a previous pass stopped: every pair with q < verified_below has been
/// emitted, last_prime is the largest prime below verified_below and
/// last_index is its index.
struct ResumePoint {
  std::uint64_t verified_below = 0;
  std::uint64_t last_prime = 0;
  std::uint64_t last_index = 0;

  friend bool operator==(const ResumePoint&, const ResumePoint&) = default;
};

/// All primes in [2, limit). Throws CapacityError when the output would
/// exceed memory_budget bytes; use PairStream for large bounds.
std::vector<std::uint64_t> primes_up_to(PrimeBound bound,
                                        std::size_t memory_budget = kDefaultMemoryBudget);

/// pi(limit - 1).
std::uint64_t prime_count(PrimeBound bound, const SievePlan& plan = {});

namespace detail {
class SegmentSource;
}

/// Ordered stream of consecutive prime pairs (p_n, p_{n+1}) with
/// p_{n+1} < limit. Segments are sieved ahead in parallel when the plan
/// asks for more than one thread; pairs always come out in index order.
/// A move-only view, so it composes with std::views adaptors by value.
class PairStream : public std::ranges::view_base {
 public:
  class iterator {
   public:
    using iterator_concept = std::input_iterator_tag;
    using value_type = ConsecutivePair;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PairStream* stream) : stream_(stream) { advance(); }

    const ConsecutivePair& operator*() const { return current_; }
    const ConsecutivePair* operator->() const { return &current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.stream_ == nullptr;
    }

   private:
    void advance() {
      if (auto next = stream_->next()) {
        current_ = *next;
      } else {
        stream_ = nullptr;
      }
    }

    PairStream* stream_ = nullptr;
    ConsecutivePair current_{};
  };

  /// Empty stream.
  PairStream() = default;
  /// Requires limit >= 5.
  PairStream(PrimeBound bound, SievePlan plan = {});
  /// Continues a previous pass; the first pair emitted has p = resume.last_prime.
  PairStream(PrimeBound bound, SievePlan plan, ResumePoint resume);
  PairStream(PairStream&&) noexcept;
  PairStream& operator=(PairStream&&) noexcept;
  ~PairStream();

  std::optional<ConsecutivePair> next();

  std::uint64_t verified_below() const noexcept { return verified_below_; }
  ResumePoint resume_point() const noexcept {
    return {verified_below_, last_prime_, last_index_};
  }
  std::uint64_t limit() const noexcept { return limit_; }

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  bool refill();

  std::unique_ptr<detail::SegmentSource> source_;
  std::vector<std::uint64_t> buffer_;
  std::size_t cursor_ = 0;
  std::uint64_t limit_ = 0;
  std::uint64_t verified_below_ = 0;
  std::uint64_t last_prime_ = 0;
  std::uint64_t last_index_ = 0;
};

inline PairStream pair_stream(PrimeBound bound, SievePlan plan = {}) {
  return PairStream(bound, plan);
}

}  // namespace primegap
