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

#include "primegap/sieve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <span>
#include <thread>
#include <utility>

namespace primegap {

namespace {

constexpr std::array<std::uint32_t, 8> kWheelResidues = {1, 7, 11, 13, 17, 19, 23, 29};
constexpr std::array<std::uint32_t, 8> kWheelGaps = {6, 4, 2, 4, 2, 4, 6, 2};

// For r in [0, 30): index into kWheelResidues of the smallest residue >= r,
// and the distance to it. r = 30 never occurs.
struct WheelStep {
  std::uint8_t index;
  std::uint8_t advance;
};

constexpr std::array<WheelStep, 30> make_wheel_table() {
  std::array<WheelStep, 30> table{};
  for (std::uint32_t r = 0; r < 30; ++r) {
    std::uint32_t idx = 0;
    while (idx < 8 && kWheelResidues[idx] < r) ++idx;
    if (idx == 8) {
      table[r] = {0, static_cast<std::uint8_t>(31 - r)};
    } else {
      table[r] = {static_cast<std::uint8_t>(idx), static_cast<std::uint8_t>(kWheelResidues[idx] - r)};
    }
  }
  return table;
}

constexpr auto kWheelTable = make_wheel_table();

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd primes <= bound with a plain odd-only byte sieve.
std::vector<std::uint32_t> odd_sieving_primes(std::uint64_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 3) return primes;
  const std::uint64_t count = (bound - 1) / 2;  // 3, 5, ..., entries i <-> 2i + 3
  std::vector<bool> composite(count, false);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 3;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t m = p * p; m <= bound; m += 2 * p) composite[(m - 3) / 2] = true;
  }
  return primes;
}

inline void clear_bit(std::uint64_t* words, std::uint64_t bit) {
  words[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
}

// Sieves the odd numbers of [low, high), low even, into `words` (bit i is
// low + 2i + 1) and appends the primes found to `out`.
void sieve_segment(std::uint64_t low, std::uint64_t high, std::span<const std::uint32_t> primes,
                   std::vector<std::uint64_t>& words, std::vector<std::uint64_t>& out) {
  const std::uint64_t bits = (high - low) / 2;
  const std::uint64_t nwords = (bits + 63) / 64;
  words.assign(nwords, ~std::uint64_t{0});
  if (bits % 64 != 0) words.back() = (std::uint64_t{1} << (bits % 64)) - 1;
  if (nwords == 0) {
    if (low <= 2 && 2 < high) out.push_back(2);
    return;
  }
  std::uint64_t* w = words.data();
  if (low == 0) clear_bit(w, 0);  // 1 is not prime

  for (const std::uint32_t p32 : primes) {
    const std::uint64_t p = p32;
    const std::uint64_t pp = p * p;
    if (pp >= high) break;
    if (p < 7) {
      std::uint64_t m = std::max(pp, (low + p - 1) / p * p);
      if ((m & 1) == 0) m += p;
      for (; m < high; m += 2 * p) clear_bit(w, (m - low) >> 1);
      continue;
    }
    // Only multiples p*k with k coprime to 30 need striking; the rest were
    // removed by 2, 3 or 5.
    std::uint64_t k = std::max(p, (low + p - 1) / p);
    const WheelStep step = kWheelTable[k % 30];
    k += step.advance;
    std::uint32_t idx = step.index;
    std::uint64_t m = p * k;
    while (m < high) {
      clear_bit(w, (m - low) >> 1);
      m += p * kWheelGaps[idx];
      idx = (idx + 1) & 7;
    }
  }

  if (low <= 2 && 2 < high) out.push_back(2);
  for (std::uint64_t j = 0; j < nwords; ++j) {
    std::uint64_t word = w[j];
    const std::uint64_t base = low + 128 * j + 1;
    while (word != 0) {
      out.push_back(base + 2 * static_cast<std::uint64_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

}  // namespace

void SievePlan::validate() const {
  if (segment_span < kMinSegmentSpan) {
    throw BoundError("segment span must be at least 2^16, got " + std::to_string(segment_span));
  }
  if (segment_span % kSegmentGranularity != 0) {
    throw BoundError("segment span must be a multiple of " + std::to_string(kSegmentGranularity) +
                     ", got " + std::to_string(segment_span));
  }
  if (thread_count == 0) throw BoundError("thread count must be at least 1");
}

namespace detail {

// Produces the primes of [start, limit) one segment at a time, in order.
// With more than one thread, a batch of segments is sieved concurrently and
// handed out in order.
class SegmentSource {
 public:
  SegmentSource(std::uint64_t start, std::uint64_t limit, SievePlan plan)
      : limit_(limit), plan_(plan), next_low_(start & ~std::uint64_t{1}), start_(start) {
    plan_.validate();
    sieving_primes_ = odd_sieving_primes(isqrt(limit - 1));
    batch_.resize(plan_.thread_count);
  }

  // Swaps the next segment's primes into `out`; returns the segment's
  // exclusive upper end, or 0 when exhausted.
  std::uint64_t next(std::vector<std::uint64_t>& out) {
    if (batch_pos_ == batch_size_ && !fill_batch()) return 0;
    Job& job = batch_[batch_pos_++];
    out.swap(job.primes);
    job.primes.clear();
    return job.high;
  }

 private:
  struct Job {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    std::vector<std::uint64_t> words;
    std::vector<std::uint64_t> primes;
  };

  void run(Job& job) const {
    job.primes.clear();
    sieve_segment(job.low, job.high, sieving_primes_, job.words, job.primes);
    if (job.low < start_) {
      auto first = std::lower_bound(job.primes.begin(), job.primes.end(), start_);
      job.primes.erase(job.primes.begin(), first);
    }
  }

  bool fill_batch() {
    batch_pos_ = 0;
    batch_size_ = 0;
    while (batch_size_ < batch_.size() && next_low_ < limit_) {
      Job& job = batch_[batch_size_++];
      job.low = next_low_;
      job.high = limit_ - next_low_ > plan_.segment_span ? next_low_ + plan_.segment_span : limit_;
      next_low_ = job.high;
    }
    if (batch_size_ == 0) return false;
    if (batch_size_ == 1) {
      run(batch_[0]);
      return true;
    }
    std::vector<std::jthread> workers;
    workers.reserve(batch_size_ - 1);
    for (std::size_t i = 1; i < batch_size_; ++i) {
      workers.emplace_back([this, i] { run(batch_[i]); });
    }
    run(batch_[0]);
    return true;
  }

  std::uint64_t limit_;
  SievePlan plan_;
  std::uint64_t next_low_;
  std::uint64_t start_;
  std::vector<std::uint32_t> sieving_primes_;
  std::vector<Job> batch_;
  std::size_t batch_pos_ = 0;
  std::size_t batch_size_ = 0;
};

}  // namespace detail

std::vector<std::uint64_t> primes_up_to(PrimeBound bound, std::size_t memory_budget) {
  const auto x = static_cast<double>(bound.limit());
  // pi(x) < 1.25506 x / ln x for x > 1
  const double estimate = x < 17 ? 8.0 : 1.25506 * x / std::log(x);
  if (estimate * sizeof(std::uint64_t) > static_cast<double>(memory_budget)) {
    throw CapacityError("primes below " + std::to_string(bound.limit()) +
                        " exceed the memory budget; use PairStream instead");
  }
  std::vector<std::uint64_t> primes;
  primes.reserve(static_cast<std::size_t>(estimate));
  detail::SegmentSource source(0, bound.limit(), SievePlan{});
  std::vector<std::uint64_t> chunk;
  while (source.next(chunk) != 0) primes.insert(primes.end(), chunk.begin(), chunk.end());
  return primes;
}

std::uint64_t prime_count(PrimeBound bound, const SievePlan& plan) {
  detail::SegmentSource source(0, bound.limit(), plan);
  std::vector<std::uint64_t> chunk;
  std::uint64_t count = 0;
  while (source.next(chunk) != 0) count += chunk.size();
  return count;
}

PairStream::PairStream(PrimeBound bound, SievePlan plan)
    : source_(std::make_unique<detail::SegmentSource>(0, bound.limit(), plan)),
      limit_(bound.limit()),
      verified_below_(2) {
  if (bound.limit() < 5) {
    throw BoundError("pair stream needs a bound of at least 5, got " + std::to_string(bound.limit()));
  }
}

PairStream::PairStream(PrimeBound bound, SievePlan plan, ResumePoint resume)
    : limit_(bound.limit()),
      verified_below_(resume.verified_below),
      last_prime_(resume.last_prime),
      last_index_(resume.last_index) {
  if (resume.last_prime < 2 || resume.last_index < 1 || resume.verified_below <= resume.last_prime) {
    throw BoundError("inconsistent resume point");
  }
  if (resume.verified_below > bound.limit()) {
    throw BoundError("resume point lies beyond the bound");
  }
  source_ = std::make_unique<detail::SegmentSource>(resume.verified_below, bound.limit(), plan);
}

PairStream::PairStream(PairStream&&) noexcept = default;
PairStream& PairStream::operator=(PairStream&&) noexcept = default;
PairStream::~PairStream() = default;

bool PairStream::refill() {
  cursor_ = 0;
  buffer_.clear();
  while (buffer_.empty()) {
    const std::uint64_t high = source_->next(buffer_);
    if (high == 0) {
      verified_below_ = limit_;
      return false;
    }
    if (buffer_.empty()) verified_below_ = high;
  }
  return true;
}

std::optional<ConsecutivePair> PairStream::next() {
  if (!source_) return std::nullopt;
  while (true) {
    if (cursor_ == buffer_.size() && !refill()) return std::nullopt;
    const std::uint64_t q = buffer_[cursor_++];
    verified_below_ = q + 1;
    if (last_index_ == 0) {
      last_prime_ = q;
      last_index_ = 1;
      continue;
    }
    const auto pair = ConsecutivePair::of(last_index_, last_prime_, q);
    last_prime_ = q;
    ++last_index_;
    return pair;
  }
}

}  // namespace primegap
