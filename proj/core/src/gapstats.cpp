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

#include "primegap/gapstats.hpp"

#include <cmath>

#include "primegap/functional.hpp"

namespace primegap {

const char* to_string(RatioKind kind) noexcept {
  switch (kind) {
    case RatioKind::cramer:
      return "cramer";
    case RatioKind::bhp:
      return "bhp";
    case RatioKind::conj1:
      return "conj1";
  }
  return "?";
}

double cramer_ratio(const ConsecutivePair& pair) noexcept {
  const double lp = std::log(static_cast<double>(pair.p));
  return static_cast<double>(pair.g) / (lp * lp);
}

double bhp_ratio(const ConsecutivePair& pair) noexcept {
  return static_cast<double>(pair.g) / std::pow(static_cast<double>(pair.p), kBhpExponent);
}

double power_gap(const ConsecutivePair& pair, double alpha) {
  return eval_functional(ExponentPair(alpha, 0.0), pair);
}

bool cramer_bound_check(std::uint64_t p, double c, double alpha) {
  if (p < 3) throw DomainError("cramer bound check needs p >= 3");
  if (!(c > 0) || !std::isfinite(c)) throw DomainError("cramer bound check needs c > 0");
  if (!(alpha > 0 && alpha < 1)) throw DomainError("cramer bound check needs 0 < alpha < 1");
  const auto x = static_cast<double>(p);
  const double lp = std::log(x);
  const double step = c * lp * lp;
  const double lhs = std::pow(x, alpha) * std::expm1(alpha * std::log1p(step / x));
  const double rhs = step * alpha * std::pow(x, alpha - 1);
  return lhs <= rhs * (1 + 1e-12);
}

RatioTracker::RatioTracker(RatioKind kind, double alpha) : kind_(kind), alpha_(alpha) {
  if (kind == RatioKind::conj1 && !(alpha >= 0 && alpha < 1)) {
    throw DomainError("conjecture 1 tracker needs 0 <= alpha < 1");
  }
}

double RatioTracker::ratio_of(const ConsecutivePair& pair) const {
  switch (kind_) {
    case RatioKind::cramer:
      return cramer_ratio(pair);
    case RatioKind::bhp:
      return bhp_ratio(pair);
    case RatioKind::conj1:
      return power_gap(pair, alpha_);
  }
  return 0;
}

std::optional<RatioRecord> RatioTracker::observe(const ConsecutivePair& pair) {
  const double ratio = ratio_of(pair);
  if (best_ && !(ratio > best_->ratio)) return std::nullopt;
  best_ = RatioRecord{pair.n, pair.p, pair.q, pair.g, ratio, kind_};
  return best_;
}

void RatioTracker::merge(const RatioTracker& other) {
  if (other.kind_ != kind_ || other.alpha_ != alpha_) throw DomainError("cannot merge unlike ratio trackers");
  if (!other.best_) return;
  if (!best_ || other.best_->ratio > best_->ratio ||
      (other.best_->ratio == best_->ratio && other.best_->p < best_->p)) {
    best_ = other.best_;
  }
}

}  // namespace primegap
