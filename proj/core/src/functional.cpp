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

#include "primegap/functional.hpp"

#include <cmath>
#include <string>

namespace primegap {

ExponentPair::ExponentPair(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("alpha and beta must be finite");
  }
  if (alpha < 0 || beta < 0) {
    throw DomainError("alpha and beta must be nonnegative");
  }
  if (!(alpha + beta < 1)) {
    throw DomainError("alpha + beta must be strictly less than 1 (got " + std::to_string(alpha + beta) + ")");
  }
}

double eval_functional(const ExponentPair& ab, const ConsecutivePair& pair) {
  if (ab.alpha() == 0) return 0.0;
  const auto p = static_cast<double>(pair.p);
  const auto g = static_cast<double>(pair.g);
  return std::pow(p, ab.alpha() + ab.beta()) * std::expm1(ab.alpha() * std::log1p(g / p));
}

MvtBounds mvt_bounds(const ExponentPair& ab, const ConsecutivePair& pair) {
  const double alpha = ab.alpha();
  if (!(alpha > 0 && alpha < 1)) {
    throw DomainError("mean value bounds need 0 < alpha < 1");
  }
  const auto p = static_cast<double>(pair.p);
  const auto q = static_cast<double>(pair.q);
  const double scale = static_cast<double>(pair.g) * alpha;
  return {scale * std::pow(p, ab.beta()) * std::pow(q, alpha - 1),
          scale * std::pow(p, alpha + ab.beta() - 1)};
}

const char* to_string(RecordKind kind) noexcept {
  return kind == RecordKind::minimum ? "min" : "max";
}

bool RecordTracker::improves(double value) const noexcept {
  if (!best_) return true;
  return kind_ == RecordKind::minimum ? value < best_->value : value > best_->value;
}

std::optional<RecordEvent> RecordTracker::observe(const ConsecutivePair& pair, double value) {
  if (!improves(value)) return std::nullopt;
  best_ = RecordEvent{pair.n, pair.p, pair.q, pair.g, value, kind_};
  return best_;
}

void RecordTracker::restore(const RecordEvent& event) {
  if (event.kind != kind_) throw DomainError("record kind mismatch on restore");
  best_ = event;
}

void RecordTracker::merge(const RecordTracker& other) {
  if (other.kind_ != kind_) throw DomainError("cannot merge trackers of different kinds");
  if (!other.best_) return;
  if (!best_ || improves(other.best_->value) ||
      (other.best_->value == best_->value && other.best_->n < best_->n)) {
    best_ = other.best_;
  }
}

}  // namespace primegap
