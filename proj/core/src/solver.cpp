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

#include "primegap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "primegap/functional.hpp"

namespace primegap {

namespace {

constexpr double kBisectionWidth = 1e-6;
constexpr int kMaxDoublings = 64;
constexpr int kMaxNewtonSteps = 60;
constexpr int kMaxBisections = 200;

// Precomputed logs for h and h'.
struct Residual {
  double log_p;
  double log_ratio;  // log1p(g / p) = ln(q / p)
  double c;

  Residual(std::uint64_t p, std::uint64_t q, double c_)
      : log_p(std::log(static_cast<double>(p))),
        log_ratio(std::log1p(static_cast<double>(q - p) / static_cast<double>(p))),
        c(c_) {}

  double value(double gamma) const { return std::exp(gamma * log_p) * std::expm1(gamma * log_ratio) - c; }

  // q^g ln q - p^g ln p = p^g (expm1(g r)(ln p + r) + r)
  double slope(double gamma) const {
    return std::exp(gamma * log_p) * (std::expm1(gamma * log_ratio) * (log_p + log_ratio) + log_ratio);
  }
};

std::string describe(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

}  // namespace

SolveRequest::SolveRequest(std::uint64_t p, std::uint64_t q, double c) : p_(p), q_(q), c_(c) {
  if (p < 2) throw DomainError("solve request needs p >= 2");
  if (q <= p) throw DomainError("solve request needs p < q");
  if (!(c > 0) || !std::isfinite(c)) throw DomainError("solve request needs a finite c > 0");
}

double gamma_residual(std::uint64_t p, std::uint64_t q, double c, double gamma) {
  return Residual(p, q, c).value(gamma);
}

SolveResult solve_gamma(const SolveRequest& request, const BracketObserver& observer) {
  const Residual h(request.p(), request.q(), request.c());
  const double tolerance = kResidualTolerance * std::max(1.0, request.c());
  SolveResult result;

  double low = 0;
  double high = 1;
  double h_high = h.value(high);
  for (int i = 0; h_high < 0; ++i) {
    if (i == kMaxDoublings) throw SolverRangeError("cannot bracket root", high);
    low = high;
    high *= 2;
    h_high = h.value(high);
    ++result.iterations;
    if (!std::isfinite(h_high)) {
      throw SolverRangeError("q^gamma overflows at gamma = " + describe(high) + " for p = " +
                                 std::to_string(request.p()) + ", q = " + std::to_string(request.q()),
                             high);
    }
  }
  if (observer) observer(low, high);

  auto bisect_once = [&] {
    const double mid = low + (high - low) / 2;
    if (h.value(mid) <= 0) {
      low = mid;
    } else {
      high = mid;
    }
    ++result.iterations;
    if (observer) observer(low, high);
  };

  while (high - low > kBisectionWidth) bisect_once();

  // Newton polish; a step leaving the bracket falls back to bisection.
  double gamma = low + (high - low) / 2;
  double value = h.value(gamma);
  for (int i = 0; i < kMaxNewtonSteps && std::abs(value) > tolerance / 4; ++i) {
    if (value <= 0) {
      low = gamma;
    } else {
      high = gamma;
    }
    if (observer) observer(low, high);
    const double next = gamma - value / h.slope(gamma);
    ++result.iterations;
    if (!(next > low && next < high)) {
      if (high - low <= std::numeric_limits<double>::epsilon() * high) break;
      gamma = low + (high - low) / 2;
    } else if (next == gamma) {
      break;
    } else {
      gamma = next;
    }
    value = h.value(gamma);
  }
  for (int i = 0; i < kMaxBisections && std::abs(value) > tolerance; ++i) {
    if (high - low <= std::numeric_limits<double>::epsilon() * high) break;
    if (value <= 0) {
      low = gamma;
    } else {
      high = gamma;
    }
    if (observer) observer(low, high);
    gamma = low + (high - low) / 2;
    value = h.value(gamma);
    ++result.iterations;
  }

  result.gamma = gamma;
  result.residual = value;
  result.bracket_width_final = high - low;
  result.above_unity = gamma > 1;
  return result;
}

namespace {

// Running minimum root for one c. A pair can only lower the minimum if its
// residual at the current minimum is positive, so most pairs skip the solve.
class GammaTracker {
 public:
  explicit GammaTracker(double c) : c_(c) {}

  void observe(const ConsecutivePair& pair) {
    if (found_ && !(gamma_residual(pair.p, pair.q, c_, best_.gamma) > 0)) return;
    SolveResult result;
    try {
      result = solve_gamma(SolveRequest(pair.p, pair.q, c_));
    } catch (const SolverRangeError& e) {
      throw AlphaCurveError(std::string(e.what()) + " (c = " + describe(c_) + ")", e.gamma(), pair, c_);
    }
    if (!found_ || result.gamma < best_.gamma) {
      best_ = {result.gamma, pair, result.residual};
      found_ = true;
    }
  }

  const GammaMinimum& best() const { return best_; }
  double c() const { return c_; }

 private:
  double c_;
  bool found_ = false;
  GammaMinimum best_;
};

}  // namespace

GammaMinimum smarandache_scan(PrimeBound bound, const SievePlan& plan) {
  return alpha_of_c({1.0}, bound, plan).front().minimum;
}

std::vector<AlphaCurveRow> alpha_of_c(const std::vector<double>& c_grid, PrimeBound bound, const SievePlan& plan) {
  if (c_grid.empty()) throw DomainError("c grid must not be empty");
  std::vector<GammaTracker> trackers;
  trackers.reserve(c_grid.size());
  for (const double c : c_grid) {
    if (!(c > 0) || !std::isfinite(c)) throw DomainError("c values must be finite and positive");
    trackers.emplace_back(c);
  }
  for (const ConsecutivePair& pair : PairStream(bound, plan)) {
    for (GammaTracker& tracker : trackers) tracker.observe(pair);
  }
  std::vector<AlphaCurveRow> rows;
  rows.reserve(trackers.size());
  for (const GammaTracker& tracker : trackers) rows.push_back({tracker.c(), tracker.best()});
  return rows;
}

}  // namespace primegap
