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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primegap/sieve.hpp"

namespace primegap {

/// Smarandache constant as quoted in the literature.
inline constexpr double kSmarandacheConstant = 0.5671481302539;

/// Thrown when q^gamma overflows while bracketing the root.
class SolverRangeError : public std::range_error {
 public:
  SolverRangeError(const std::string& what, double gamma) : std::range_error(what), gamma_(gamma) {}
  double gamma() const noexcept { return gamma_; }

 private:
  double gamma_;
};

/// q^gamma - p^gamma = c with 2 <= p < q and c > 0.
class SolveRequest {
 public:
  SolveRequest(std::uint64_t p, std::uint64_t q, double c);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }
  double c() const noexcept { return c_; }

 private:
  std::uint64_t p_;
  std::uint64_t q_;
  double c_;
};

struct SolveResult {
  double gamma = 0;
  /// q^gamma - p^gamma - c at gamma.
  double residual = 0;
  int iterations = 0;
  double bracket_width_final = 0;
  /// Set when gamma > 1, which happens exactly when c exceeds the gap.
  bool above_unity = false;
};

/// Called after every bracket update with (low, high).
using BracketObserver = std::function<void(double, double)>;

/// Residual tolerance of solve_gamma: |h(gamma)| <= kResidualTolerance * max(1, c).
inline constexpr double kResidualTolerance = 1e-12;

/// h(gamma) = q^gamma - p^gamma - c, computed as p^gamma expm1(gamma log1p(g/p)) - c.
double gamma_residual(std::uint64_t p, std::uint64_t q, double c, double gamma);

/// Unique positive root of q^gamma - p^gamma = c. Brackets by doubling from
/// gamma = 1, bisects to width 1e-6, then polishes with safeguarded Newton.
SolveResult solve_gamma(const SolveRequest& request, const BracketObserver& observer = {});

struct GammaMinimum {
  double gamma = 0;
  ConsecutivePair witness{};
  double residual = 0;
};

/// Minimum over consecutive pairs with q < limit of the root of
/// q^gamma - p^gamma = 1, with its argmin (ties keep the smaller p).
GammaMinimum smarandache_scan(PrimeBound bound, const SievePlan& plan = {});

struct AlphaCurveRow {
  double c = 0;
  GammaMinimum minimum;
};

/// Thrown by alpha_of_c when a pair's root cannot be bracketed.
class AlphaCurveError : public SolverRangeError {
 public:
  AlphaCurveError(const std::string& what, double gamma, ConsecutivePair pair, double c)
      : SolverRangeError(what, gamma), pair_(pair), c_(c) {}
  const ConsecutivePair& pair() const noexcept { return pair_; }
  double c() const noexcept { return c_; }

 private:
  ConsecutivePair pair_;
  double c_;
};

/// For each c in grid order, the empirical minimum root over scanned pairs.
/// All grid values are tracked in a single pass over the pair stream.
std::vector<AlphaCurveRow> alpha_of_c(const std::vector<double>& c_grid, PrimeBound bound,
                                      const SievePlan& plan = {});

}  // namespace primegap
