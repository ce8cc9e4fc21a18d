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

// Reference implementations used only by tests. None of these share code
// with the library.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace primegap::oracle {

inline bool is_prime_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_by_trial_division(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n < limit; ++n) {
    if (is_prime_trial_division(n)) out.push_back(n);
  }
  return out;
}

/// Unsegmented sieve over every integer below limit.
inline std::vector<bool> reference_sieve(std::uint64_t limit) {
  std::vector<bool> prime(limit, true);
  prime[0] = false;
  if (limit > 1) prime[1] = false;
  for (std::uint64_t i = 2; i * i < limit; ++i) {
    if (!prime[i]) continue;
    for (std::uint64_t m = i * i; m < limit; m += i) prime[m] = false;
  }
  return prime;
}

using Real50 = boost::multiprecision::cpp_bin_float_50;

/// p^beta (q^alpha - p^alpha) in 50 decimal digits, straight from the definition.
inline Real50 functional_hp(double alpha, double beta, std::uint64_t p, std::uint64_t q) {
  const Real50 P(p);
  const Real50 Q(q);
  return pow(P, Real50(beta)) * (pow(Q, Real50(alpha)) - pow(P, Real50(alpha)));
}

inline Real50 andrica_hp(std::uint64_t p, std::uint64_t q) { return sqrt(Real50(q)) - sqrt(Real50(p)); }

inline double relative_error(double value, const Real50& exact) {
  if (exact == 0) return value == 0 ? 0.0 : 1.0;
  return static_cast<double>(abs((Real50(value) - exact) / exact));
}

/// Pure bisection on q^g - p^g - c in long double, down to `width`.
inline long double gamma_by_bisection(std::uint64_t p, std::uint64_t q, long double c, long double width) {
  auto h = [&](long double g) { return powl(static_cast<long double>(q), g) - powl(static_cast<long double>(p), g) - c; };
  long double lo = 0;
  long double hi = 1;
  while (h(hi) < 0) hi *= 2;
  while (hi - lo > width) {
    const long double mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    (h(mid) <= 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace primegap::oracle
