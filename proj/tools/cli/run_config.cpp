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

#include "run_config.hpp"

#include <cctype>
#include <limits>

namespace primegap::cli {

namespace {

bool all_digits(std::string_view s) {
  for (const char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::uint64_t parse_limit(std::string_view text) {
  std::string s;
  for (const char ch : text) {
    if (ch != '_') s.push_back(ch);
  }
  const std::string original(text);
  if (s.empty()) throw UsageError("empty limit");

  std::string mantissa = s;
  unsigned exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    std::string exp = s.substr(e + 1);
    if (!exp.empty() && exp.front() == '+') exp.erase(0, 1);
    if (exp.empty() || !all_digits(exp) || exp.size() > 2) throw UsageError("bad exponent in limit '" + original + "'");
    exponent = static_cast<unsigned>(std::stoul(exp));
  }

  std::string int_part = mantissa;
  std::string frac_part;
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part)) {
    throw UsageError("limit '" + original + "' is not a number");
  }
  // Shift the decimal point right by `exponent`; whatever remains after the
  // point must be zeros.
  while (exponent > 0 && !frac_part.empty()) {
    int_part.push_back(frac_part.front());
    frac_part.erase(0, 1);
    --exponent;
  }
  if (frac_part.find_first_not_of('0') != std::string::npos) {
    throw UsageError("limit '" + original + "' is not an integer");
  }
  int_part.append(exponent, '0');

  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 0;
  for (const char ch : int_part) {
    const auto digit = static_cast<std::uint64_t>(ch - '0');
    if (value > (kMax - digit) / 10) throw UsageError("limit '" + original + "' is out of range");
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace primegap::cli
