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

#include "primegap/andrica.hpp"

#include <algorithm>
#include <cmath>

namespace primegap {

bool andrica_holds_exact(const ConsecutivePair& pair) noexcept {
  __extension__ using u128 = unsigned __int128;
  const u128 lhs = static_cast<u128>(pair.g - 1) * static_cast<u128>(pair.g - 1);
  const u128 rhs = static_cast<u128>(pair.p) * 4;
  return lhs < rhs;
}

double andrica_value(const ConsecutivePair& pair) noexcept {
  return static_cast<double>(pair.g) /
         (std::sqrt(static_cast<double>(pair.q)) + std::sqrt(static_cast<double>(pair.p)));
}

void AndricaAccumulator::observe(const ConsecutivePair& pair) {
  if (!andrica_holds_exact(pair)) violations_.push_back(pair);
  const double value = andrica_value(pair);
  if (!max_witness_ || value > max_value_) {
    max_witness_ = pair;
    max_value_ = value;
  }
}

void AndricaAccumulator::merge(const AndricaAccumulator& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  std::sort(violations_.begin(), violations_.end(),
            [](const ConsecutivePair& a, const ConsecutivePair& b) { return a.p < b.p; });
  if (!other.max_witness_) return;
  if (!max_witness_ || other.max_value_ > max_value_ ||
      (other.max_value_ == max_value_ && other.max_witness_->p < max_witness_->p)) {
    max_witness_ = other.max_witness_;
    max_value_ = other.max_value_;
  }
}

void AndricaAccumulator::restore(const Checkpoint& checkpoint) {
  violations_ = checkpoint.violations;
  max_witness_ = checkpoint.max_witness;
  max_value_ = checkpoint.max_value;
}

AndricaReport AndricaAccumulator::report(std::uint64_t verified_below) const {
  return {verified_below, violations_, max_witness_, max_value_};
}

Checkpoint make_andrica_checkpoint(const AndricaReport& report, const ResumePoint& resume) {
  Checkpoint c;
  c.command = kAndricaCommand;
  c.resume = resume;
  c.max_witness = report.max_witness;
  c.max_value = report.max_value;
  c.violations = report.violations;
  c.created_at = current_utc_timestamp();
  return c;
}

AndricaReport verify_range(PrimeBound bound, const SievePlan& plan, const std::optional<Checkpoint>& resume_from,
                           const std::optional<CheckpointPolicy>& persist) {
  AndricaAccumulator acc;
  std::optional<PairStream> stream;
  if (resume_from) {
    resume_from->validate();
    if (resume_from->command != kAndricaCommand) {
      throw CheckpointError("checkpoint was written by '" + resume_from->command + "', not by andrica");
    }
    if (resume_from->verified_below() > bound.limit()) {
      throw CheckpointError("checkpoint already covers " + std::to_string(resume_from->verified_below()) +
                            ", beyond the requested limit " + std::to_string(bound.limit()));
    }
    acc.restore(*resume_from);
    stream.emplace(bound, plan, resume_from->resume);
  } else {
    stream.emplace(bound, plan);
  }

  const std::uint64_t cadence = persist ? std::max<std::uint64_t>(persist->cadence, 1) : 0;
  std::uint64_t next_mark = persist ? (stream->verified_below() / cadence + 1) * cadence : 0;

  while (auto pair = stream->next()) {
    acc.observe(*pair);
    if (persist && stream->verified_below() >= next_mark) {
      write_checkpoint(persist->path,
                       make_andrica_checkpoint(acc.report(stream->verified_below()), stream->resume_point()));
      next_mark = (stream->verified_below() / cadence + 1) * cadence;
    }
  }

  AndricaReport report = acc.report(stream->verified_below());
  if (persist) write_checkpoint(persist->path, make_andrica_checkpoint(report, stream->resume_point()));
  return report;
}

}  // namespace primegap
