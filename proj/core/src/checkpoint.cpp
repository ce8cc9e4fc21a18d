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

#include "primegap/checkpoint.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

namespace primegap {

namespace {

using nlohmann::ordered_json;

ordered_json pair_json(const ConsecutivePair& pair) {
  return {{"n", pair.n}, {"p", pair.p}, {"q", pair.q}, {"g", pair.g}};
}

ConsecutivePair pair_from(const ordered_json& j) {
  ConsecutivePair pair{j.at("n").get<std::uint64_t>(), j.at("p").get<std::uint64_t>(),
                       j.at("q").get<std::uint64_t>(), j.at("g").get<std::uint64_t>()};
  if (pair.q <= pair.p || pair.q - pair.p != pair.g) {
    throw CheckpointError("checkpoint pair has inconsistent gap");
  }
  return pair;
}

RecordKind kind_from(const std::string& name) {
  if (name == "min") return RecordKind::minimum;
  if (name == "max") return RecordKind::maximum;
  throw CheckpointError("unknown record kind '" + name + "'");
}

}  // namespace

void Checkpoint::validate() const {
  if (schema_version != kCheckpointSchemaVersion) {
    throw CheckpointError("checkpoint schema version " + std::to_string(schema_version) +
                          " is not supported (expected " + std::to_string(kCheckpointSchemaVersion) + ")");
  }
  if (command.empty()) throw CheckpointError("checkpoint has no command");
  if (resume.last_prime < 2 || resume.last_index < 1 || resume.verified_below <= resume.last_prime) {
    throw CheckpointError("checkpoint resume point is inconsistent");
  }
  for (const RecordEvent& record : records_so_far) {
    if (record.q >= resume.verified_below) {
      throw CheckpointError("checkpoint record at q=" + std::to_string(record.q) + " lies beyond verified bound");
    }
  }
  for (const ConsecutivePair& pair : violations) {
    if (pair.q >= resume.verified_below) throw CheckpointError("checkpoint violation lies beyond verified bound");
  }
  if (max_witness && max_witness->q >= resume.verified_below) {
    throw CheckpointError("checkpoint witness lies beyond verified bound");
  }
}

std::string current_utc_timestamp() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json(const Checkpoint& c) {
  ordered_json j;
  j["schema_version"] = c.schema_version;
  j["command"] = c.command;
  j["params"] = c.params;
  j["verified_below"] = c.resume.verified_below;
  j["last_prime"] = c.resume.last_prime;
  j["last_index"] = c.resume.last_index;
  auto records = ordered_json::array();
  for (const RecordEvent& r : c.records_so_far) {
    records.push_back({{"n", r.n}, {"p", r.p}, {"q", r.q}, {"g", r.g}, {"value", r.value},
                       {"kind", to_string(r.kind)}});
  }
  j["records_so_far"] = std::move(records);
  j["max_witness"] = c.max_witness ? pair_json(*c.max_witness) : ordered_json(nullptr);
  j["max_value"] = c.max_value;
  auto violations = ordered_json::array();
  for (const ConsecutivePair& pair : c.violations) violations.push_back(pair_json(pair));
  j["violations"] = std::move(violations);
  j["created_at"] = c.created_at;
  return j.dump(2) + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
  Checkpoint c;
  try {
    const auto j = ordered_json::parse(text);
    c.schema_version = j.at("schema_version").get<int>();
    if (c.schema_version != kCheckpointSchemaVersion) c.validate();
    c.command = j.at("command").get<std::string>();
    c.params = j.at("params").get<std::string>();
    c.resume.verified_below = j.at("verified_below").get<std::uint64_t>();
    c.resume.last_prime = j.at("last_prime").get<std::uint64_t>();
    c.resume.last_index = j.at("last_index").get<std::uint64_t>();
    for (const auto& r : j.at("records_so_far")) {
      c.records_so_far.push_back({r.at("n").get<std::uint64_t>(), r.at("p").get<std::uint64_t>(),
                                  r.at("q").get<std::uint64_t>(), r.at("g").get<std::uint64_t>(),
                                  r.at("value").get<double>(), kind_from(r.at("kind").get<std::string>())});
    }
    if (!j.at("max_witness").is_null()) c.max_witness = pair_from(j.at("max_witness"));
    c.max_value = j.at("max_value").get<double>();
    for (const auto& v : j.at("violations")) c.violations.push_back(pair_from(v));
    c.created_at = j.at("created_at").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
  }
  c.validate();
  return c;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  const std::string text = to_json(checkpoint);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw CheckpointError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot move checkpoint into place: " + ec.message());
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_json(buf.str());
}

}  // namespace primegap
