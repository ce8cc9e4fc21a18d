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

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "output.hpp"
#include "primegap/andrica.hpp"
#include "primegap/checkpoint.hpp"
#include "primegap/functional.hpp"
#include "primegap/gapstats.hpp"
#include "primegap/solver.hpp"

namespace primegap::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kRecordsCommand = "records";

ordered_json base_meta(const char* command, const RunConfig& config) {
  ordered_json meta;
  meta["command"] = command;
  meta["limit"] = config.limit;
  meta["alpha"] = config.alpha;
  meta["beta"] = config.beta;
  meta["schema_version"] = kOutputSchemaVersion;
  return meta;
}

std::optional<Checkpoint> load_resume(const RunConfig& config) {
  if (!config.resume) return std::nullopt;
  if (!config.checkpoint_path) throw UsageError("--resume needs --checkpoint PATH");
  if (!std::filesystem::exists(*config.checkpoint_path)) {
    throw CheckpointError("checkpoint " + config.checkpoint_path->string() + " does not exist");
  }
  return read_checkpoint(*config.checkpoint_path);
}

RecordKind parse_record_kind(const std::string& kind) {
  if (kind.empty() || kind == "min") return RecordKind::minimum;
  if (kind == "max") return RecordKind::maximum;
  throw UsageError("--kind must be 'min' or 'max' for records, got '" + kind + "'");
}

ExponentPair exponents_for_records(const RunConfig& config) {
  if (!(config.alpha + config.beta < 1)) {
    throw UsageError("alpha + beta must be < 1: p_n^beta (p_{n+1}^alpha - p_n^alpha) has liminf 0 only under "
                     "the hypothesis alpha, beta >= 0, alpha + beta < 1 (got alpha + beta = " +
                     format_real(config.alpha + config.beta) + ")");
  }
  try {
    return ExponentPair(config.alpha, config.beta);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string records_params(const RunConfig& config, RecordKind kind) {
  return "alpha=" + format_real(config.alpha) + ";beta=" + format_real(config.beta) + ";kind=" + to_string(kind);
}

std::vector<RecordEvent> scan_records(const RunConfig& config, const ExponentPair& ab, RecordKind kind) {
  const PrimeBound bound(config.limit);
  const std::string params = records_params(config, kind);
  RecordTracker tracker(kind);
  std::vector<RecordEvent> events;
  std::optional<PairStream> stream;

  if (auto checkpoint = load_resume(config)) {
    if (checkpoint->command != kRecordsCommand) {
      throw CheckpointError("checkpoint was written by '" + checkpoint->command + "', not by records");
    }
    if (checkpoint->params != params) {
      throw CheckpointError("checkpoint parameters '" + checkpoint->params + "' do not match '" + params + "'");
    }
    if (checkpoint->verified_below() > bound.limit()) {
      throw CheckpointError("checkpoint already covers " + std::to_string(checkpoint->verified_below()) +
                            ", beyond the requested limit");
    }
    events = checkpoint->records_so_far;
    if (!events.empty()) tracker.restore(events.back());
    stream.emplace(bound, config.plan(), checkpoint->resume);
  } else {
    stream.emplace(bound, config.plan());
  }

  auto save = [&] {
    Checkpoint c;
    c.command = kRecordsCommand;
    c.params = params;
    c.resume = stream->resume_point();
    c.records_so_far = events;
    c.created_at = current_utc_timestamp();
    write_checkpoint(*config.checkpoint_path, c);
  };

  const std::uint64_t cadence = std::max<std::uint64_t>(config.checkpoint_every, 1);
  std::uint64_t next_mark = (stream->verified_below() / cadence + 1) * cadence;
  while (auto pair = stream->next()) {
    if (auto event = tracker.observe(*pair, eval_functional(ab, *pair))) events.push_back(*event);
    if (config.checkpoint_path && stream->verified_below() >= next_mark) {
      save();
      next_mark = (stream->verified_below() / cadence + 1) * cadence;
    }
  }
  if (config.checkpoint_path) save();
  return events;
}

ordered_json pair_json(const ConsecutivePair& pair) {
  return {{"n", pair.n}, {"p", pair.p}, {"q", pair.q}, {"gap", pair.g}};
}

}  // namespace

int cmd_andrica(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PrimeBound bound(config.limit);
  std::optional<CheckpointPolicy> persist;
  if (config.checkpoint_path) persist = CheckpointPolicy{*config.checkpoint_path, config.checkpoint_every};
  const AndricaReport report = verify_range(bound, config.plan(), load_resume(config), persist);

  Table table;
  table.columns = {"verified_below", "violations", "witness_n", "witness_p", "witness_q", "max_value"};
  const ConsecutivePair witness = report.max_witness.value_or(ConsecutivePair{});
  table.rows.push_back({report.verified_below, static_cast<std::uint64_t>(report.violations.size()), witness.n,
                        witness.p, witness.q, report.max_value});

  ordered_json meta = base_meta(kAndricaCommand, config);
  meta["limit_applies_to"] = "q, the larger prime of each pair";
  meta["test"] = "(g - 1)^2 < 4p, exact integer arithmetic";
  auto violations = ordered_json::array();
  for (const ConsecutivePair& pair : report.violations) {
    violations.push_back(pair_json(pair));
    if (config.format == OutputFormat::csv) {
      err << "violation: n=" << pair.n << " p=" << pair.p << " q=" << pair.q << " gap=" << pair.g << '\n';
    }
  }
  meta["violation_pairs"] = std::move(violations);
  write_table(out, config.format, table, meta);
  return report.violations.empty() ? kExitOk : kExitFailure;
}

int cmd_records(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ExponentPair ab = exponents_for_records(config);
  const RecordKind kind = parse_record_kind(config.kind);
  const std::vector<RecordEvent> events = scan_records(config, ab, kind);

  Table table;
  table.columns = {"n", "p", "q", "gap", "value"};
  for (const RecordEvent& e : events) table.rows.push_back({e.n, e.p, e.q, e.g, e.value});

  ordered_json meta = base_meta(kRecordsCommand, config);
  meta["kind"] = to_string(kind);
  meta["note"] = kind == RecordKind::minimum
                     ? "strict running minima of p^beta (q^alpha - p^alpha) over pairs with q < limit"
                     : "strict running maxima over the scanned range; an empirical sup, not a proven constant";
  write_table(out, config.format, table, meta);
  return kExitOk;
}

int cmd_smarandache(const RunConfig& config, std::ostream& out, std::ostream&) {
  const GammaMinimum best = smarandache_scan(PrimeBound(config.limit), config.plan());
  Table table;
  table.columns = {"min_gamma", "witness_p", "witness_q", "residual"};
  table.rows.push_back({best.gamma, best.witness.p, best.witness.q, best.residual});
  ordered_json meta = base_meta("smarandache", config);
  meta["note"] = "empirical minimum over consecutive pairs with q < limit";
  write_table(out, config.format, table, meta);
  return kExitOk;
}

int cmd_alpha_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.c_values.empty()) throw UsageError("--c needs at least one value");
  for (const double c : config.c_values) {
    if (!(c > 0) || !std::isfinite(c)) throw UsageError("--c values must be positive, got " + format_real(c));
  }
  std::vector<AlphaCurveRow> rows;
  try {
    rows = alpha_of_c(config.c_values, PrimeBound(config.limit), config.plan());
  } catch (const AlphaCurveError& e) {
    err << "solver range error at C=" << format_real(e.c()) << " p=" << e.pair().p << " q=" << e.pair().q
        << " gamma=" << format_real(e.gamma()) << ": " << e.what() << '\n';
    return kExitFailure;
  }
  Table table;
  table.columns = {"C", "alpha", "witness_p", "witness_q", "residual"};
  for (const AlphaCurveRow& row : rows) {
    table.rows.push_back({row.c, row.minimum.gamma, row.minimum.witness.p, row.minimum.witness.q,
                          row.minimum.residual});
  }
  ordered_json meta = base_meta("alpha-curve", config);
  meta["c_values"] = config.c_values;
  meta["note"] = "alpha(C) is the empirical minimum over consecutive pairs with q < limit; "
                 "whether it is attained asymptotically is not addressed";
  write_table(out, config.format, table, meta);
  return kExitOk;
}

int cmd_gapstats(const RunConfig& config, std::ostream& out, std::ostream&) {
  std::vector<RatioKind> kinds;
  if (config.kind.empty() || config.kind == "all") {
    kinds = {RatioKind::cramer, RatioKind::bhp, RatioKind::conj1};
  } else if (config.kind == "cramer") {
    kinds = {RatioKind::cramer};
  } else if (config.kind == "bhp") {
    kinds = {RatioKind::bhp};
  } else if (config.kind == "conj1") {
    kinds = {RatioKind::conj1};
  } else {
    throw UsageError("--kind must be cramer, bhp, conj1 or all for gapstats, got '" + config.kind + "'");
  }
  if (!(config.alpha >= 0 && config.alpha < 1)) throw UsageError("--alpha must lie in [0, 1) for gapstats");

  std::vector<RatioTracker> trackers;
  std::vector<std::vector<RatioRecord>> records(kinds.size());
  for (const RatioKind kind : kinds) trackers.emplace_back(kind, config.alpha);
  for (const ConsecutivePair& pair : PairStream(PrimeBound(config.limit), config.plan())) {
    for (std::size_t i = 0; i < trackers.size(); ++i) {
      if (auto record = trackers[i].observe(pair)) records[i].push_back(*record);
    }
  }

  Table table;
  table.columns = {"kind", "n", "p", "q", "gap", "ratio"};
  for (const auto& stream : records) {
    for (const RatioRecord& r : stream) table.rows.push_back({std::string(to_string(r.kind)), r.n, r.p, r.q, r.g, r.ratio});
  }
  ordered_json meta = base_meta("gapstats", config);
  meta["cramer_normalization"] = "g / (ln p)^2, natural log, normalized by p rather than by the index n";
  meta["bhp_ratio"] = "g / p^0.525, reported only; the implied constant is unknown";
  meta["conj1_ratio"] = "q^alpha - p^alpha running maxima; an empirical sup";
  write_table(out, config.format, table, meta);
  return kExitOk;
}

namespace {

void add_common(CLI::App* sub, RunConfig& config, std::string& limit_text, std::string& format_text) {
  sub->add_option("--limit", limit_text, "Exclusive bound on q, the larger prime of each pair (4.26e8, 100_000_000)")
      ->required();
  sub->add_option("--segment-span", config.segment_span, "Numbers per sieve segment")
      ->capture_default_str();
  sub->add_option("--threads", config.threads, "Sieve threads")
      ->envname("PRIMEGAP_THREADS")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  sub->add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_checkpointing(CLI::App* sub, RunConfig& config) {
  sub->add_option("--checkpoint", config.checkpoint_path, "Checkpoint file, written atomically");
  sub->add_flag("--resume", config.resume, "Resume from --checkpoint");
  sub->add_option("--checkpoint-every", config.checkpoint_every, "Numbers sieved between checkpoints")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Empirical gaps between powers of consecutive primes", args.empty() ? "primegap" : args.front());
  app.require_subcommand(1);

  RunConfig config;
  std::string limit_text;
  std::string format_text = "csv";

  auto* andrica = app.add_subcommand("andrica", "Verify sqrt(p_{n+1}) - sqrt(p_n) < 1 exactly for all pairs below the limit");
  add_common(andrica, config, limit_text, format_text);
  add_checkpointing(andrica, config);

  auto* records = app.add_subcommand("records", "Record minima/maxima of p_n^beta (p_{n+1}^alpha - p_n^alpha)");
  add_common(records, config, limit_text, format_text);
  add_checkpointing(records, config);
  records->add_option("--alpha", config.alpha)->capture_default_str();
  records->add_option("--beta", config.beta)->capture_default_str();
  records->add_option("--kind", config.kind, "min or max")->check(CLI::IsMember({"min", "max"}));

  auto* smarandache = app.add_subcommand("smarandache", "Smallest gamma with p_{n+1}^gamma - p_n^gamma = 1");
  add_common(smarandache, config, limit_text, format_text);

  auto* alpha_curve = app.add_subcommand("alpha-curve", "Smallest alpha with p_{n+1}^alpha - p_n^alpha = C per C");
  add_common(alpha_curve, config, limit_text, format_text);
  alpha_curve->add_option("--c", config.c_values, "Comma-separated C values")->delimiter(',')->required();

  auto* gapstats = app.add_subcommand("gapstats", "Running maxima of Cramer, BHP and q^alpha - p^alpha ratios");
  add_common(gapstats, config, limit_text, format_text);
  gapstats->add_option("--kind", config.kind, "cramer, bhp, conj1 or all")
      ->check(CLI::IsMember({"cramer", "bhp", "conj1", "all"}));
  gapstats->add_option("--alpha", config.alpha, "Exponent for conj1")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);
  Command command = nullptr;
  if (andrica->parsed()) command = cmd_andrica;
  if (records->parsed()) command = cmd_records;
  if (smarandache->parsed()) command = cmd_smarandache;
  if (alpha_curve->parsed()) command = cmd_alpha_curve;
  if (gapstats->parsed()) command = cmd_gapstats;

  try {
    config.limit = parse_limit(limit_text);
    config.format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
    (void)PrimeBound(config.limit);
    config.plan().validate();
    if (config.resume && !config.checkpoint_path) throw UsageError("--resume needs --checkpoint PATH");
    return command(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const BoundError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace primegap::cli
