// Copyright 2026 The Armada Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "armada/campaign.h"

#include <spdlog/spdlog.h>

#include <algorithm>

#include "armada/error.h"
#include "armada/external_fuzzer.h"
#include "armada/simulated_fuzzer.h"
#include "armada/text_util.h"

namespace armada {

const char *SchedulerName(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::kThompson: return "ts";
    case SchedulerKind::kRandom: return "random";
    case SchedulerKind::kGreedy: return "greedy";
    case SchedulerKind::kRoundRobin: return "round_robin";
  }
  return "?";
}

const char *RewardModeName(RewardMode mode) {
  return mode == RewardMode::kInterval ? "interval" : "naive";
}

const char *RoundStatusName(RoundStatus status) {
  switch (status) {
    case RoundStatus::kCompleted: return "completed";
    case RoundStatus::kSkipped: return "skipped";
    case RoundStatus::kCrashed: return "crashed";
    case RoundStatus::kSyncFailed: return "sync_failed";
  }
  return "?";
}

void CampaignConfig::Validate() const {
  if (round_budget_ms <= 0) Fail(ErrorCode::kConfig, "round budget must be > 0");
  if (reset_interval_ms <= 0) Fail(ErrorCode::kConfig, "reset interval must be > 0");
  if (watchdog_factor <= 0) Fail(ErrorCode::kConfig, "watchdog factor must be > 0");
  if (!stop.any()) Fail(ErrorCode::kConfig, "no stopping condition configured");
  for (const FuzzerSpec &f : fuzzers) {
    if (f.kind == FuzzerKind::kSimulated && !target) {
      Fail(ErrorCode::kConfig, "simulated fuzzer " + f.name + " needs a target");
    }
    if (f.kind == FuzzerKind::kExternal && f.command.empty()) {
      Fail(ErrorCode::kConfig, "external fuzzer " + f.name + " needs a command");
    }
  }
}

bool CampaignConfig::simulated_only() const {
  return std::all_of(fuzzers.begin(), fuzzers.end(), [](const FuzzerSpec &f) {
    return f.kind == FuzzerKind::kSimulated;
  });
}

void UpdateAutoCycle(FuzzerStats &stats, int64_t d_t_ms, int64_t round_budget_ms) {
  if (d_t_ms <= 0) Fail(ErrorCode::kDomain, "round duration must be > 0");
  stats.total_duration_ms += d_t_ms;
  stats.num_selection += 1;
  stats.avg_cycle_time_ms = std::max<int64_t>(
      1, stats.total_duration_ms / static_cast<int64_t>(stats.num_selection));
  stats.cycles = static_cast<uint64_t>(
      std::max<int64_t>(1, round_budget_ms / stats.avg_cycle_time_ms));
}

bool CheckReset(ResetTimer &timer, int64_t d_t_ms, int64_t reset_interval_ms,
                ThompsonBandit &bandit) {
  timer.elapsed_ms += d_t_ms;
  if (timer.elapsed_ms < reset_interval_ms) return false;
  timer.elapsed_ms = 0;
  bandit.Reset();
  return true;
}

// ---------------------------------------------------------------------------
// Trace records

std::string FormatTraceRecord(const RoundRecord &r) {
  std::string arms;
  for (size_t i = 0; i < r.arms.size(); ++i) {
    if (i) arms += ',';
    arms += FormatDouble(r.arms[i].alpha) + ":" + FormatDouble(r.arms[i].beta);
  }
  std::string out;
  auto field = [&out](const std::string &v) {
    if (!out.empty()) out += '\t';
    out += v;
  };
  field(std::to_string(r.round));
  field(std::to_string(r.fuzzer));
  field(RoundStatusName(r.status));
  field(std::to_string(r.cycles));
  field(std::to_string(r.cycles_completed));
  field(std::to_string(r.duration_ms));
  field(std::to_string(r.clock_ms));
  field(std::to_string(r.raw_reward));
  field(FormatDouble(r.reward));
  field(std::to_string(r.rhat));
  field(std::to_string(r.accepted));
  field(std::to_string(r.branches));
  field(r.reset_fired ? "1" : "0");
  field(arms);
  return out;
}

RoundRecord ParseTraceRecord(std::string_view line) {
  std::vector<std::string> f = SplitList(StripLineEnd(line), '\t');
  auto bad = [&]() { Fail(ErrorCode::kConfig, "malformed trace record: " + std::string(line)); };
  if (f.size() != 14) bad();
  RoundRecord r;
  uint64_t u;
  int64_t i;
  if (!ParseU64(f[0], r.round)) bad();
  if (!ParseU64(f[1], u)) bad();
  r.fuzzer = u;
  bool status_ok = false;
  for (RoundStatus s : {RoundStatus::kCompleted, RoundStatus::kSkipped,
                        RoundStatus::kCrashed, RoundStatus::kSyncFailed}) {
    if (f[2] == RoundStatusName(s)) {
      r.status = s;
      status_ok = true;
    }
  }
  if (!status_ok) bad();
  if (!ParseU64(f[3], r.cycles) || !ParseU64(f[4], r.cycles_completed)) bad();
  if (!ParseI64(f[5], r.duration_ms) || !ParseI64(f[6], r.clock_ms)) bad();
  if (!ParseU64(f[7], r.raw_reward) || !ParseDouble(f[8], r.reward)) bad();
  if (!ParseI64(f[9], i)) bad();
  r.rhat = static_cast<int>(i);
  if (!ParseU64(f[10], u)) bad();
  r.accepted = u;
  if (!ParseU64(f[11], u)) bad();
  r.branches = u;
  r.reset_fired = f[12] == "1";
  for (const std::string &arm : SplitList(f[13], ',')) {
    size_t colon = arm.find(':');
    ArmState a;
    if (colon == std::string::npos || !ParseDouble(arm.substr(0, colon), a.alpha) ||
        !ParseDouble(arm.substr(colon + 1), a.beta)) {
      bad();
    }
    r.arms.push_back(a);
  }
  return r;
}

std::string TraceHeader(const CampaignConfig &config) {
  std::string names;
  for (size_t i = 0; i < config.fuzzers.size(); ++i) {
    if (i) names += ',';
    names += config.fuzzers[i].name;
  }
  return "# armada-trace v1\tname=" + config.name + "\tseed=" +
         std::to_string(config.rng_seed) + "\tscheduler=" +
         SchedulerName(config.scheduler) + "\treward=" +
         RewardModeName(config.reward_mode) + "\tsync=" +
         (config.sync_enabled ? "1" : "0") + "\treset=" +
         (config.reset_enabled ? "1" : "0") + "\tfuzzers=" + names;
}

// ---------------------------------------------------------------------------
// Campaign

namespace {

std::vector<std::unique_ptr<Fuzzer>> BuildRoster(const CampaignConfig &config) {
  config.Validate();
  if (config.fuzzers.empty()) Fail(ErrorCode::kConfig, "roster is empty");
  std::vector<std::unique_ptr<Fuzzer>> roster;
  for (size_t i = 0; i < config.fuzzers.size(); ++i) {
    const FuzzerSpec &spec = config.fuzzers[i];
    std::filesystem::path queue;
    if (!config.campaign_dir.empty()) {
      queue = config.campaign_dir / "fuzzers" / std::to_string(i) / "queue";
    }
    if (spec.kind == FuzzerKind::kSimulated) {
      roster.push_back(std::make_unique<SimulatedFuzzer>(
          i, spec.name, config.target, spec.profile,
          DeriveSeed(config.rng_seed, 1000 + i), queue));
    } else {
      roster.push_back(
          std::make_unique<ExternalFuzzer>(i, spec.name, spec.command, queue));
    }
  }
  return roster;
}

SeedPool MakePool(const CampaignConfig &config) {
  if (config.campaign_dir.empty()) return SeedPool();
  return SeedPool(config.campaign_dir / "global_queue");
}

}  // namespace

Campaign::Campaign(CampaignConfig config)
    : Campaign(config, BuildRoster(config)) {}

Campaign::Campaign(CampaignConfig config, std::vector<std::unique_ptr<Fuzzer>> roster)
    : config_(std::move(config)),
      roster_(std::move(roster)),
      pool_(MakePool(config_)),
      bandit_(std::max<size_t>(1, roster_.size())),
      rng_(config_.rng_seed) {
  if (roster_.empty()) Fail(ErrorCode::kConfig, "roster is empty");
  if (!config_.fuzzers.empty() && config_.fuzzers.size() != roster_.size()) {
    Fail(ErrorCode::kConfig, "roster does not match configured fuzzers");
  }
  if (config_.fuzzers.empty()) {
    for (const auto &f : roster_) config_.fuzzers.push_back({f->name(), f->kind(), 0, {}});
  }
  Init();
}

Campaign::~Campaign() {
  for (auto &f : roster_) f->Shutdown();
}

void Campaign::Init() {
  stats_.assign(roster_.size(), FuzzerStats{});
  reward_sums_.assign(roster_.size(), 0.0);
  std::vector<BlockId> entries;
  if (config_.target) {
    for (size_t e : config_.target->entry_indices()) {
      entries.push_back(config_.target->blocks()[e]);
    }
  }
  log_.RegisterInitialCorpus({}, entries);
  wall_start_ = std::chrono::steady_clock::now();
  if (!config_.trace_path.empty()) {
    trace_out_.open(config_.trace_path, std::ios::trunc);
    if (!trace_out_) Fail(ErrorCode::kIo, "cannot create " + config_.trace_path.string());
    trace_out_ << TraceHeader(config_) << '\n';
    trace_out_.flush();
  }
}

int64_t Campaign::clock_ms() const {
  if (config_.simulated_only()) return virtual_clock_ms_;
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - wall_start_)
      .count();
}

bool Campaign::Done() const {
  if (aborted_) return true;
  const StopCondition &s = config_.stop;
  if (s.max_rounds && trace_.size() >= *s.max_rounds) return true;
  if (s.duration_ms && clock_ms() >= *s.duration_ms) return true;
  if (s.target_coverage && pool_.branch_union().size() >= *s.target_coverage) return true;
  return false;
}

size_t Campaign::Select() {
  switch (config_.scheduler) {
    case SchedulerKind::kThompson: return bandit_.Select(rng_);
    case SchedulerKind::kGreedy: return bandit_.SelectGreedy(rng_);
    case SchedulerKind::kRandom: return rng_.UniformIndex(roster_.size());
    case SchedulerKind::kRoundRobin: return trace_.size() % roster_.size();
  }
  return 0;
}

void Campaign::AppendTrace(const RoundRecord &r) {
  trace_.push_back(r);
  if (trace_out_.is_open()) {
    trace_out_ << FormatTraceRecord(r) << '\n';
    trace_out_.flush();
  }
}

RoundRecord Campaign::RunRound() {
  if (aborted_) Fail(ErrorCode::kUsage, "campaign was aborted");
  RoundRecord rec;
  rec.round = trace_.size() + 1;
  const Round t = rec.round;

  // (1) select
  const size_t k = Select();
  Fuzzer &f = *roster_[k];
  FuzzerStats &st = stats_[k];
  rec.fuzzer = k;
  rec.cycles = st.cycles;

  if (f.status() == FuzzerStatus::kCrashed) {
    try {
      f.WatchdogRestart();
    } catch (const Error &e) {
      spdlog::warn("fuzzer {} still down: {}", f.name(), e.what());
    }
  }

  // (2) sync global -> local
  last_snapshot_ = pool_.SnapshotHashes();
  if (config_.sync_enabled && f.status() == FuzzerStatus::kIdle) {
    try {
      f.ImportSeeds(pool_.Diff(f.local_hashes()));
    } catch (const Error &e) {
      spdlog::error("round {}: {}", t, e.what());
      rec.status = RoundStatus::kSyncFailed;
      rec.clock_ms = clock_ms();
      rec.branches = pool_.branch_union().size();
      rec.arms.assign(bandit_.arms().begin(), bandit_.arms().end());
      AppendTrace(rec);
      return rec;
    }
  }

  // (3) run
  CycleResult result;
  if (f.status() == FuzzerStatus::kIdle) {
    result = f.RunCycles(st.cycles, config_.watchdog_factor * config_.round_budget_ms, t);
  } else {
    result.status = FuzzerStatus::kCrashed;
    result.diagnostic = "fuzzer unavailable";
  }
  rec.cycles_completed = result.cycles_completed;
  rec.duration_ms = std::max<int64_t>(1, result.duration_ms);
  switch (f.status()) {
    case FuzzerStatus::kSkipped:
      rec.status = RoundStatus::kSkipped;
      f.FinishSkip();
      break;
    case FuzzerStatus::kCrashed:
      rec.status = RoundStatus::kCrashed;
      try {
        f.WatchdogRestart();
      } catch (const Error &e) {
        spdlog::warn("restart of fuzzer {} failed: {}", f.name(), e.what());
      }
      break;
    default:
      break;
  }

  // (4) merge into the global pool
  MergeResult merged = pool_.Merge(result.new_seeds, k, t);
  for (const std::string &d : merged.diagnostics) spdlog::warn("round {}: {}", t, d);
  rec.accepted = merged.accepted.size();

  // (5) evaluate
  if (config_.reward_mode == RewardMode::kInterval) {
    std::vector<SeedCoverage> coverage;
    coverage.reserve(merged.accepted.size());
    for (const SeedRecord &r : merged.accepted) coverage.push_back(r.coverage);
    rec.raw_reward = log_.EvaluateSeeds(t, coverage);
    rec.reward = std::clamp(normalizer_.Normalize(static_cast<double>(rec.raw_reward)), 0.0, 1.0);
    rec.rhat = Discretize(rec.reward, rng_);
  } else {
    rec.raw_reward = merged.accepted.size();
    rec.rhat = merged.accepted.empty() ? 0 : 1;
    rec.reward = rec.rhat;
  }

  // (6) update
  bandit_.Update(k, rec.rhat);
  reward_sums_[k] += rec.reward;
  UpdateAutoCycle(st, rec.duration_ms, config_.round_budget_ms);
  if (config_.reset_enabled) {
    rec.reset_fired = CheckReset(timer_, rec.duration_ms, config_.reset_interval_ms, bandit_);
    if (rec.reset_fired) ++resets_;
  } else {
    timer_.elapsed_ms += rec.duration_ms;
  }
  virtual_clock_ms_ += rec.duration_ms;

  rec.clock_ms = clock_ms();
  rec.branches = pool_.branch_union().size();
  rec.arms.assign(bandit_.arms().begin(), bandit_.arms().end());
  AppendTrace(rec);
  spdlog::debug("round {} fuzzer {} raw {} r {} rhat {} branches {}", t, k,
                rec.raw_reward, rec.reward, rec.rhat, rec.branches);
  return rec;
}

CampaignReport Campaign::Run() {
  while (!Done()) {
    try {
      RunRound();
    } catch (const std::exception &e) {
      aborted_ = true;
      abort_reason_ = e.what();
      spdlog::error("campaign {} aborted: {}", config_.name, e.what());
    }
  }
  if (trace_out_.is_open()) trace_out_.flush();
  return Report();
}

CampaignReport Campaign::Report() const {
  CampaignReport r;
  r.name = config_.name;
  r.trace = trace_;
  r.initial_branches = 0;
  r.final_branches = pool_.branch_union().size();
  r.clock_ms = clock_ms();
  r.resets = resets_;
  for (const auto &f : roster_) r.fuzzer_names.push_back(f->name());
  for (const FuzzerStats &s : stats_) r.selections.push_back(s.num_selection);
  r.reward_sums = reward_sums_;
  r.aborted = aborted_;
  r.abort_reason = abort_reason_;
  return r;
}

CampaignReport RunCampaign(const CampaignConfig &config) {
  Campaign campaign(config);
  return campaign.Run();
}

}  // namespace armada
