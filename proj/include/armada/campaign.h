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

#ifndef ARMADA_CAMPAIGN_H_
#define ARMADA_CAMPAIGN_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "armada/bandit.h"
#include "armada/fuzzer.h"
#include "armada/reward_engine.h"
#include "armada/rng.h"
#include "armada/seed_pool.h"
#include "armada/synthetic_target.h"

namespace armada {

enum class SchedulerKind { kThompson, kRandom, kGreedy, kRoundRobin };
enum class RewardMode { kInterval, kNaive };

const char *SchedulerName(SchedulerKind kind);
const char *RewardModeName(RewardMode mode);

struct FuzzerSpec {
  std::string name;
  FuzzerKind kind = FuzzerKind::kSimulated;
  size_t profile = 0;                // simulated: row of the target's tables
  std::vector<std::string> command;  // external: argv
};

// Any condition that is set ends the campaign once reached.
struct StopCondition {
  std::optional<uint64_t> max_rounds;
  std::optional<int64_t> duration_ms;  // campaign clock, see Campaign::clock_ms
  std::optional<uint64_t> target_coverage;

  bool any() const { return max_rounds || duration_ms || target_coverage; }
};

struct CampaignConfig {
  std::string name = "campaign";
  std::vector<FuzzerSpec> fuzzers;
  std::shared_ptr<const SyntheticTarget> target;
  std::string target_name;
  int64_t round_budget_ms = 120'000;      // T_I
  int64_t reset_interval_ms = 7'200'000;  // I_R
  bool reset_enabled = true;
  StopCondition stop;
  uint64_t rng_seed = 1;
  SchedulerKind scheduler = SchedulerKind::kThompson;
  bool sync_enabled = true;
  RewardMode reward_mode = RewardMode::kInterval;
  // Round timeout is watchdog_factor * round_budget_ms.
  int64_t watchdog_factor = 3;
  // When set: global_queue/, fuzzers/<i>/queue/ live here.
  std::filesystem::path campaign_dir;
  // When set: one trace record per round is appended and flushed.
  std::filesystem::path trace_path;

  // Throws Error(kConfig).
  void Validate() const;
  bool simulated_only() const;
};

// Auto-cycle bookkeeping for one fuzzer.
struct FuzzerStats {
  int64_t total_duration_ms = 0;
  uint64_t num_selection = 0;
  int64_t avg_cycle_time_ms = 0;  // 0 until first selection
  uint64_t cycles = 1;
};

// total += d_t; num_selection += 1;
// avg = max(1, floor(total / num_selection)); cycles = max(1, floor(T_I / avg)).
void UpdateAutoCycle(FuzzerStats &stats, int64_t d_t_ms, int64_t round_budget_ms);

struct ResetTimer {
  int64_t elapsed_ms = 0;
};

// timer += d_t; on reaching I_R the timer restarts and every arm goes back to
// Beta(1, 1). Returns whether the reset fired.
bool CheckReset(ResetTimer &timer, int64_t d_t_ms, int64_t reset_interval_ms,
                ThompsonBandit &bandit);

enum class RoundStatus { kCompleted, kSkipped, kCrashed, kSyncFailed };
const char *RoundStatusName(RoundStatus status);

struct RoundRecord {
  Round round = 0;
  size_t fuzzer = 0;
  RoundStatus status = RoundStatus::kCompleted;
  uint64_t cycles = 0;  // cycles requested by auto-cycle
  uint64_t cycles_completed = 0;
  int64_t duration_ms = 0;
  int64_t clock_ms = 0;  // campaign clock after the round
  uint64_t raw_reward = 0;
  double reward = 0.0;
  int rhat = 0;
  size_t accepted = 0;
  size_t branches = 0;  // global branch count after the round
  bool reset_fired = false;
  std::vector<ArmState> arms;  // after update (and reset, if it fired)

  friend bool operator==(const RoundRecord &, const RoundRecord &) = default;
};

// One tab-separated line, fields in fixed order:
// round fuzzer status cycles cycles_completed duration_ms clock_ms raw_reward
// reward rhat accepted branches reset arms(alpha:beta,...)
std::string FormatTraceRecord(const RoundRecord &r);
RoundRecord ParseTraceRecord(std::string_view line);
std::string TraceHeader(const CampaignConfig &config);

struct CampaignReport {
  std::string name;
  std::vector<RoundRecord> trace;
  size_t initial_branches = 0;
  size_t final_branches = 0;
  int64_t clock_ms = 0;
  uint64_t resets = 0;
  std::vector<std::string> fuzzer_names;
  std::vector<uint64_t> selections;
  std::vector<double> reward_sums;
  bool aborted = false;
  std::string abort_reason;
};

// Runs the allocation loop over a roster of fuzzers:
//   select -> sync -> run -> merge -> evaluate -> update.
class Campaign {
 public:
  // Builds the roster described by `config`.
  explicit Campaign(CampaignConfig config);
  // Uses a caller-supplied roster (one per config.fuzzers entry, or any
  // non-empty roster when config.fuzzers is empty).
  Campaign(CampaignConfig config, std::vector<std::unique_ptr<Fuzzer>> roster);
  ~Campaign();
  Campaign(const Campaign &) = delete;
  Campaign &operator=(const Campaign &) = delete;

  RoundRecord RunRound();
  bool Done() const;
  // Runs rounds until the stop condition holds. Errors abort the campaign;
  // the report then carries the partial trace.
  CampaignReport Run();
  CampaignReport Report() const;

  const CampaignConfig &config() const { return config_; }
  const std::vector<RoundRecord> &trace() const { return trace_; }
  const SeedPool &pool() const { return pool_; }
  const DiscoveryLog &discovery_log() const { return log_; }
  const RewardNormalizer &normalizer() const { return normalizer_; }
  const ThompsonBandit &bandit() const { return bandit_; }
  const FuzzerStats &stats(size_t i) const { return stats_.at(i); }
  Fuzzer &fuzzer(size_t i) { return *roster_.at(i); }
  size_t roster_size() const { return roster_.size(); }
  int64_t clock_ms() const;
  const ResetTimer &reset_timer() const { return timer_; }
  // Snapshot of the global pool hashes taken at the last selection.
  const HashSet &last_sync_snapshot() const { return last_snapshot_; }

 private:
  void Init();
  size_t Select();
  void AppendTrace(const RoundRecord &r);

  CampaignConfig config_;
  std::vector<std::unique_ptr<Fuzzer>> roster_;
  std::vector<FuzzerStats> stats_;
  std::vector<double> reward_sums_;
  SeedPool pool_;
  DiscoveryLog log_;
  RewardNormalizer normalizer_;
  ThompsonBandit bandit_;
  Rng rng_;
  ResetTimer timer_;
  int64_t virtual_clock_ms_ = 0;
  std::chrono::steady_clock::time_point wall_start_;
  uint64_t resets_ = 0;
  std::vector<RoundRecord> trace_;
  std::ofstream trace_out_;
  HashSet last_snapshot_;
  bool aborted_ = false;
  std::string abort_reason_;
};

CampaignReport RunCampaign(const CampaignConfig &config);

}  // namespace armada

#endif  // ARMADA_CAMPAIGN_H_
