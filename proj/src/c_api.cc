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

#include "armada/c_api.h"

#include <spdlog/spdlog.h>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "armada/campaign.h"
#include "armada/config.h"
#include "armada/error.h"
#include "armada/report.h"
#include "armada/text_util.h"

struct armada_config {
  armada::ConfigFile file;
};

struct armada_campaign {
  armada::CampaignConfig config;
  std::unique_ptr<armada::Campaign> campaign;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
armada_status Guard(F &&f) {
  try {
    f();
    g_last_error.clear();
    return ARMADA_OK;
  } catch (const armada::Error &e) {
    g_last_error = e.what();
    return static_cast<armada_status>(static_cast<int>(e.code()));
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return ARMADA_ERR_INTERNAL;
  }
}

armada_status NullArg(const char *what) {
  g_last_error = std::string(what) + " is NULL";
  return ARMADA_ERR_USAGE;
}

}  // namespace

extern "C" {

const char *armada_last_error(void) { return g_last_error.c_str(); }

const char *armada_version(void) { return "0.1.0"; }

void armada_set_log_level_from_env(void) {
  const char *v = std::getenv("CAMPAIGN_LOG");
  spdlog::set_level(v && *v ? spdlog::level::from_str(v) : spdlog::level::warn);
}

armada_status armada_config_load(const char *path, armada_config **out) {
  if (!path) return NullArg("path");
  if (!out) return NullArg("out");
  *out = nullptr;
  return Guard([&] {
    auto cfg = std::make_unique<armada_config>();
    cfg->file = armada::LoadConfig(path);
    *out = cfg.release();
  });
}

armada_status armada_config_set_seed(armada_config *cfg, uint64_t seed) {
  if (!cfg) return NullArg("cfg");
  cfg->file.campaign.rng_seed = seed;
  return ARMADA_OK;
}

armada_status armada_config_set_max_rounds(armada_config *cfg, uint64_t rounds) {
  if (!cfg) return NullArg("cfg");
  if (rounds == 0) {
    g_last_error = "round limit must be positive";
    return ARMADA_ERR_USAGE;
  }
  cfg->file.campaign.stop.max_rounds = rounds;
  return ARMADA_OK;
}

armada_status armada_config_set_duration_min(armada_config *cfg, double minutes) {
  if (!cfg) return NullArg("cfg");
  if (!(minutes > 0)) {
    g_last_error = "duration must be positive";
    return ARMADA_ERR_USAGE;
  }
  cfg->file.campaign.stop.duration_ms = static_cast<int64_t>(minutes * 60000.0);
  return ARMADA_OK;
}

void armada_config_free(armada_config *cfg) { delete cfg; }

armada_status armada_campaign_create(const armada_config *cfg, const char *out_dir,
                                     armada_campaign **out) {
  if (!cfg) return NullArg("cfg");
  if (!out) return NullArg("out");
  *out = nullptr;
  return Guard([&] {
    auto c = std::make_unique<armada_campaign>();
    c->config = cfg->file.Single();
    if (out_dir) {
      std::filesystem::path dir(out_dir);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) armada::Fail(armada::ErrorCode::kIo, "cannot create " + dir.string());
      if (cfg->file.store_seeds) c->config.campaign_dir = dir / "queue";
      c->config.trace_path = dir / "trace.tsv";
    }
    c->campaign = std::make_unique<armada::Campaign>(c->config);
    *out = c.release();
  });
}

armada_status armada_campaign_run_round(armada_campaign *c, armada_round_info *info) {
  if (!c) return NullArg("campaign");
  return Guard([&] {
    armada::RoundRecord r = c->campaign->RunRound();
    if (!info) return;
    info->round = r.round;
    info->fuzzer = r.fuzzer;
    info->status = static_cast<int>(r.status);
    info->cycles = r.cycles;
    info->duration_ms = r.duration_ms;
    info->clock_ms = r.clock_ms;
    info->raw_reward = r.raw_reward;
    info->reward = r.reward;
    info->rhat = r.rhat;
    info->accepted = r.accepted;
    info->branches = r.branches;
    info->reset_fired = r.reset_fired ? 1 : 0;
  });
}

int armada_campaign_done(const armada_campaign *c) { return c && c->campaign->Done() ? 1 : 0; }

armada_status armada_campaign_run(armada_campaign *c) {
  if (!c) return NullArg("campaign");
  armada_status st = ARMADA_OK;
  armada_status g = Guard([&] {
    armada::CampaignReport r = c->campaign->Run();
    if (r.aborted) {
      g_last_error = r.abort_reason;
      st = ARMADA_ERR_CAMPAIGN;
    }
  });
  if (g != ARMADA_OK) return g;
  if (st != ARMADA_OK) {
    g_last_error = c->campaign->Report().abort_reason;
  }
  return st;
}

armada_status armada_campaign_write_outputs(const armada_campaign *c, const char *out_dir) {
  if (!c) return NullArg("campaign");
  if (!out_dir) return NullArg("out_dir");
  return Guard([&] {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) armada::Fail(armada::ErrorCode::kIo, "cannot create " + dir.string());
    armada::CampaignReport r = c->campaign->Report();
    armada::WriteFile(dir / "coverage.csv", armada::CoverageCsv(armada::CoverageSeries(r)));
    armada::WriteFile(dir / "summary.txt", armada::SummaryText(r, c->config));
  });
}

uint64_t armada_campaign_rounds(const armada_campaign *c) {
  return c ? c->campaign->trace().size() : 0;
}

uint64_t armada_campaign_branches(const armada_campaign *c) {
  return c ? c->campaign->pool().branch_union().size() : 0;
}

void armada_campaign_free(armada_campaign *c) { delete c; }

armada_status armada_compare(const char *const *config_paths, size_t n, unsigned trials,
                             unsigned threads, const char *out_dir) {
  if (!config_paths) return NullArg("config_paths");
  if (!out_dir) return NullArg("out_dir");
  return Guard([&] {
    std::vector<armada::ConfigFile> configs;
    for (size_t i = 0; i < n; ++i) {
      if (!config_paths[i]) armada::Fail(armada::ErrorCode::kUsage, "config path is NULL");
      configs.push_back(armada::LoadConfig(config_paths[i]));
    }
    armada::Comparison cmp = armada::RunComparison(configs, trials, threads);
    armada::WriteComparison(cmp, out_dir);
  });
}

armada_status armada_score_dir(const char *in_dir, char **text) {
  if (!in_dir) return NullArg("in_dir");
  if (!text) return NullArg("text");
  *text = nullptr;
  return Guard([&] {
    std::string csv = armada::ReadFile(std::filesystem::path(in_dir) / "final_coverage.csv");
    armada::ScoreTable t = armada::ComputeScores(armada::ParseFinalCoverageCsv(csv));
    std::string s = armada::FormatScoreTable(t);
    char *buf = static_cast<char *>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *text = buf;
  });
}

void armada_string_free(char *s) { std::free(s); }

}  // extern "C"
