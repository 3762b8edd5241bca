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

#include "armada/config.h"

#include <cmath>
#include <map>

#include "armada/error.h"
#include "armada/text_util.h"

namespace armada {

namespace {

[[noreturn]] void ConfigError(size_t line_no, const std::string &msg) {
  Fail(ErrorCode::kConfig, "line " + std::to_string(line_no) + ": " + msg);
}

int64_t ScaledMs(std::string_view v, double scale, size_t line_no) {
  double d;
  if (!ParseDouble(v, d) || !(d > 0.0)) {
    ConfigError(line_no, "expected a positive number, got '" + std::string(v) + "'");
  }
  return static_cast<int64_t>(std::llround(d * scale));
}

}  // namespace

ConfigFile ParseConfig(std::string_view text, const std::filesystem::path &base_dir) {
  ConfigFile cfg;
  CampaignConfig &c = cfg.campaign;
  std::map<size_t, FuzzerSpec> fuzzers;
  std::string section;
  size_t fuzzer_index = 0;
  size_t line_no = 0;

  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') ConfigError(line_no, "unterminated section header");
      section = std::string(line.substr(1, line.size() - 2));
      if (section.rfind("fuzzer.", 0) != 0) ConfigError(line_no, "unknown section [" + section + "]");
      uint64_t idx;
      if (!ParseU64(std::string_view(section).substr(7), idx)) {
        ConfigError(line_no, "bad fuzzer section [" + section + "]");
      }
      fuzzer_index = idx;
      if (fuzzers.contains(fuzzer_index)) ConfigError(line_no, "duplicate [" + section + "]");
      fuzzers[fuzzer_index] = FuzzerSpec{"fuzzer" + std::to_string(idx),
                                         FuzzerKind::kSimulated, idx, {}};
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) ConfigError(line_no, "expected 'key = value'");
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }

    if (!section.empty()) {
      FuzzerSpec &f = fuzzers[fuzzer_index];
      if (key == "name") {
        f.name = std::string(value);
      } else if (key == "kind") {
        if (value == "simulated") f.kind = FuzzerKind::kSimulated;
        else if (value == "external") f.kind = FuzzerKind::kExternal;
        else ConfigError(line_no, "kind must be simulated or external");
      } else if (key == "profile") {
        uint64_t p;
        if (!ParseU64(value, p)) ConfigError(line_no, "bad profile");
        f.profile = p;
      } else if (key == "command") {
        f.command.clear();
        for (std::string_view a : SplitWhitespace(value)) f.command.emplace_back(a);
      } else {
        ConfigError(line_no, "unknown fuzzer key '" + key + "'");
      }
      continue;
    }

    bool b;
    uint64_t u;
    if (key == "name") {
      c.name = std::string(value);
    } else if (key == "target" || key == "targets") {
      for (const std::string &item : SplitList(value, ',')) {
        std::filesystem::path p = item;
        if (p.is_relative()) p = base_dir / p;
        std::shared_ptr<const SyntheticTarget> target;
        try {
          target = std::make_shared<const SyntheticTarget>(SyntheticTarget::Load(p));
        } catch (const Error &e) {
          ConfigError(line_no, e.what());
        }
        cfg.targets.push_back({p.stem().string(), std::move(target)});
      }
    } else if (key == "scheduler") {
      if (value == "ts") c.scheduler = SchedulerKind::kThompson;
      else if (value == "random") c.scheduler = SchedulerKind::kRandom;
      else if (value == "greedy") c.scheduler = SchedulerKind::kGreedy;
      else if (value == "round_robin") c.scheduler = SchedulerKind::kRoundRobin;
      else ConfigError(line_no, "scheduler must be ts, random, greedy or round_robin");
    } else if (key == "reward") {
      if (value == "interval") c.reward_mode = RewardMode::kInterval;
      else if (value == "naive") c.reward_mode = RewardMode::kNaive;
      else ConfigError(line_no, "reward must be interval or naive");
    } else if (key == "sync") {
      if (!ParseBool(value, b)) ConfigError(line_no, "sync must be true or false");
      c.sync_enabled = b;
    } else if (key == "reset") {
      if (!ParseBool(value, b)) ConfigError(line_no, "reset must be true or false");
      c.reset_enabled = b;
    } else if (key == "store_seeds") {
      if (!ParseBool(value, b)) ConfigError(line_no, "store_seeds must be true or false");
      cfg.store_seeds = b;
    } else if (key == "round_budget_s") {
      c.round_budget_ms = ScaledMs(value, 1000.0, line_no);
    } else if (key == "reset_interval_min") {
      c.reset_interval_ms = ScaledMs(value, 60'000.0, line_no);
    } else if (key == "watchdog_factor") {
      if (!ParseU64(value, u) || u == 0) ConfigError(line_no, "bad watchdog_factor");
      c.watchdog_factor = static_cast<int64_t>(u);
    } else if (key == "seed") {
      if (!ParseU64(value, u)) ConfigError(line_no, "bad seed");
      c.rng_seed = u;
    } else if (key == "sim_fuzzers") {
      if (!ParseU64(value, u) || u == 0) ConfigError(line_no, "bad sim_fuzzers");
      cfg.implicit_roster_size = u;
    } else if (key == "stop.rounds") {
      if (!ParseU64(value, u)) ConfigError(line_no, "bad stop.rounds");
      c.stop.max_rounds = u;
    } else if (key == "stop.duration_min") {
      c.stop.duration_ms = ScaledMs(value, 60'000.0, line_no);
    } else if (key == "stop.coverage") {
      if (!ParseU64(value, u)) ConfigError(line_no, "bad stop.coverage");
      c.stop.target_coverage = u;
    } else {
      ConfigError(line_no, "unknown key '" + key + "'");
    }
  }

  size_t expect = 0;
  for (auto &[idx, spec] : fuzzers) {
    if (idx != expect++) Fail(ErrorCode::kConfig, "[fuzzer.N] sections must be numbered 0..K-1");
    c.fuzzers.push_back(spec);
  }
  cfg.implicit_roster = c.fuzzers.empty();
  return cfg;
}

ConfigFile LoadConfig(const std::filesystem::path &path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const Error &) {
    Fail(ErrorCode::kConfig, "cannot read config file " + path.string());
  }
  try {
    ConfigFile cfg = ParseConfig(text, path.parent_path());
    cfg.path = path;
    if (cfg.campaign.name == "campaign") cfg.campaign.name = path.stem().string();
    return cfg;
  } catch (const Error &e) {
    Fail(e.code(), path.string() + ": " + e.what());
  }
}

CampaignConfig ConfigFile::WithTarget(const NamedTarget &t) const {
  CampaignConfig c = campaign;
  c.target = t.target;
  c.target_name = t.name;
  if (implicit_roster) {
    size_t n = implicit_roster_size ? implicit_roster_size : t.target->profile_count();
    c.fuzzers.clear();
    for (size_t i = 0; i < n; ++i) {
      c.fuzzers.push_back({"sim" + std::to_string(i), FuzzerKind::kSimulated, i, {}});
    }
  }
  c.Validate();
  return c;
}

CampaignConfig ConfigFile::Single() const {
  if (targets.size() > 1) {
    Fail(ErrorCode::kConfig, "config lists " + std::to_string(targets.size()) +
                                 " targets; a single campaign takes one");
  }
  if (targets.size() == 1) return WithTarget(targets[0]);
  if (implicit_roster) Fail(ErrorCode::kConfig, "no target and no [fuzzer.N] sections");
  campaign.Validate();
  return campaign;
}

}  // namespace armada
