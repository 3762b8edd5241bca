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

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "armada/c_api.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCampaign = 1;
constexpr int kExitUsage = 2;

int Report(armada_status st, const char *what) {
  std::fprintf(stderr, "armada: %s: %s\n", what, armada_last_error());
  if (st == ARMADA_ERR_USAGE || st == ARMADA_ERR_CONFIG) return kExitUsage;
  return kExitCampaign;
}

struct RunArgs {
  std::string config;
  std::string out;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> rounds;
  std::optional<double> duration_min;
};

int CmdRun(const RunArgs &a) {
  armada_config *cfg = nullptr;
  armada_status st = armada_config_load(a.config.c_str(), &cfg);
  if (st != ARMADA_OK) return Report(st, "loading config");
  if (a.seed) armada_config_set_seed(cfg, *a.seed);
  if (a.rounds && (st = armada_config_set_max_rounds(cfg, *a.rounds)) != ARMADA_OK) {
    armada_config_free(cfg);
    return Report(st, "--rounds");
  }
  if (a.duration_min &&
      (st = armada_config_set_duration_min(cfg, *a.duration_min)) != ARMADA_OK) {
    armada_config_free(cfg);
    return Report(st, "--duration");
  }

  armada_campaign *c = nullptr;
  st = armada_campaign_create(cfg, a.out.c_str(), &c);
  armada_config_free(cfg);
  if (st != ARMADA_OK) return Report(st, "creating campaign");

  armada_status run = armada_campaign_run(c);
  int code = kExitOk;
  if (run != ARMADA_OK) code = Report(run, "campaign");
  st = armada_campaign_write_outputs(c, a.out.c_str());
  if (st != ARMADA_OK && code == kExitOk) code = Report(st, "writing outputs");
  std::printf("%llu rounds, %llu branches covered\n",
              static_cast<unsigned long long>(armada_campaign_rounds(c)),
              static_cast<unsigned long long>(armada_campaign_branches(c)));
  armada_campaign_free(c);
  return code;
}

int CmdCompare(const std::vector<std::string> &configs, unsigned trials, unsigned threads,
               const std::string &out) {
  std::vector<const char *> paths;
  for (const std::string &p : configs) paths.push_back(p.c_str());
  armada_status st = armada_compare(paths.data(), paths.size(), trials, threads, out.c_str());
  if (st != ARMADA_OK) return Report(st, "compare");
  char *text = nullptr;
  st = armada_score_dir(out.c_str(), &text);
  if (st != ARMADA_OK) return Report(st, "score");
  std::fputs(text, stdout);
  armada_string_free(text);
  return kExitOk;
}

int CmdScore(const std::string &in) {
  char *text = nullptr;
  armada_status st = armada_score_dir(in.c_str(), &text);
  if (st != ARMADA_OK) return Report(st, "score");
  std::fputs(text, stdout);
  armada_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  armada_set_log_level_from_env();

  CLI::App app{"Bandit-scheduled fuzzer ensemble campaigns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", armada_version());

  RunArgs run;
  CLI::App *run_cmd = app.add_subcommand("run", "Run one campaign");
  run_cmd->add_option("--config", run.config, "Campaign config file")->required();
  run_cmd->add_option("--out", run.out, "Output directory")->required();
  run_cmd->add_option("--seed", run.seed, "Override the rng seed");
  run_cmd->add_option("--rounds", run.rounds, "Stop after N rounds");
  run_cmd->add_option("--duration", run.duration_min, "Stop after MIN minutes of campaign time");

  std::vector<std::string> configs;
  unsigned trials = 1, threads = 0;
  std::string compare_out;
  CLI::App *cmp_cmd = app.add_subcommand("compare", "Compare strategies over repeated trials");
  cmp_cmd->add_option("--configs", configs, "One config per strategy")->required();
  cmp_cmd->add_option("--trials", trials, "Trials per strategy and target")
      ->required()
      ->check(CLI::PositiveNumber);
  cmp_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  cmp_cmd->add_option("--out", compare_out, "Output directory")->required();

  std::string score_in;
  CLI::App *score_cmd = app.add_subcommand("score", "Score a finished comparison");
  score_cmd->add_option("--in", score_in, "Directory holding final_coverage.csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (*run_cmd) return CmdRun(run);
  if (*cmp_cmd) return CmdCompare(configs, trials, threads, compare_out);
  if (*score_cmd) return CmdScore(score_in);
  return kExitUsage;
}
