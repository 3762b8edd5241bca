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

#ifndef ARMADA_C_API_H_
#define ARMADA_C_API_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(ARMADA_BUILDING_SHARED)
#define ARMADA_API __attribute__((visibility("default")))
#else
#define ARMADA_API
#endif

typedef enum armada_status {
  ARMADA_OK = 0,
  ARMADA_ERR_USAGE = 1,
  ARMADA_ERR_CONFIG = 2,
  ARMADA_ERR_IO = 3,
  ARMADA_ERR_ORDERING = 4,
  ARMADA_ERR_DOMAIN = 5,
  ARMADA_ERR_PROTOCOL = 6,
  ARMADA_ERR_CAMPAIGN = 7,
  ARMADA_ERR_INTERNAL = 99
} armada_status;

typedef struct armada_config armada_config;
typedef struct armada_campaign armada_campaign;

typedef struct armada_round_info {
  uint64_t round;
  uint64_t fuzzer;
  int status;  // 0 completed, 1 skipped, 2 crashed, 3 sync failed
  uint64_t cycles;
  int64_t duration_ms;
  int64_t clock_ms;
  uint64_t raw_reward;
  double reward;
  int rhat;
  uint64_t accepted;
  uint64_t branches;
  int reset_fired;
} armada_round_info;

// Message for the last failed call on this thread. Never NULL.
ARMADA_API const char *armada_last_error(void);
ARMADA_API const char *armada_version(void);
// Applies CAMPAIGN_LOG (trace, debug, info, warn, error, off).
ARMADA_API void armada_set_log_level_from_env(void);

ARMADA_API armada_status armada_config_load(const char *path, armada_config **out);
ARMADA_API armada_status armada_config_set_seed(armada_config *cfg, uint64_t seed);
ARMADA_API armada_status armada_config_set_max_rounds(armada_config *cfg, uint64_t rounds);
ARMADA_API armada_status armada_config_set_duration_min(armada_config *cfg, double minutes);
ARMADA_API void armada_config_free(armada_config *cfg);

// out_dir may be NULL for an in-memory campaign. Otherwise the trace goes to
// out_dir/trace.tsv and, unless the config disables it, seeds to out_dir/queue.
ARMADA_API armada_status armada_campaign_create(const armada_config *cfg, const char *out_dir,
                                                armada_campaign **out);
// info may be NULL.
ARMADA_API armada_status armada_campaign_run_round(armada_campaign *c, armada_round_info *info);
ARMADA_API int armada_campaign_done(const armada_campaign *c);
// Runs to the stop condition. Returns ARMADA_ERR_CAMPAIGN if it aborted.
ARMADA_API armada_status armada_campaign_run(armada_campaign *c);
// coverage.csv and summary.txt.
ARMADA_API armada_status armada_campaign_write_outputs(const armada_campaign *c,
                                                       const char *out_dir);
ARMADA_API uint64_t armada_campaign_rounds(const armada_campaign *c);
ARMADA_API uint64_t armada_campaign_branches(const armada_campaign *c);
ARMADA_API void armada_campaign_free(armada_campaign *c);

// Runs `trials` campaigns per (config, target) pair and writes the
// comparison files into out_dir. threads = 0 uses every core.
ARMADA_API armada_status armada_compare(const char *const *config_paths, size_t n,
                                        unsigned trials, unsigned threads,
                                        const char *out_dir);
// Recomputes the score table from in_dir/final_coverage.csv. The caller
// releases *text with armada_string_free.
ARMADA_API armada_status armada_score_dir(const char *in_dir, char **text);
ARMADA_API void armada_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif  // ARMADA_C_API_H_
