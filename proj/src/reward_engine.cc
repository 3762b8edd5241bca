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

#include "armada/reward_engine.h"

#include <algorithm>
#include <vector>

#include "armada/error.h"

namespace armada {

void DiscoveryLog::Record(BlockId block, Round round) {
  if (first_round_.emplace(block, round).second) {
    latest_round_ = std::max(latest_round_, round);
  }
}

void DiscoveryLog::RegisterInitialCorpus(std::span<const SeedCoverage> seeds,
                                         std::span<const BlockId> entry_blocks) {
  if (registered_) Fail(ErrorCode::kUsage, "initial corpus already registered");
  if (evaluated_ || !first_round_.empty() || !known_.empty()) {
    Fail(ErrorCode::kUsage, "initial corpus must be registered on an empty log");
  }
  registered_ = true;
  for (BlockId b : entry_blocks) Record(b, 0);
  for (const SeedCoverage &seed : seeds) {
    for (const Branch &br : seed.branches) {
      Record(br.pred, 0);
      Record(br.succ, 0);
      known_.insert(br);
    }
  }
}

uint64_t DiscoveryLog::EvaluateSeeds(Round t,
                                     std::span<const SeedCoverage> new_seeds) {
  if (t == 0) Fail(ErrorCode::kOrdering, "evaluation round must be >= 1");
  if (t < latest_round_) {
    Fail(ErrorCode::kOrdering,
         "round " + std::to_string(t) + " precedes recorded round " +
             std::to_string(latest_round_));
  }
  evaluated_ = true;

  std::vector<const SeedCoverage *> order;
  order.reserve(new_seeds.size());
  for (const SeedCoverage &s : new_seeds) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const SeedCoverage *a, const SeedCoverage *b) {
                     return a->seed_id < b->seed_id;
                   });

  uint64_t raw = 0;
  std::vector<Branch> branches;
  for (const SeedCoverage *seed : order) {
    branches.assign(seed->branches.begin(), seed->branches.end());
    if (!seed->IsCanonical()) std::sort(branches.begin(), branches.end());
    for (const Branch &br : branches) {
      if (known_.contains(br)) continue;
      auto [it, inserted] = first_round_.emplace(br.pred, t);
      if (inserted) latest_round_ = t;
      raw += t - it->second;
      Record(br.succ, t);
      known_.insert(br);
    }
  }
  return raw;
}

std::optional<Round> DiscoveryLog::FirstRound(BlockId block) const {
  auto it = first_round_.find(block);
  if (it == first_round_.end()) return std::nullopt;
  return it->second;
}

double RewardNormalizer::Normalize(double raw) {
  if (!(raw >= 0.0)) Fail(ErrorCode::kDomain, "raw reward must be >= 0");
  r_max_ = std::max(r_max_, raw);
  r_min_ = std::min(r_min_, raw);
  if (r_max_ == r_min_) return 0.0;
  double r = (raw - r_min_) / (r_max_ - r_min_);
  return std::clamp(r, 0.0, 1.0);
}

}  // namespace armada
