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

#ifndef ARMADA_REWARD_ENGINE_H_
#define ARMADA_REWARD_ENGINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>

#include "armada/types.h"

namespace armada {

// Records the round in which each basic block was first discovered anywhere
// in the campaign, plus every branch seen so far. A block's round never
// changes once recorded.
//
// Rewards are coverage intervals: a newly covered branch pred->succ earns
// (t - first_round[pred]). The sum over all new branches of a batch is the
// raw reward of the fuzzer that produced the batch.
class DiscoveryLog {
 public:
  // Seeds the log before round 1. Every block touched by an initial branch,
  // and every block in `entry_blocks`, is recorded at round 0. May be called
  // at most once, and only on an empty log.
  void RegisterInitialCorpus(std::span<const SeedCoverage> seeds,
                             std::span<const BlockId> entry_blocks = {});

  // Scores a batch of seeds found in round `t` and records their discoveries.
  //
  // Seeds are processed in ascending seed_id order, branches within a seed in
  // ascending (pred, succ) order. A pred block that is still unknown is
  // recorded at round t, so its branch earns 0. Known branches earn nothing
  // and leave the log untouched.
  //
  // Throws Error(kOrdering) when t == 0 or t precedes a recorded round.
  uint64_t EvaluateSeeds(Round t, std::span<const SeedCoverage> new_seeds);

  std::optional<Round> FirstRound(BlockId block) const;
  bool Knows(const Branch &branch) const { return known_.contains(branch); }
  size_t block_count() const { return first_round_.size(); }
  size_t branch_count() const { return known_.size(); }
  Round latest_round() const { return latest_round_; }
  const std::unordered_map<BlockId, Round> &first_rounds() const {
    return first_round_;
  }

 private:
  void Record(BlockId block, Round round);

  std::unordered_map<BlockId, Round> first_round_;
  std::unordered_set<Branch> known_;
  Round latest_round_ = 0;
  bool registered_ = false;
  bool evaluated_ = false;
};

// Running min-max scaling of raw rewards into [0, 1]. Bounds start at
// (0, 0); r_max only grows, r_min only shrinks.
class RewardNormalizer {
 public:
  // Widens the bounds with `raw`, then scales it. Returns 0 when the bounds
  // are still degenerate (r_max == r_min).
  double Normalize(double raw);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }

 private:
  double r_min_ = 0.0;
  double r_max_ = 0.0;
};

}  // namespace armada

#endif  // ARMADA_REWARD_ENGINE_H_
