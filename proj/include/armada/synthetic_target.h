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

#ifndef ARMADA_SYNTHETIC_TARGET_H_
#define ARMADA_SYNTHETIC_TARGET_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "armada/types.h"

namespace armada {

// Per-(fuzzer profile, branch) solve probabilities with two levels of
// defaults. Lookup order: exact entry, profile default, global default.
struct ProbTable {
  double global_default = 0.0;
  std::map<size_t, double> profile_default;
  std::map<std::pair<size_t, Branch>, double> exact;

  double Lookup(size_t profile, const Branch &branch) const;
};

// A switch to a wholly new probability table from `switch_round` on.
struct Phase {
  Round switch_round = 0;
  ProbTable probs;
};

// Plain description of a synthetic target, as read from / written to a
// target file. See docs/target-format.md for the grammar.
struct TargetDescription {
  std::vector<BlockId> entries;
  std::vector<BlockId> blocks;  // non-entry blocks declared explicitly
  std::vector<Branch> branches;
  ProbTable probs;
  int64_t default_cycle_ms = 10'000;
  std::map<size_t, int64_t> cycle_ms;
  std::vector<Phase> phases;  // ascending switch_round
};

// Validated, indexed synthetic target. Blocks and branches are stored in
// ascending id order and addressed by dense indices.
class SyntheticTarget {
 public:
  // Throws Error(kConfig) if the description violates a target invariant.
  explicit SyntheticTarget(TargetDescription desc);

  static SyntheticTarget Parse(std::string_view text);
  static SyntheticTarget Load(const std::filesystem::path &path);
  std::string Serialize() const;

  const TargetDescription &description() const { return desc_; }
  size_t block_count() const { return blocks_.size(); }
  size_t branch_count() const { return branches_.size(); }
  const std::vector<BlockId> &blocks() const { return blocks_; }
  const std::vector<Branch> &branches() const { return branches_; }
  const std::vector<size_t> &entry_indices() const { return entry_indices_; }
  bool IsEntry(size_t block_index) const { return is_entry_[block_index]; }
  // SIZE_MAX when absent.
  size_t BlockIndex(BlockId id) const;
  size_t BranchIndex(const Branch &b) const;
  size_t PredIndex(size_t branch_index) const { return pred_index_[branch_index]; }
  size_t SuccIndex(size_t branch_index) const { return succ_index_[branch_index]; }
  const std::vector<size_t> &Outgoing(size_t block_index) const {
    return outgoing_[block_index];
  }

  int64_t CycleMs(size_t profile) const;
  // Number of fuzzer profiles the file mentions explicitly (at least 1).
  size_t profile_count() const { return profile_count_; }
  // 0 for the base table, i + 1 for phases[i].
  size_t PhaseAt(Round round) const;
  std::vector<double> DenseProbs(size_t profile, size_t phase) const;

 private:
  TargetDescription desc_;
  std::vector<BlockId> blocks_;
  std::vector<Branch> branches_;
  std::vector<bool> is_entry_;
  std::vector<size_t> entry_indices_;
  std::vector<size_t> pred_index_;
  std::vector<size_t> succ_index_;
  std::vector<std::vector<size_t>> outgoing_;
  size_t profile_count_ = 1;
};

}  // namespace armada

#endif  // ARMADA_SYNTHETIC_TARGET_H_
