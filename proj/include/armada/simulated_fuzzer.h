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

#ifndef ARMADA_SIMULATED_FUZZER_H_
#define ARMADA_SIMULATED_FUZZER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "armada/fuzzer.h"
#include "armada/rng.h"
#include "armada/synthetic_target.h"

namespace armada {

// What one simulated fuzzer has covered of a synthetic target.
//
// A block is covered when it is an entry or the successor of a covered
// branch whose pred is covered. Each covered block remembers the branch it
// was first reached through, which gives every block a path from an entry.
// The frontier holds the uncovered branches whose pred is covered.
class LocalCoverage {
 public:
  explicit LocalCoverage(const SyntheticTarget &target);

  void Cover(size_t branch_index);
  // Covers every target branch in `branches`; unknown branches are ignored.
  void Absorb(std::span<const Branch> branches);

  bool covers_branch(size_t i) const { return branch_covered_[i]; }
  bool covers_block(size_t i) const { return block_covered_[i]; }
  const std::set<size_t> &frontier() const { return frontier_; }
  size_t covered_branch_count() const { return covered_count_; }
  // Branch indices leading from an entry block to `block`, in path order.
  std::vector<size_t> PathTo(size_t block) const;

 private:
  void CoverBlock(size_t block, size_t via);

  const SyntheticTarget *target_;
  std::vector<bool> branch_covered_;
  std::vector<bool> block_covered_;
  std::vector<size_t> via_;
  std::set<size_t> frontier_;
  size_t covered_count_ = 0;
};

// Canonical payload of a simulated seed: its sorted branch list, one
// "branch <pred> <succ>" line each.
std::string CanonicalPayload(std::span<const Branch> sorted_branches);

struct SimCycle {
  std::vector<SeedCandidate> seeds;
  int64_t duration_ms = 0;
};

// One simulated fuzzing cycle. Every frontier branch (ascending index) gets
// one Bernoulli(probs[branch]) attempt; each success yields a seed covering
// the local path to the branch's pred plus the branch itself. Reachability
// is fixed at cycle start, so a branch unlocked in this cycle is attempted
// no earlier than the next one.
SimCycle SimOneCycle(const SyntheticTarget &target, std::span<const double> probs,
                     int64_t cycle_ms, const LocalCoverage &coverage, Rng &rng);

class SimulatedFuzzer : public Fuzzer {
 public:
  SimulatedFuzzer(size_t index, std::string name,
                  std::shared_ptr<const SyntheticTarget> target, size_t profile,
                  uint64_t seed, std::filesystem::path queue_dir = {});

  const LocalCoverage &coverage() const { return coverage_; }
  size_t profile() const { return profile_; }

  // Fault injection: the next run crashes after `cycles` completed cycles.
  void ScheduleCrash(uint64_t cycles) { crash_after_ = cycles; }

 protected:
  CycleResult DoRun(uint64_t cycles, int64_t timeout_ms, Round round) override;
  void DoImport(std::span<const SeedRecord> records,
                std::span<const std::filesystem::path> paths) override;
  void DoRestart() override {}

 private:
  const std::vector<double> &ProbsFor(Round round);

  std::shared_ptr<const SyntheticTarget> target_;
  size_t profile_;
  int64_t cycle_ms_;
  Rng rng_;
  LocalCoverage coverage_;
  std::vector<std::vector<double>> phase_probs_;
  std::optional<uint64_t> crash_after_;
};

}  // namespace armada

#endif  // ARMADA_SIMULATED_FUZZER_H_
