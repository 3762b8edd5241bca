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

#include "armada/simulated_fuzzer.h"

#include <algorithm>
#include <limits>

#include "armada/text_util.h"

namespace armada {

namespace {
constexpr size_t kNone = std::numeric_limits<size_t>::max();
}  // namespace

LocalCoverage::LocalCoverage(const SyntheticTarget &target)
    : target_(&target),
      branch_covered_(target.branch_count(), false),
      block_covered_(target.block_count(), false),
      via_(target.block_count(), kNone) {
  for (size_t e : target.entry_indices()) CoverBlock(e, kNone);
}

void LocalCoverage::CoverBlock(size_t block, size_t via) {
  std::vector<std::pair<size_t, size_t>> stack{{block, via}};
  while (!stack.empty()) {
    auto [b, v] = stack.back();
    stack.pop_back();
    if (block_covered_[b]) continue;
    block_covered_[b] = true;
    via_[b] = v;
    for (size_t out : target_->Outgoing(b)) {
      if (branch_covered_[out]) {
        stack.emplace_back(target_->SuccIndex(out), out);
      } else {
        frontier_.insert(out);
      }
    }
  }
}

void LocalCoverage::Cover(size_t branch_index) {
  if (branch_covered_[branch_index]) return;
  branch_covered_[branch_index] = true;
  ++covered_count_;
  frontier_.erase(branch_index);
  if (block_covered_[target_->PredIndex(branch_index)]) {
    CoverBlock(target_->SuccIndex(branch_index), branch_index);
  }
}

void LocalCoverage::Absorb(std::span<const Branch> branches) {
  for (const Branch &b : branches) {
    size_t i = target_->BranchIndex(b);
    if (i != kNone) Cover(i);
  }
}

std::vector<size_t> LocalCoverage::PathTo(size_t block) const {
  std::vector<size_t> path;
  while (via_[block] != kNone) {
    path.push_back(via_[block]);
    block = target_->PredIndex(via_[block]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::string CanonicalPayload(std::span<const Branch> sorted_branches) {
  std::string out;
  out.reserve(sorted_branches.size() * 41);
  for (const Branch &b : sorted_branches) {
    out += "branch ";
    out += HexId(b.pred.value);
    out += ' ';
    out += HexId(b.succ.value);
    out += '\n';
  }
  return out;
}

SimCycle SimOneCycle(const SyntheticTarget &target, std::span<const double> probs,
                     int64_t cycle_ms, const LocalCoverage &coverage, Rng &rng) {
  SimCycle cycle;
  cycle.duration_ms = cycle_ms;
  uint64_t ordinal = 0;
  for (size_t bi : coverage.frontier()) {
    if (!(rng.Uniform01() < probs[bi])) continue;
    std::vector<size_t> path = coverage.PathTo(target.PredIndex(bi));
    path.push_back(bi);
    SeedCandidate seed;
    seed.coverage.seed_id = ordinal++;
    for (size_t p : path) seed.coverage.branches.push_back(target.branches()[p]);
    seed.coverage.Canonicalize();
    seed.payload = CanonicalPayload(seed.coverage.branches);
    cycle.seeds.push_back(std::move(seed));
  }
  return cycle;
}

SimulatedFuzzer::SimulatedFuzzer(size_t index, std::string name,
                                 std::shared_ptr<const SyntheticTarget> target,
                                 size_t profile, uint64_t seed,
                                 std::filesystem::path queue_dir)
    : Fuzzer(index, FuzzerKind::kSimulated, std::move(name), std::move(queue_dir)),
      target_(std::move(target)),
      profile_(profile),
      cycle_ms_(target_->CycleMs(profile)),
      rng_(seed),
      coverage_(*target_),
      phase_probs_(target_->description().phases.size() + 1) {}

const std::vector<double> &SimulatedFuzzer::ProbsFor(Round round) {
  size_t phase = target_->PhaseAt(round);
  if (phase_probs_[phase].empty() && target_->branch_count() > 0) {
    phase_probs_[phase] = target_->DenseProbs(profile_, phase);
  }
  return phase_probs_[phase];
}

CycleResult SimulatedFuzzer::DoRun(uint64_t cycles, int64_t timeout_ms, Round round) {
  const std::vector<double> &probs = ProbsFor(round);
  CycleResult result;
  result.duration_ms = 0;
  for (uint64_t c = 0; c < cycles; ++c) {
    if (skip_requested()) {
      result.status = FuzzerStatus::kSkipped;
      result.diagnostic = "skip requested";
      break;
    }
    if (crash_after_ && result.cycles_completed == *crash_after_) {
      crash_after_.reset();
      result.status = FuzzerStatus::kCrashed;
      result.diagnostic = "injected crash";
      break;
    }
    SimCycle cycle = SimOneCycle(*target_, probs, cycle_ms_, coverage_, rng_);
    result.duration_ms += cycle.duration_ms;
    ++result.cycles_completed;
    for (SeedCandidate &seed : cycle.seeds) {
      coverage_.Absorb(seed.coverage.branches);
      if (!queue_dir().empty()) {
        WriteFile(queue_dir() / ("own_" + ContentHash::Of(seed.payload).Hex16()),
                  seed.payload);
      }
      result.new_seeds.push_back(std::move(seed));
    }
    if (result.duration_ms >= timeout_ms && c + 1 < cycles) {
      result.status = FuzzerStatus::kSkipped;
      result.diagnostic = "watchdog: round exceeded " + std::to_string(timeout_ms) + " ms";
      break;
    }
  }
  if (result.duration_ms == 0) result.duration_ms = 1;
  return result;
}

void SimulatedFuzzer::DoImport(std::span<const SeedRecord> records,
                               std::span<const std::filesystem::path>) {
  for (const SeedRecord &r : records) coverage_.Absorb(r.coverage.branches);
}

}  // namespace armada
