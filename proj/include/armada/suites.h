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

// Generators for synthetic target families: gate chains, gate hubs and
// random trees.

#ifndef ARMADA_SUITES_H_
#define ARMADA_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "armada/rng.h"
#include "armada/synthetic_target.h"

namespace armada::suites {

// A chain of gates hanging off the entry block. Gate i is solvable only by
// specialists[i % n] (per-cycle probability gate_p; everyone else near
// zero) and opens a fan of branches that anyone finds easily. The next gate
// hangs off the gate's successor.
//
// Optional extras:
//  - a long chain of easy single steps only `follower` can take;
//  - from `swap_round` on, gate skills move to `specialists_after`.
struct ChainParams {
  size_t fuzzers = 5;
  std::vector<size_t> specialists;
  size_t gates = 600;
  double gate_p = 0.2;
  size_t fan = 4;
  double fan_p = 0.5;
  int64_t cycle_ms = 10'000;

  static constexpr size_t kNone = static_cast<size_t>(-1);
  size_t follower = kNone;
  size_t follower_steps = 0;
  double follower_p = 0.1;

  Round swap_round = 0;
  std::vector<size_t> specialists_after;
};
TargetDescription GateChain(const ChainParams &p);

// Many independent gates off one hub block. Gates are solvable only by the
// `breaker` (per-cycle probability gate_p) and each opens a small fan. From
// `swap_round` on the skill moves to `breaker_after`.
struct HubParams {
  size_t fuzzers = 4;
  size_t gates = 1500;
  double gate_p = 0.0003;
  size_t fan = 2;
  double fan_p = 0.5;
  int64_t cycle_ms = 10'000;
  size_t breaker = 0;
  Round swap_round = 0;
  size_t breaker_after = 1;
};
TargetDescription GateHub(const HubParams &p);

// A random tree. Each branch gets a base difficulty drawn log-uniformly from
// [p_min, p_max]; the tree is split into `regions` top-level subtrees and
// every fuzzer has a log-uniform skill factor in [1/skill_spread,
// skill_spread] per region.
struct TreeParams {
  size_t fuzzers = 5;
  size_t branches = 2000;
  size_t regions = 8;
  size_t max_children = 4;
  double p_min = 0.001;
  double p_max = 0.5;
  double skill_spread = 5.0;
  int64_t cycle_ms = 10'000;
  uint64_t seed = 1;
};
TargetDescription RandomTree(const TreeParams &p);

// The fixed suites the ablation experiments run on.
struct NamedDescription {
  std::string name;
  TargetDescription desc;
};
// Five fuzzers; gates alternate between two specialists per target.
std::vector<NamedDescription> BreakthroughSuite();
// Three fuzzers: a gate breaker, a follower of easy steps, and a bystander.
std::vector<NamedDescription> HeterogeneousSuite();
// Four fuzzers; hub-gate skill moves to another fuzzer at round 360.
std::vector<NamedDescription> PhaseSwapSuite();
// One random tree of 5000 branches for five fuzzers.
NamedDescription SweepTree();

}  // namespace armada::suites

#endif  // ARMADA_SUITES_H_
