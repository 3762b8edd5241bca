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

#include "armada/suites.h"

#include <algorithm>
#include <cmath>

namespace armada::suites {

namespace {

constexpr double kNever = 1e-6;

Branch Edge(uint64_t p, uint64_t s) { return {{p}, {s}}; }

}  // namespace

TargetDescription GateChain(const ChainParams &p) {
  TargetDescription d;
  const uint64_t entry = 1;
  d.entries = {{entry}};
  d.default_cycle_ms = p.cycle_ms;

  uint64_t next = 1000;
  std::vector<Branch> gates;
  uint64_t at = entry;
  for (size_t g = 0; g < p.gates; ++g) {
    Branch gate = Edge(at, next++);
    gates.push_back(gate);
    d.branches.push_back(gate);
    at = gate.succ.value;
    for (size_t f = 0; f < p.fan; ++f) d.branches.push_back(Edge(at, next++));
  }
  std::vector<Branch> steps;
  at = entry;
  for (size_t s = 0; s < p.follower_steps; ++s) {
    Branch b = Edge(at, next++);
    steps.push_back(b);
    d.branches.push_back(b);
    at = b.succ.value;
  }

  auto fill = [&](ProbTable &t, const std::vector<size_t> &owners) {
    t.global_default = p.fan_p;
    for (size_t k = 0; k < p.fuzzers; ++k) {
      t.profile_default[k] = p.fan_p;
      for (size_t g = 0; g < gates.size(); ++g) {
        t.exact[{k, gates[g]}] = k == owners[g % owners.size()] ? p.gate_p : kNever;
      }
      for (const Branch &b : steps) t.exact[{k, b}] = k == p.follower ? p.follower_p : kNever;
    }
  };
  fill(d.probs, p.specialists);
  if (p.swap_round > 0) {
    Phase ph;
    ph.switch_round = p.swap_round;
    fill(ph.probs, p.specialists_after);
    d.phases.push_back(ph);
  }
  return d;
}

TargetDescription GateHub(const HubParams &p) {
  TargetDescription d;
  const uint64_t entry = 1, hub = 2;
  d.entries = {{entry}};
  d.default_cycle_ms = p.cycle_ms;
  d.branches.push_back(Edge(entry, hub));

  uint64_t next = 1000;
  std::vector<Branch> gates;
  for (size_t g = 0; g < p.gates; ++g) {
    Branch gate = Edge(hub, next++);
    gates.push_back(gate);
    d.branches.push_back(gate);
    for (size_t f = 0; f < p.fan; ++f) d.branches.push_back(Edge(gate.succ.value, next++));
  }

  auto fill = [&](ProbTable &t, size_t breaker) {
    t.global_default = p.fan_p;
    for (size_t k = 0; k < p.fuzzers; ++k) {
      t.profile_default[k] = p.fan_p;
      for (const Branch &g : gates) t.exact[{k, g}] = k == breaker ? p.gate_p : kNever;
    }
  };
  fill(d.probs, p.breaker);
  if (p.swap_round > 0) {
    Phase ph;
    ph.switch_round = p.swap_round;
    fill(ph.probs, p.breaker_after);
    d.phases.push_back(ph);
  }
  return d;
}

TargetDescription RandomTree(const TreeParams &p) {
  TargetDescription d;
  Rng rng(p.seed);
  const uint64_t entry = 1;
  d.entries = {{entry}};
  d.default_cycle_ms = p.cycle_ms;
  d.probs.global_default = 0.0;

  auto log_uniform = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, rng.Uniform01());
  };
  std::vector<std::vector<double>> skill(p.fuzzers, std::vector<double>(p.regions));
  for (auto &row : skill) {
    for (double &s : row) s = log_uniform(1.0 / p.skill_spread, p.skill_spread);
  }

  // Breadth-first growth; region of a node = region of its top-level root.
  struct Node {
    uint64_t id;
    size_t region;
  };
  std::vector<Node> open;
  uint64_t next = 1000;
  for (size_t r = 0; r < p.regions && d.branches.size() < p.branches; ++r) {
    Branch b = Edge(entry, next);
    d.branches.push_back(b);
    open.push_back({next++, r});
  }
  for (size_t head = 0; head < open.size() && d.branches.size() < p.branches; ++head) {
    const size_t kids = 1 + rng.UniformIndex(p.max_children);
    for (size_t k = 0; k < kids && d.branches.size() < p.branches; ++k) {
      d.branches.push_back(Edge(open[head].id, next));
      open.push_back({next++, open[head].region});
    }
  }
  // open[i] is the successor of branches[i].
  for (size_t i = 0; i < d.branches.size(); ++i) {
    const double base = log_uniform(p.p_min, p.p_max);
    for (size_t f = 0; f < p.fuzzers; ++f) {
      d.probs.exact[{f, d.branches[i]}] =
          std::min(1.0, base * skill[f][open[i].region]);
    }
  }
  return d;
}

std::vector<NamedDescription> BreakthroughSuite() {
  const std::vector<std::vector<size_t>> owners = {{0, 1}, {2, 3}, {4, 0}};
  std::vector<NamedDescription> out;
  for (size_t j = 0; j < owners.size(); ++j) {
    ChainParams p;
    p.specialists = owners[j];
    out.push_back({"breakthrough" + std::to_string(j), GateChain(p)});
  }
  return out;
}

std::vector<NamedDescription> HeterogeneousSuite() {
  std::vector<NamedDescription> out;
  for (size_t j = 0; j < 3; ++j) {
    ChainParams p;
    p.fuzzers = 3;
    p.gates = 300;
    p.gate_p = 0.03;
    p.fan = 20;
    p.specialists = {j};
    p.follower = (j + 1) % 3;
    p.follower_steps = 3000;
    p.follower_p = 0.1;
    out.push_back({"hetero" + std::to_string(j), GateChain(p)});
  }
  return out;
}

std::vector<NamedDescription> PhaseSwapSuite() {
  std::vector<NamedDescription> out;
  for (size_t j = 0; j < 3; ++j) {
    HubParams p;
    p.gates = 6000;
    p.gate_p = 0.00085;
    p.cycle_ms = 120'000;  // one cycle per round at T_I = 120 s
    p.breaker = j;
    p.swap_round = 360;
    p.breaker_after = (j + 1) % 4;
    out.push_back({"phase" + std::to_string(j), GateHub(p)});
  }
  return out;
}

NamedDescription SweepTree() {
  TreeParams p;
  p.branches = 5000;
  p.p_min = 0.0001;
  p.p_max = 0.1;
  return {"tree", RandomTree(p)};
}

}  // namespace armada::suites
