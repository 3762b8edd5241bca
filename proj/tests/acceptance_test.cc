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

// Acceptance run: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
// ARMADA_ACCEPT_ONLY=3,7 restricts the run to the listed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "armada/bandit.h"
#include "armada/campaign.h"
#include "armada/config.h"
#include "armada/error.h"
#include "armada/external_fuzzer.h"
#include "armada/report.h"
#include "armada/reward_engine.h"
#include "armada/rng.h"
#include "armada/seed_pool.h"
#include "armada/simulated_fuzzer.h"
#include "spdlog/spdlog.h"
#include "reward_oracle.h"
#include "armada/suites.h"

namespace armada {
namespace {

// Fixed before any experiment was looked at with it.
constexpr uint64_t kBaseSeed = 7000;
constexpr unsigned kTrials = 10;
constexpr int64_t kDay = 24LL * 3600 * 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---- 1 ---------------------------------------------------------------------

Outcome RewardOracle() {
  const auto start = Clock::now();
  Rng rng(kBaseSeed + 1);
  size_t mismatches = 0, rounds_checked = 0;
  for (int scenario = 0; scenario < 1000; ++scenario) {
    const size_t nblocks = 2 + rng.UniformIndex(49);
    std::vector<uint64_t> blocks;
    std::set<uint64_t> used;
    while (blocks.size() < nblocks) {
      uint64_t b = rng.UniformIndex(4) == 0 ? rng.NextU64() : rng.UniformIndex(1000);
      if (used.insert(b).second) blocks.push_back(b);
    }
    const size_t nbranches = 1 + rng.UniformIndex(200);
    std::vector<oracle::Edge> universe;
    std::set<oracle::Edge> seen;
    for (size_t tries = 0; universe.size() < nbranches && tries < 4 * nbranches; ++tries) {
      oracle::Edge e{blocks[rng.UniformIndex(nblocks)], blocks[rng.UniformIndex(nblocks)]};
      if (seen.insert(e).second) universe.push_back(e);
    }
    auto pick = [&](size_t max) {
      std::vector<oracle::Edge> out;
      const size_t n = 1 + rng.UniformIndex(max);
      for (size_t i = 0; i < n; ++i) out.push_back(universe[rng.UniformIndex(universe.size())]);
      return out;
    };
    auto to_cov = [](uint64_t id, const std::vector<oracle::Edge> &edges) {
      SeedCoverage c{id, {}};
      for (const auto &e : edges) c.branches.push_back({{e.first}, {e.second}});
      c.Canonicalize();
      return c;
    };

    oracle::IntervalReward ref;
    DiscoveryLog log;
    std::vector<SeedCoverage> corpus;
    std::vector<oracle::Edge> corpus_edges;
    for (size_t i = 0, n = rng.UniformIndex(3); i < n; ++i) {
      auto e = pick(10);
      corpus.push_back(to_cov(i + 1, e));
      corpus_edges.insert(corpus_edges.end(), e.begin(), e.end());
    }
    std::vector<BlockId> entries;
    for (size_t i = 0, n = rng.UniformIndex(3); i < n; ++i) {
      uint64_t b = blocks[rng.UniformIndex(nblocks)];
      entries.push_back({b});
      ref.Block0(b);
    }
    ref.Seed0(corpus_edges);
    log.RegisterInitialCorpus(corpus, entries);

    const size_t nrounds = 1 + rng.UniformIndex(20);
    Round t = 0;
    uint64_t next_id = 100;
    for (size_t r = 0; r < nrounds; ++r) {
      t += 1 + rng.UniformIndex(3);
      std::vector<oracle::Seed> batch;
      std::vector<SeedCoverage> covs;
      for (size_t s = 0, n = rng.UniformIndex(6); s < n; ++s) {
        const uint64_t id = next_id + rng.UniformIndex(1000);
        next_id += 1000;
        auto e = pick(10);
        batch.push_back({id, e});
        covs.push_back(to_cov(id, e));
      }
      // Arrival order is shuffled; both sides must sort by seed id.
      for (size_t i = covs.size(); i > 1; --i) {
        const size_t j = rng.UniformIndex(i);
        std::swap(covs[i - 1], covs[j]);
      }
      const uint64_t want = ref.Evaluate(t, batch);
      const uint64_t got = log.EvaluateSeeds(t, covs);
      ++rounds_checked;
      if (want != got) ++mismatches;
    }
    for (const auto &[block, round] : ref.first()) {
      auto f = log.FirstRound({block});
      if (!f || *f != round) ++mismatches;
    }
    if (ref.first().size() != log.block_count()) ++mismatches;
  }
  const double secs = Seconds(start);
  return {mismatches == 0 && secs < 10.0,
          "1000 scenarios, " + std::to_string(rounds_checked) + " rounds, " +
              std::to_string(mismatches) + " mismatches, " + Fmt("%.2f s", secs)};
}

// ---- 2 ---------------------------------------------------------------------

Outcome WorkedBanditExample() {
  ThompsonBandit b(3);
  auto set = [&](size_t arm, int wins, int losses) {
    for (int i = 0; i < wins; ++i) b.Update(arm, 1);
    for (int i = 0; i < losses; ++i) b.Update(arm, 0);
  };
  set(0, 1, 1);  // Beta(2, 2)
  set(1, 2, 3);  // Beta(3, 4)
  set(2, 4, 3);  // Beta(5, 4)
  const bool start_ok = b.arm(2) == ArmState{5, 4};

  Rng rng(kBaseSeed + 2);
  const std::vector<double> samples = {0.57, 0.32, 0.81};
  const size_t chosen = ArgmaxRandomTies(samples, rng);
  b.Update(chosen, 1);
  const bool ok = start_ok && chosen == 2 && b.arm(2) == ArmState{6, 4} &&
                  b.arm(0) == ArmState{2, 2} && b.arm(1) == ArmState{3, 4};
  return {ok, "samples (0.57, 0.32, 0.81) -> arm " + std::to_string(chosen) +
                  ", arm 2 now Beta(" + Fmt("%.0f", b.arm(2).alpha) + ", " +
                  Fmt("%.0f", b.arm(2).beta) + ")"};
}

// ---- 3 ---------------------------------------------------------------------

Outcome Discretization() {
  const auto start = Clock::now();
  Rng rng(kBaseSeed + 3);
  uint64_t ones = 0;
  constexpr int kDraws = 100'000;
  for (int i = 0; i < kDraws; ++i) ones += Discretize(0.78, rng);
  const double mean = static_cast<double>(ones) / kDraws;
  const double secs = Seconds(start);
  return {std::abs(mean - 0.78) <= 0.005 && secs < 1.0,
          "mean " + Fmt("%.5f", mean) + " over 1e5 draws, " + Fmt("%.3f s", secs)};
}

// ---- 4 ---------------------------------------------------------------------

Outcome Convergence() {
  const auto start = Clock::now();
  std::vector<double> fractions;
  for (uint64_t s = 0; s < 20; ++s) {
    Rng rng(kBaseSeed + 400 + s);
    ThompsonBandit b(2);
    // The better arm alternates between positions across seeds.
    const size_t better = s % 2;
    const double means[2] = {better == 0 ? 0.8 : 0.2, better == 0 ? 0.2 : 0.8};
    int hits = 0;
    for (int t = 1; t <= 2000; ++t) {
      const size_t k = b.Select(rng);
      b.Update(k, Discretize(means[k], rng));
      if (t > 1000 && k == better) ++hits;
    }
    fractions.push_back(hits / 1000.0);
  }
  const double med = LowerMedian(fractions);
  const double secs = Seconds(start);
  return {med >= 0.85 && secs < 30.0,
          "median better-arm share " + Fmt("%.3f", med) + " (min " +
              Fmt("%.3f", *std::min_element(fractions.begin(), fractions.end())) + "), " +
              Fmt("%.2f s", secs)};
}

// ---- experiment plumbing ---------------------------------------------------

ConfigFile Strategy(std::string name, std::vector<NamedTarget> targets, size_t fuzzers) {
  ConfigFile cf;
  cf.campaign.name = std::move(name);
  for (size_t k = 0; k < fuzzers; ++k) {
    cf.campaign.fuzzers.push_back({"f" + std::to_string(k), FuzzerKind::kSimulated, k, {}});
  }
  cf.campaign.stop.duration_ms = kDay;
  cf.campaign.rng_seed = kBaseSeed;
  cf.store_seeds = false;
  cf.targets = std::move(targets);
  return cf;
}

NamedTarget Make(std::string name, const TargetDescription &d) {
  return {std::move(name), std::make_shared<const SyntheticTarget>(d)};
}

std::vector<NamedTarget> Load(const std::vector<suites::NamedDescription> &suite) {
  std::vector<NamedTarget> out;
  for (const auto &n : suite) out.push_back(Make(n.name, n.desc));
  return out;
}

std::string Medians(const ScoreTable &t, size_t a, size_t b) {
  std::string s;
  for (size_t j = 0; j < t.targets.size(); ++j) {
    if (j) s += ", ";
    s += t.targets[j] + " " + Fmt("%.0f", t.median[a][j].value_or(-1)) + " vs " +
         Fmt("%.0f", t.median[b][j].value_or(-1));
  }
  return s;
}

// Every target: median(a) >= factor * median(b).
bool Dominates(const ScoreTable &t, size_t a, size_t b, double factor) {
  for (size_t j = 0; j < t.targets.size(); ++j) {
    if (!t.median[a][j] || !t.median[b][j]) return false;
    if (*t.median[a][j] < factor * *t.median[b][j]) return false;
  }
  return true;
}

// ---- 5, 6 ------------------------------------------------------------------

struct SchedulerSync {
  Outcome scheduler, sync;
};

SchedulerSync SchedulerAndSync() {
  const auto start = Clock::now();
  auto suite = Load(suites::BreakthroughSuite());
  std::vector<ConfigFile> s = {Strategy("ts", suite, 5), Strategy("random", suite, 5),
                               Strategy("no-sync", suite, 5)};
  s[1].campaign.scheduler = SchedulerKind::kRandom;
  s[2].campaign.sync_enabled = false;
  const Comparison c = RunComparison(s, kTrials, 1);
  const double secs = Seconds(start);
  double worst = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < c.scores.targets.size(); ++j) {
    worst = std::min(worst, *c.scores.median[0][j] / *c.scores.median[1][j]);
  }
  SchedulerSync out;
  out.scheduler = {Dominates(c.scores, 0, 1, 1.05) && secs < 120.0,
                   "ts vs random: " + Medians(c.scores, 0, 1) + "; worst ratio " +
                       Fmt("%.3f", worst) + ", " + Fmt("%.1f s", secs)};
  out.sync = {Dominates(c.scores, 0, 2, 1.0), "sync vs no-sync: " + Medians(c.scores, 0, 2)};
  return out;
}

// ---- 7 ---------------------------------------------------------------------

Outcome RewardAblation() {
  auto suite = Load(suites::HeterogeneousSuite());
  std::vector<ConfigFile> s = {Strategy("interval", suite, 3), Strategy("naive", suite, 3)};
  s[1].campaign.reward_mode = RewardMode::kNaive;
  const Comparison c = RunComparison(s, kTrials, 1);
  return {Dominates(c.scores, 0, 1, 1.0), "interval vs naive: " + Medians(c.scores, 0, 1)};
}

// ---- 8 ---------------------------------------------------------------------

Outcome ResetAblation() {
  auto suite = Load(suites::PhaseSwapSuite());
  std::vector<ConfigFile> s = {Strategy("reset", suite, 4), Strategy("no-reset", suite, 4)};
  s[1].campaign.reset_enabled = false;
  const Comparison c = RunComparison(s, kTrials, 1);
  return {Dominates(c.scores, 0, 1, 1.0), "reset vs no-reset: " + Medians(c.scores, 0, 1)};
}

// ---- 9 ---------------------------------------------------------------------

Outcome HyperParameters() {
  std::vector<NamedTarget> target = Load({suites::SweepTree()});
  const int64_t tis[] = {90, 120, 150, 180};
  const int64_t irs[] = {90, 120, 150, 180};
  std::vector<ConfigFile> s;
  size_t def = 0;
  for (int64_t ti : tis) {
    for (int64_t ir : irs) {
      if (ti == 120 && ir == 120) def = s.size();
      ConfigFile cf = Strategy("ti" + std::to_string(ti) + "_ir" + std::to_string(ir), target, 5);
      cf.campaign.round_budget_ms = ti * 1000;
      cf.campaign.reset_interval_ms = ir * 60'000;
      s.push_back(std::move(cf));
    }
  }
  const Comparison c = RunComparison(s, kTrials, 1);
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (const auto &m : c.scores.median) {
    lo = std::min(lo, m[0].value_or(0));
    hi = std::max(hi, m[0].value_or(0));
  }
  const double base = c.scores.median[def][0].value_or(0);
  const double spread = base > 0 ? (hi - lo) / base : 1.0;
  return {spread <= 0.10, "medians " + Fmt("%.0f", lo) + ".." + Fmt("%.0f", hi) +
                              ", default " + Fmt("%.0f", base) + ", spread " +
                              Fmt("%.1f%%", 100 * spread)};
}

// ---- 10 --------------------------------------------------------------------

std::string Slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome Replay() {
  const std::filesystem::path dir = MakeTempDir("armada-replay");
  auto suite = Load(suites::BreakthroughSuite());
  ConfigFile cf = Strategy("replay", {suite[0]}, 5);
  std::string traces[3];
  for (int run = 0; run < 3; ++run) {
    CampaignConfig c = cf.WithTarget(suite[0]);
    c.rng_seed = kBaseSeed + (run == 2 ? 1 : 0);
    c.trace_path = dir / ("trace" + std::to_string(run) + ".tsv");
    c.campaign_dir = dir / ("camp" + std::to_string(run));
    RunCampaign(c);
    traces[run] = Slurp(c.trace_path);
  }
  std::filesystem::remove_all(dir);
  const bool same = !traces[0].empty() && traces[0] == traces[1];
  return {same && traces[0] != traces[2],
          std::to_string(traces[0].size()) + " trace bytes, identical: " + (same ? "yes" : "no") +
              ", other seed differs: " + (traces[0] != traces[2] ? "yes" : "no")};
}

// ---- 11 --------------------------------------------------------------------

Outcome Invariants() {
  std::vector<std::string> broken;

  // Normalizer on fuzzed inputs.
  {
    Rng rng(kBaseSeed + 11);
    for (int run = 0; run < 100 && broken.empty(); ++run) {
      RewardNormalizer n;
      double lo = 0, hi = 0;
      for (int i = 0; i < 1000; ++i) {
        double raw;
        switch (rng.UniformIndex(4)) {
          case 0: raw = 0; break;
          case 1: raw = static_cast<double>(rng.UniformIndex(10)); break;
          case 2: raw = static_cast<double>(rng.NextU64() >> rng.UniformIndex(64)); break;
          default: raw = rng.Uniform01() * 1e6; break;
        }
        const double r = n.Normalize(raw);
        if (!(r >= 0.0 && r <= 1.0) || n.r_min() > lo || n.r_max() < hi) {
          broken.push_back("normalizer");
          break;
        }
        lo = n.r_min();
        hi = n.r_max();
      }
    }
  }

  // Pool union and acceptance against set algebra.
  {
    Rng rng(kBaseSeed + 12);
    for (int run = 0; run < 50; ++run) {
      SeedPool pool;
      std::set<std::pair<uint64_t, uint64_t>> uni;
      std::set<std::string> payloads;
      for (int round = 1; round <= 20; ++round) {
        std::vector<SeedCandidate> cands;
        for (size_t i = 0, n = rng.UniformIndex(5); i < n; ++i) {
          SeedCandidate c;
          c.payload = "p" + std::to_string(rng.UniformIndex(60));
          for (size_t b = 0, m = 1 + rng.UniformIndex(4); b < m; ++b) {
            c.coverage.branches.push_back({{rng.UniformIndex(8)}, {rng.UniformIndex(8)}});
          }
          cands.push_back(c);
        }
        // Expected acceptance, candidate by candidate.
        std::vector<bool> expect;
        size_t malformed = 0;
        for (SeedCandidate &c : cands) {
          std::set<std::pair<uint64_t, uint64_t>> distinct;
          for (const Branch &b : c.coverage.branches) distinct.insert({b.pred.value, b.succ.value});
          if (distinct.size() != c.coverage.branches.size()) {
            ++malformed;
            expect.push_back(false);
            continue;
          }
          bool fresh = !payloads.count(c.payload);
          bool adds = false;
          for (const Branch &b : c.coverage.branches) {
            adds |= !uni.count({b.pred.value, b.succ.value});
          }
          expect.push_back(fresh && adds);
          if (fresh && adds) {
            payloads.insert(c.payload);
            for (const Branch &b : c.coverage.branches) uni.insert({b.pred.value, b.succ.value});
          }
        }
        MergeResult m = pool.Merge(cands, 0, round);
        size_t want = std::count(expect.begin(), expect.end(), true);
        if (m.accepted.size() != want || m.diagnostics.size() != malformed) {
          broken.push_back("pool acceptance");
        }
        std::set<std::pair<uint64_t, uint64_t>> brute;
        for (const SeedRecord &r : pool.records()) {
          for (const Branch &b : r.coverage.branches) brute.insert({b.pred.value, b.succ.value});
        }
        std::set<std::pair<uint64_t, uint64_t>> have;
        for (const Branch &b : pool.branch_union()) have.insert({b.pred.value, b.succ.value});
        if (brute != have || have != uni) broken.push_back("pool union");
        if (!broken.empty()) break;
      }
      if (!broken.empty()) break;
    }
  }

  // Sync closure and arm counts over a 500-round campaign.
  uint64_t resets = 0, synced = 0;
  {
    suites::TreeParams p;
    p.branches = 3000;
    p.p_min = 0.0005;
    p.p_max = 0.2;
    CampaignConfig c;
    c.target = std::make_shared<const SyntheticTarget>(suites::RandomTree(p));
    for (size_t k = 0; k < 5; ++k) c.fuzzers.push_back({"f" + std::to_string(k), FuzzerKind::kSimulated, k, {}});
    c.stop.max_rounds = 500;
    c.reset_interval_ms = 30 * 60'000;
    c.rng_seed = kBaseSeed + 13;
    Campaign camp(c);
    std::vector<uint64_t> since(5, 0);
    uint64_t total = 0;
    while (!camp.Done()) {
      RoundRecord r = camp.RunRound();
      if (r.status != RoundStatus::kSyncFailed) {
        ++synced;
        for (const ContentHash &h : camp.last_sync_snapshot()) {
          if (!camp.fuzzer(r.fuzzer).local_hashes().contains(h)) {
            broken.push_back("sync closure at round " + std::to_string(r.round));
            break;
          }
        }
        ++since[r.fuzzer];
        ++total;
      }
      if (r.reset_fired) {
        ++resets;
        std::fill(since.begin(), since.end(), 0);
      }
      for (size_t k = 0; k < 5; ++k) {
        if (camp.bandit().arm(k).Updates() != since[k]) {
          broken.push_back("arm counts at round " + std::to_string(r.round));
          break;
        }
      }
      if (r.reward < 0.0 || r.reward > 1.0) broken.push_back("reward range");
      if (!broken.empty()) break;
    }
    if (camp.trace().size() != 500 || total != 500 || resets == 0) {
      broken.push_back("campaign shape");
    }
  }

  std::string detail = "normalizer 1e5 inputs, pool 1000 merges, " + std::to_string(synced) +
                       " synced rounds, " + std::to_string(resets) + " resets";
  if (!broken.empty()) detail += "; broken: " + broken.front();
  return {broken.empty(), detail};
}

// ---- 12 --------------------------------------------------------------------

std::vector<std::string> Adapter(std::vector<std::string> args) {
  args.insert(args.begin(), ARMADA_ADAPTER_PATH);
  return args;
}

Outcome Watchdog() {
  std::vector<std::string> broken, notes;
  const std::filesystem::path dir = MakeTempDir("armada-watchdog");
  constexpr int64_t kTI = 200;
  // Reply latency after SKIP: process wake-up and one pipe round trip.
  constexpr int64_t kSlackMs = 150;
  ExternalOptions opts;
  opts.skip_grace = std::chrono::milliseconds(500);

  // Wall clock: a hung adapter that honors SKIP.
  {
    std::vector<std::unique_ptr<Fuzzer>> roster;
    roster.push_back(std::make_unique<ExternalFuzzer>(0, "hang", Adapter({"--mode", "hang"}),
                                                      dir / "hang", opts));
    CampaignConfig c;
    c.round_budget_ms = kTI;
    c.stop.max_rounds = 3;
    c.rng_seed = kBaseSeed + 120;
    Campaign camp(c, std::move(roster));
    int64_t worst = 0;
    while (!camp.Done()) {
      RoundRecord r = camp.RunRound();
      worst = std::max(worst, r.duration_ms);
      if (r.status != RoundStatus::kSkipped) broken.push_back("hang round not skipped");
      if (r.duration_ms < 3 * kTI || r.duration_ms > 3 * kTI + kSlackMs) {
        broken.push_back("hang round took " + std::to_string(r.duration_ms) + " ms");
      }
    }
    notes.push_back("hang skipped, worst " + std::to_string(worst) + " ms");
  }

  // Wall clock: a hung adapter that ignores SKIP is killed after the grace
  // period and brought back.
  {
    auto f = std::make_unique<ExternalFuzzer>(0, "hard", Adapter({"--mode", "hang-hard"}),
                                              dir / "hard", opts);
    ExternalFuzzer *ext = f.get();
    std::vector<std::unique_ptr<Fuzzer>> roster;
    roster.push_back(std::move(f));
    CampaignConfig c;
    c.round_budget_ms = kTI;
    c.stop.max_rounds = 1;
    Campaign camp(c, std::move(roster));
    RoundRecord r = camp.RunRound();
    if (r.status != RoundStatus::kCrashed || ext->restarts() != 1 ||
        ext->status() != FuzzerStatus::kIdle ||
        r.duration_ms > 3 * kTI + opts.skip_grace.count() + kSlackMs) {
      broken.push_back("hang-hard not killed and restarted");
    }
  }

  // Virtual clock: a simulated fuzzer asked for far more cycles than fit.
  {
    suites::ChainParams p;
    p.specialists = {0};
    auto target = std::make_shared<const SyntheticTarget>(suites::GateChain(p));
    SimulatedFuzzer sim(0, "sim", target, 0, kBaseSeed + 121);
    const int64_t ti = 120'000;
    CycleResult r = sim.RunCycles(1000, 3 * ti, 1);
    if (r.status != FuzzerStatus::kSkipped || r.duration_ms < 3 * ti ||
        r.duration_ms > 3 * ti + p.cycle_ms) {
      broken.push_back("simulated skip at " + std::to_string(r.duration_ms) + " ms");
    }
    sim.FinishSkip();
    notes.push_back("sim skipped at " + std::to_string(r.duration_ms / 1000) + " virtual s");
  }

  // Crash mid-run: restart, and the arm is updated with the reward of the
  // seeds reported before the crash.
  {
    const std::filesystem::path marker = dir / "crashed-once";
    auto f = std::make_unique<ExternalFuzzer>(
        0, "crash",
        Adapter({"--mode", "crash", "--crash-on-run", "2", "--marker", marker.string()}),
        dir / "crash", opts);
    ExternalFuzzer *ext = f.get();
    std::vector<std::unique_ptr<Fuzzer>> roster;
    roster.push_back(std::move(f));
    CampaignConfig c;
    c.round_budget_ms = kTI;
    c.stop.max_rounds = 3;
    Campaign camp(c, std::move(roster));
    RoundRecord first = camp.RunRound();
    RoundRecord crash = camp.RunRound();
    RoundRecord after = camp.RunRound();
    const bool ok = first.status == RoundStatus::kCompleted &&
                    crash.status == RoundStatus::kCrashed && crash.accepted == 2 &&
                    crash.raw_reward == 2 && crash.reward > 0.0 &&
                    crash.arms[0].Updates() == 2 && ext->restarts() == 1 &&
                    after.status == RoundStatus::kCompleted && after.arms[0].Updates() == 3;
    if (!ok) broken.push_back("crash round not restarted/scored");
    notes.push_back("crash round: " + std::to_string(crash.accepted) + " partial seeds, raw " +
                    std::to_string(crash.raw_reward) + ", r " + Fmt("%.2f", crash.reward));
  }
  std::filesystem::remove_all(dir);

  std::string detail;
  for (const auto &n : notes) detail += (detail.empty() ? "" : "; ") + n;
  if (!broken.empty()) detail += "; broken: " + broken.front();
  return {broken.empty(), detail};
}

}  // namespace
}  // namespace armada

int main() {
  using namespace armada;
  std::set<int> only;
  if (const char *env = std::getenv("ARMADA_ACCEPT_ONLY")) {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) only.insert(std::atoi(item.c_str()));
  }
  spdlog::set_level(spdlog::level::warn);
  auto wanted = [&](int n) { return only.empty() || only.count(n); };

  const char *names[] = {"",
                         "reward oracle equivalence",
                         "worked bandit example",
                         "reward discretization",
                         "thompson convergence",
                         "scheduler ablation (ts vs random)",
                         "sync ablation",
                         "reward ablation (interval vs naive)",
                         "reset ablation on phase swap",
                         "hyper-parameter insensitivity",
                         "deterministic replay",
                         "invariant suites",
                         "watchdog skip and restart"};
  int failures = 0;
  auto report = [&](int n, const Outcome &o) {
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", n, names[n], o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  auto guarded = [&](int n, const std::function<Outcome()> &fn) {
    if (!wanted(n)) return;
    try {
      report(n, fn());
    } catch (const std::exception &e) {
      report(n, {false, std::string("threw: ") + e.what()});
    }
  };

  const auto start = std::chrono::steady_clock::now();
  guarded(1, RewardOracle);
  guarded(2, WorkedBanditExample);
  guarded(3, Discretization);
  guarded(4, Convergence);
  if (wanted(5) || wanted(6)) {
    try {
      SchedulerSync r = SchedulerAndSync();
      if (wanted(5)) report(5, r.scheduler);
      if (wanted(6)) report(6, r.sync);
    } catch (const std::exception &e) {
      if (wanted(5)) report(5, {false, std::string("threw: ") + e.what()});
      if (wanted(6)) report(6, {false, std::string("threw: ") + e.what()});
    }
  }
  guarded(7, RewardAblation);
  guarded(8, ResetAblation);
  guarded(9, HyperParameters);
  guarded(10, Replay);
  guarded(11, Invariants);
  guarded(12, Watchdog);
  std::printf("%d failed, %.1f s total\n", failures,
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return failures == 0 ? 0 : 1;
}
