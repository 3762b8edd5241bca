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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "armada/error.h"
#include "reward_oracle.h"

namespace armada {
namespace {

Branch B(uint64_t p, uint64_t s) { return {{p}, {s}}; }

SeedCoverage Seed(uint64_t id, std::vector<Branch> b) { return {id, std::move(b)}; }

TEST(DiscoveryLogTest, EmptyCorpus) {
  DiscoveryLog log;
  log.RegisterInitialCorpus({});
  EXPECT_EQ(log.block_count(), 0u);
  EXPECT_EQ(log.branch_count(), 0u);
}

TEST(DiscoveryLogTest, SingleSeedCorpus) {
  DiscoveryLog log;
  std::vector<SeedCoverage> c = {Seed(1, {B(1, 2)})};
  log.RegisterInitialCorpus(c);
  EXPECT_EQ(log.FirstRound({1}), 0u);
  EXPECT_EQ(log.FirstRound({2}), 0u);
  EXPECT_TRUE(log.Knows(B(1, 2)));
  EXPECT_EQ(log.block_count(), 2u);
  EXPECT_EQ(log.branch_count(), 1u);
}

TEST(DiscoveryLogTest, DuplicateCorpusSeedsAbsorbed) {
  DiscoveryLog a, b;
  std::vector<SeedCoverage> one = {Seed(1, {B(1, 2)})};
  std::vector<SeedCoverage> two = {Seed(1, {B(1, 2)}), Seed(2, {B(1, 2)})};
  a.RegisterInitialCorpus(one);
  b.RegisterInitialCorpus(two);
  EXPECT_EQ(a.first_rounds(), b.first_rounds());
  EXPECT_EQ(a.branch_count(), b.branch_count());
}

TEST(DiscoveryLogTest, RegisterTwiceIsUsageError) {
  DiscoveryLog log;
  log.RegisterInitialCorpus({});
  try {
    log.RegisterInitialCorpus({});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUsage);
  }
}

TEST(DiscoveryLogTest, EmptyBatchEarnsNothing) {
  DiscoveryLog log;
  log.RegisterInitialCorpus({});
  EXPECT_EQ(log.EvaluateSeeds(1, {}), 0u);
}

TEST(DiscoveryLogTest, IntervalFromEarlierBlockAndSameRoundBlock) {
  // Block 1 seen at round I_X = 4; at round I_Y = 9 a seed covers a new
  // branch out of block 1 and another out of block 3, which is new itself.
  DiscoveryLog log;
  log.RegisterInitialCorpus({});
  std::vector<SeedCoverage> x = {Seed(1, {B(0x10, 1)})};
  log.EvaluateSeeds(4, x);
  std::vector<SeedCoverage> y = {Seed(2, {B(1, 2), B(3, 5)})};
  EXPECT_EQ(log.EvaluateSeeds(9, y), 9u - 4u);
}

TEST(DiscoveryLogTest, TwoBranchChainInterval) {
  // Block 1 first seen at round 3; at round 10 a seed covers 1->3 and 3->5.
  DiscoveryLog log;
  log.RegisterInitialCorpus({});
  std::vector<SeedCoverage> pre = {Seed(1, {B(0x99, 1)})};
  log.EvaluateSeeds(3, pre);
  ASSERT_EQ(log.FirstRound({1}), 3u);

  std::vector<SeedCoverage> s = {Seed(2, {B(1, 3), B(3, 5)})};
  EXPECT_EQ(log.EvaluateSeeds(10, s), 7u);
  EXPECT_EQ(log.FirstRound({3}), 10u);
  EXPECT_EQ(log.FirstRound({5}), 10u);
  EXPECT_EQ(log.FirstRound({1}), 3u);

  EXPECT_EQ(log.EvaluateSeeds(11, s), 0u);
}

TEST(DiscoveryLogTest, EntryBlocksStartAtRoundZero) {
  DiscoveryLog log;
  std::vector<BlockId> entries = {{7}};
  log.RegisterInitialCorpus({}, entries);
  std::vector<SeedCoverage> s = {Seed(1, {B(7, 8)})};
  EXPECT_EQ(log.EvaluateSeeds(5, s), 5u);
}

TEST(DiscoveryLogTest, RoundsMustNotGoBackwards) {
  DiscoveryLog log;
  log.RegisterInitialCorpus({});
  std::vector<SeedCoverage> s = {Seed(1, {B(1, 2)})};
  log.EvaluateSeeds(5, s);
  try {
    log.EvaluateSeeds(4, {});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrdering);
  }
  EXPECT_THROW(log.EvaluateSeeds(0, {}), Error);
}

TEST(DiscoveryLogTest, SeedOrderIsBySeedIdNotArrival) {
  // Seed 2 reaches block 5 through a branch that seed 1 also crosses later;
  // ascending seed ids decide who discovers block 5 first.
  DiscoveryLog a, b;
  std::vector<BlockId> entries = {{1}};
  a.RegisterInitialCorpus({}, entries);
  b.RegisterInitialCorpus({}, entries);
  std::vector<SeedCoverage> fwd = {Seed(1, {B(1, 5)}), Seed(2, {B(5, 6)})};
  std::vector<SeedCoverage> rev = {Seed(2, {B(5, 6)}), Seed(1, {B(1, 5)})};
  EXPECT_EQ(a.EvaluateSeeds(3, fwd), b.EvaluateSeeds(3, rev));
}

std::vector<oracle::Edge> ToEdges(const SeedCoverage &s) {
  std::vector<oracle::Edge> out;
  for (const Branch &b : s.branches) out.push_back({b.pred.value, b.succ.value});
  return out;
}

TEST(DiscoveryLogTest, MatchesBruteForceOnRandomScenarios) {
  std::mt19937_64 gen(20260101);
  for (int scenario = 0; scenario < 300; ++scenario) {
    const uint64_t nblocks = 2 + gen() % 49;
    const size_t nbranches = 1 + gen() % 200;
    std::vector<Branch> universe;
    for (size_t i = 0; i < nbranches; ++i) {
      universe.push_back(B(gen() % nblocks, gen() % nblocks));
    }
    DiscoveryLog log;
    oracle::IntervalReward ref;
    std::vector<SeedCoverage> corpus;
    if (gen() % 2) {
      corpus.push_back(Seed(0, {universe[0]}));
      ref.Seed0({{universe[0].pred.value, universe[0].succ.value}});
    }
    log.RegisterInitialCorpus(corpus);

    uint64_t t = 0;
    const int rounds = 1 + gen() % 20;
    for (int r = 0; r < rounds; ++r) {
      t += 1 + gen() % 3;
      std::vector<SeedCoverage> seeds;
      std::vector<oracle::Seed> ref_seeds;
      const int n = gen() % 4;
      for (int k = 0; k < n; ++k) {
        SeedCoverage s;
        s.seed_id = gen() % 1000;
        const int m = 1 + gen() % 6;
        for (int j = 0; j < m; ++j) s.branches.push_back(universe[gen() % universe.size()]);
        std::sort(s.branches.begin(), s.branches.end());
        s.branches.erase(std::unique(s.branches.begin(), s.branches.end()), s.branches.end());
        std::shuffle(s.branches.begin(), s.branches.end(), gen);
        ref_seeds.push_back({s.seed_id, ToEdges(s)});
        seeds.push_back(std::move(s));
      }
      ASSERT_EQ(log.EvaluateSeeds(t, seeds), ref.Evaluate(t, ref_seeds))
          << "scenario " << scenario << " round " << t;
    }
    for (const auto &[block, round] : ref.first()) {
      ASSERT_EQ(log.FirstRound({block}), round);
    }
  }
}

TEST(DiscoveryLogTest, AdditiveOverPartitions) {
  std::mt19937_64 gen(77);
  for (int scenario = 0; scenario < 200; ++scenario) {
    std::vector<SeedCoverage> seeds;
    const int n = 2 + gen() % 6;
    for (int k = 0; k < n; ++k) {
      SeedCoverage s;
      s.seed_id = static_cast<uint64_t>(k);
      for (int j = 0; j < 4; ++j) s.branches.push_back(B(gen() % 12, gen() % 12));
      s.Canonicalize();
      seeds.push_back(std::move(s));
    }
    DiscoveryLog whole, split;
    std::vector<BlockId> entries = {{0}, {1}};
    whole.RegisterInitialCorpus({}, entries);
    split.RegisterInitialCorpus({}, entries);
    std::vector<SeedCoverage> warm = {Seed(100, {B(0, 2), B(1, 3)})};
    whole.EvaluateSeeds(2, warm);
    split.EvaluateSeeds(2, warm);

    const size_t cut = 1 + gen() % (seeds.size() - 1);
    std::span<const SeedCoverage> all(seeds);
    uint64_t parts = split.EvaluateSeeds(6, all.first(cut)) + split.EvaluateSeeds(6, all.subspan(cut));
    EXPECT_EQ(whole.EvaluateSeeds(6, all), parts);
    EXPECT_EQ(whole.first_rounds(), split.first_rounds());
  }
}

double ReferenceNormalize(double lo, double hi, double raw) {
  lo = std::min(lo, raw);
  hi = std::max(hi, raw);
  return hi == lo ? 0.0 : (raw - lo) / (hi - lo);
}

TEST(RewardNormalizerTest, Examples) {
  RewardNormalizer n;
  EXPECT_EQ(n.Normalize(0), 0.0);
  EXPECT_EQ(n.r_min(), 0.0);
  EXPECT_EQ(n.r_max(), 0.0);

  EXPECT_EQ(n.Normalize(7), 1.0);
  EXPECT_EQ(n.r_max(), 7.0);

  RewardNormalizer m;
  m.Normalize(10);
  EXPECT_DOUBLE_EQ(m.Normalize(4), 0.4);
  EXPECT_DOUBLE_EQ(ReferenceNormalize(0, 10, 4), 0.4);
  EXPECT_EQ(m.r_max(), 10.0);
  EXPECT_EQ(m.r_min(), 0.0);
}

TEST(RewardNormalizerTest, RejectsNegativeAndNan) {
  RewardNormalizer n;
  EXPECT_THROW(n.Normalize(-1), Error);
  EXPECT_THROW(n.Normalize(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST(RewardNormalizerTest, OutputsStayInUnitIntervalAndBoundsAreMonotone) {
  std::mt19937_64 gen(3);
  RewardNormalizer n;
  double lo = 0, hi = 0;
  for (int i = 0; i < 100000; ++i) {
    double raw;
    switch (gen() % 4) {
      case 0: raw = 0; break;
      case 1: raw = static_cast<double>(gen() % 5); break;
      case 2: raw = std::ldexp(static_cast<double>(gen() % 1000), static_cast<int>(gen() % 60)); break;
      default: raw = std::numeric_limits<double>::max() / (1 + gen() % 3); break;
    }
    double r = n.Normalize(raw);
    ASSERT_GE(r, 0.0);
    ASSERT_LE(r, 1.0);
    ASSERT_GE(n.r_max(), hi);
    ASSERT_LE(n.r_min(), lo);
    hi = n.r_max();
    lo = n.r_min();
    ASSERT_DOUBLE_EQ(r, ReferenceNormalize(lo, hi, raw));
  }
}

}  // namespace
}  // namespace armada
