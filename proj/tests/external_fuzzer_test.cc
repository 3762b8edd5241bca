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

#include "armada/external_fuzzer.h"

#include <gtest/gtest.h>

#include <thread>

#include "armada/error.h"
#include "armada/seed_pool.h"
#include "test_util.h"

namespace armada {
namespace {

using testing::Br;
using testing::TempDir;

std::vector<std::string> Adapter(std::vector<std::string> args) {
  args.insert(args.begin(), ARMADA_ADAPTER_PATH);
  return args;
}

ExternalOptions Quick() {
  ExternalOptions o;
  o.skip_grace = std::chrono::milliseconds(300);
  return o;
}

TEST(ExternalFuzzerTest, RunsAndReportsSeeds) {
  TempDir dir;
  ExternalFuzzer f(0, "ok", Adapter({"--mode", "ok"}), dir / "q", Quick());
  ASSERT_EQ(f.status(), FuzzerStatus::kIdle);
  CycleResult r = f.RunCycles(3, 10'000, 1);
  EXPECT_EQ(r.status, FuzzerStatus::kIdle);
  EXPECT_EQ(r.cycles_completed, 3u);
  ASSERT_EQ(r.new_seeds.size(), 1u);
  EXPECT_EQ(r.new_seeds[0].coverage.branches, std::vector<Branch>{Br(0x10, 0x11)});
  EXPECT_TRUE(f.local_hashes().contains(ContentHash::Of(r.new_seeds[0].payload)));
  EXPECT_GE(r.duration_ms, 1);
}

TEST(ExternalFuzzerTest, ImportCopiesPayloads) {
  TempDir dir;
  ExternalFuzzer f(0, "ok", Adapter({"--mode", "ok"}), dir / "q", Quick());
  SeedPool pool;
  std::vector<SeedCandidate> c = {{"one", {0, {Br(1, 2)}}}, {"two", {0, {Br(2, 3)}}}};
  pool.Merge(c, 1, 1);
  f.ImportSeeds(pool.Diff(f.local_hashes()));
  EXPECT_EQ(f.local_hashes(), pool.SnapshotHashes());
  for (const SeedRecord &r : pool.records()) {
    EXPECT_TRUE(std::filesystem::exists(dir / "q" / QueueFileName(r.seed_id, r.content_hash)));
  }
  EXPECT_EQ(f.status(), FuzzerStatus::kIdle);
}

TEST(ExternalFuzzerTest, HangingAdapterIsSkippedAtTimeout) {
  TempDir dir;
  ExternalFuzzer f(0, "hang", Adapter({"--mode", "hang"}), dir / "q", Quick());
  CycleResult r = f.RunCycles(1, 250, 1);
  EXPECT_EQ(r.status, FuzzerStatus::kSkipped);
  EXPECT_GE(r.duration_ms, 250);
  EXPECT_LT(r.duration_ms, 250 + 300);
  f.FinishSkip();
  EXPECT_EQ(f.RunCycles(1, 100, 2).status, FuzzerStatus::kSkipped);
}

TEST(ExternalFuzzerTest, AdapterIgnoringSkipIsKilledAndRestarted) {
  TempDir dir;
  ExternalFuzzer f(0, "hard", Adapter({"--mode", "hang-hard"}), dir / "q", Quick());
  pid_t before = f.pid();
  CycleResult r = f.RunCycles(1, 200, 1);
  EXPECT_EQ(r.status, FuzzerStatus::kCrashed);
  EXPECT_GE(r.duration_ms, 200 + 300);
  EXPECT_EQ(f.status(), FuzzerStatus::kCrashed);
  f.WatchdogRestart();
  EXPECT_EQ(f.status(), FuzzerStatus::kIdle);
  EXPECT_NE(f.pid(), before);
  EXPECT_EQ(f.restarts(), 1u);
  EXPECT_TRUE(std::filesystem::is_directory(dir / "q"));
}

TEST(ExternalFuzzerTest, CrashDeliversCompleteStanzasOnly) {
  TempDir dir;
  ExternalFuzzer f(0, "crash", Adapter({"--mode", "crash", "--marker", (dir / "m").string()}),
                   dir / "q", Quick());
  CycleResult r = f.RunCycles(2, 10'000, 1);
  EXPECT_EQ(r.status, FuzzerStatus::kCrashed);
  EXPECT_EQ(r.new_seeds.size(), 2u);
  f.WatchdogRestart();
  CycleResult again = f.RunCycles(1, 10'000, 2);
  EXPECT_EQ(again.status, FuzzerStatus::kIdle);
  EXPECT_EQ(again.new_seeds.size(), 1u);
}

TEST(ExternalFuzzerTest, AsynchronousSkipRequest) {
  TempDir dir;
  ExternalFuzzer f(0, "ok", Adapter({"--mode", "ok", "--cycle-ms", "20"}), dir / "q", Quick());
  std::thread watchdog([&] {
    while (f.status() != FuzzerStatus::kRunning) std::this_thread::yield();
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
    f.WatchdogSkip();
  });
  CycleResult r = f.RunCycles(1000, 60'000, 1);
  watchdog.join();
  EXPECT_EQ(r.status, FuzzerStatus::kSkipped);
  EXPECT_LT(r.cycles_completed, 1000u);
  EXPECT_EQ(r.new_seeds.size(), 1u);
}

TEST(ExternalFuzzerTest, MissingBinaryStartsCrashed) {
  TempDir dir;
  ExternalFuzzer f(0, "nope", {"/nonexistent/adapter"}, dir / "q", Quick());
  EXPECT_EQ(f.status(), FuzzerStatus::kCrashed);
  EXPECT_THROW(f.WatchdogRestart(), Error);
  EXPECT_EQ(f.status(), FuzzerStatus::kCrashed);
}

TEST(ExternalFuzzerTest, HashMismatchDropsSeed) {
  // A shell adapter that reports a seed whose bytes do not match its hash.
  TempDir dir;
  std::string script =
      "read l; echo READY; read l; printf 'x' > \"" + (dir / "q" / "s").string() +
      "\"; echo 'RESULT 1 1'; echo 'seed s " + ContentHash::Of("y").Hex() +
      "'; echo 'branch 0000000000000001 0000000000000002'; echo; echo END; read l";
  ExternalFuzzer f(0, "sh", {"/bin/sh", "-c", script}, dir / "q", Quick());
  CycleResult r = f.RunCycles(1, 5'000, 1);
  EXPECT_EQ(r.status, FuzzerStatus::kIdle);
  EXPECT_TRUE(r.new_seeds.empty());
}

TEST(ExternalFuzzerTest, ProtocolViolationCrashes) {
  TempDir dir;
  ExternalFuzzer f(0, "sh", {"/bin/sh", "-c", "read l; echo READY; read l; echo WHAT; sleep 5"},
                   dir / "q", Quick());
  EXPECT_EQ(f.RunCycles(1, 5'000, 1).status, FuzzerStatus::kCrashed);
}

}  // namespace
}  // namespace armada
