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

#ifndef ARMADA_FUZZER_H_
#define ARMADA_FUZZER_H_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "armada/seed_pool.h"
#include "armada/types.h"

namespace armada {

enum class FuzzerKind { kSimulated, kExternal };
enum class FuzzerStatus { kIdle, kRunning, kCrashed, kSkipped };

const char *FuzzerKindName(FuzzerKind kind);
const char *FuzzerStatusName(FuzzerStatus status);

struct CycleResult {
  std::vector<SeedCandidate> new_seeds;
  int64_t duration_ms = 1;  // always > 0
  uint64_t cycles_completed = 0;
  // kIdle when all requested cycles ran, kSkipped or kCrashed otherwise.
  FuzzerStatus status = FuzzerStatus::kIdle;
  std::string diagnostic;
};

// One fuzzer of the roster, as seen by the orchestrator.
//
// State machine:
//   idle -> running -> idle        normal completion
//   running -> skipped -> idle     watchdog skip, then FinishSkip()
//   running -> crashed -> idle     adapter death, then WatchdogRestart()
//
// The local pool is tracked as a set of content hashes. When a queue
// directory is configured, imported payloads are copied there byte for byte.
class Fuzzer {
 public:
  Fuzzer(size_t index, FuzzerKind kind, std::string name,
         std::filesystem::path queue_dir);
  virtual ~Fuzzer() = default;
  Fuzzer(const Fuzzer &) = delete;
  Fuzzer &operator=(const Fuzzer &) = delete;

  // Runs up to `cycles` fuzzing cycles. Seeds the fuzzer produced itself are
  // added to its local pool. Requires status idle.
  CycleResult RunCycles(uint64_t cycles, int64_t timeout_ms, Round round);

  // Copies the records the fuzzer does not hold yet into its local pool.
  // Re-importing held records is a no-op. Requires status idle. On I/O
  // failure the fuzzer is marked crashed and Error(kIo) is thrown.
  void ImportSeeds(std::span<const SeedRecord> records);

  // Asks a running fuzzer to stop and hand back what it has. Safe to call
  // from another thread.
  void WatchdogSkip();
  // Brings a crashed fuzzer back to idle with its local queue intact.
  void WatchdogRestart();
  // Acknowledges a skipped run; skipped -> idle.
  void FinishSkip();

  virtual void Shutdown() {}

  size_t index() const { return index_; }
  FuzzerKind kind() const { return kind_; }
  const std::string &name() const { return name_; }
  FuzzerStatus status() const { return status_.load(); }
  const HashSet &local_hashes() const { return local_hashes_; }
  const std::filesystem::path &queue_dir() const { return queue_dir_; }

 protected:
  virtual CycleResult DoRun(uint64_t cycles, int64_t timeout_ms, Round round) = 0;
  // `records` are the ones new to this fuzzer; `paths` their copies in the
  // local queue (empty without a queue directory).
  virtual void DoImport(std::span<const SeedRecord> records,
                        std::span<const std::filesystem::path> paths) = 0;
  virtual void DoRestart() = 0;

  bool skip_requested() const { return skip_flag_.load(); }
  void MarkCrashed() { status_ = FuzzerStatus::kCrashed; }
  void AddLocalHash(const ContentHash &hash) { local_hashes_.insert(hash); }

 private:
  void RequireStatus(FuzzerStatus expected, const char *op) const;

  size_t index_;
  FuzzerKind kind_;
  std::string name_;
  std::filesystem::path queue_dir_;
  HashSet local_hashes_;
  std::atomic<FuzzerStatus> status_{FuzzerStatus::kIdle};
  std::atomic<bool> skip_flag_{false};
};

}  // namespace armada

#endif  // ARMADA_FUZZER_H_
