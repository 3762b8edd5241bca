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

#include "armada/fuzzer.h"

#include <spdlog/spdlog.h>

#include "armada/error.h"
#include "armada/text_util.h"

namespace armada {

const char *FuzzerKindName(FuzzerKind kind) {
  return kind == FuzzerKind::kSimulated ? "simulated" : "external";
}

const char *FuzzerStatusName(FuzzerStatus status) {
  switch (status) {
    case FuzzerStatus::kIdle: return "idle";
    case FuzzerStatus::kRunning: return "running";
    case FuzzerStatus::kCrashed: return "crashed";
    case FuzzerStatus::kSkipped: return "skipped";
  }
  return "?";
}

Fuzzer::Fuzzer(size_t index, FuzzerKind kind, std::string name,
               std::filesystem::path queue_dir)
    : index_(index),
      kind_(kind),
      name_(std::move(name)),
      queue_dir_(std::move(queue_dir)) {
  if (!queue_dir_.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(queue_dir_, ec);
    if (ec) Fail(ErrorCode::kIo, "cannot create " + queue_dir_.string());
  }
}

void Fuzzer::RequireStatus(FuzzerStatus expected, const char *op) const {
  FuzzerStatus s = status_.load();
  if (s != expected) {
    Fail(ErrorCode::kUsage, std::string(op) + " on fuzzer " + name_ + " requires " +
                                FuzzerStatusName(expected) + ", status is " +
                                FuzzerStatusName(s));
  }
}

CycleResult Fuzzer::RunCycles(uint64_t cycles, int64_t timeout_ms, Round round) {
  RequireStatus(FuzzerStatus::kIdle, "run_cycles");
  if (cycles == 0) Fail(ErrorCode::kUsage, "run_cycles needs at least one cycle");
  skip_flag_ = false;
  status_ = FuzzerStatus::kRunning;
  CycleResult result;
  try {
    result = DoRun(cycles, timeout_ms, round);
  } catch (...) {
    status_ = FuzzerStatus::kCrashed;
    throw;
  }
  if (result.duration_ms < 1) result.duration_ms = 1;
  for (const SeedCandidate &c : result.new_seeds) {
    local_hashes_.insert(ContentHash::Of(c.payload));
  }
  status_ = result.status == FuzzerStatus::kRunning ? FuzzerStatus::kIdle
                                                    : result.status;
  skip_flag_ = false;
  return result;
}

void Fuzzer::ImportSeeds(std::span<const SeedRecord> records) {
  RequireStatus(FuzzerStatus::kIdle, "import_seeds");
  std::vector<SeedRecord> fresh;
  std::vector<std::filesystem::path> paths;
  for (const SeedRecord &r : records) {
    if (local_hashes_.contains(r.content_hash)) continue;
    fresh.push_back(r);
  }
  if (fresh.empty()) return;
  try {
    if (!queue_dir_.empty()) {
      for (const SeedRecord &r : fresh) {
        std::filesystem::path dest = queue_dir_ / QueueFileName(r.seed_id, r.content_hash);
        if (!r.payload) Fail(ErrorCode::kIo, "seed " + std::to_string(r.seed_id) + " has no payload");
        WriteFile(dest, *r.payload);
        paths.push_back(dest);
      }
    }
    DoImport(fresh, paths);
  } catch (const Error &e) {
    status_ = FuzzerStatus::kCrashed;
    Fail(ErrorCode::kIo, "sync into fuzzer " + name_ + " failed: " + e.what());
  }
  for (const SeedRecord &r : fresh) local_hashes_.insert(r.content_hash);
}

void Fuzzer::WatchdogSkip() {
  RequireStatus(FuzzerStatus::kRunning, "watchdog_skip");
  skip_flag_ = true;
}

void Fuzzer::WatchdogRestart() {
  RequireStatus(FuzzerStatus::kCrashed, "watchdog_restart");
  spdlog::info("restarting fuzzer {}", name_);
  DoRestart();
  status_ = FuzzerStatus::kIdle;
}

void Fuzzer::FinishSkip() {
  RequireStatus(FuzzerStatus::kSkipped, "finish_skip");
  status_ = FuzzerStatus::kIdle;
}

}  // namespace armada
