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

#ifndef ARMADA_EXTERNAL_FUZZER_H_
#define ARMADA_EXTERNAL_FUZZER_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "armada/fuzzer.h"
#include "armada/subprocess.h"

namespace armada {

struct ExternalOptions {
  // Budget for READY after INIT / IMPORT.
  std::chrono::milliseconds handshake_timeout{10'000};
  // How long a skipped adapter has to deliver its RESULT before it is
  // killed and treated as crashed.
  std::chrono::milliseconds skip_grace{2'000};
};

// A fuzzer living in another process, driven over its stdin/stdout:
//
//   orchestrator -> adapter   INIT <queue_dir>
//                             IMPORT <n>, then n payload paths
//                             RUN <cycles> <timeout_ms>
//                             SKIP
//                             SHUTDOWN
//   adapter -> orchestrator   READY                (after INIT and IMPORT)
//                             RESULT <duration_ms> <cycles_completed>,
//                               then a coverage report, then END
//                             ERROR <message>
//
// Seeds named in the coverage report are read from <queue_dir>/<name>.
// Round durations are measured on the orchestrator's wall clock.
class ExternalFuzzer : public Fuzzer {
 public:
  // Spawns the adapter immediately. If it does not come up the fuzzer
  // starts out crashed and the orchestrator's restart path takes over.
  ExternalFuzzer(size_t index, std::string name, std::vector<std::string> command,
                 std::filesystem::path queue_dir, ExternalOptions options = {});
  ~ExternalFuzzer() override;

  void Shutdown() override;
  pid_t pid() const { return process_.pid(); }
  uint64_t restarts() const { return restarts_; }

 protected:
  CycleResult DoRun(uint64_t cycles, int64_t timeout_ms, Round round) override;
  void DoImport(std::span<const SeedRecord> records,
                std::span<const std::filesystem::path> paths) override;
  void DoRestart() override;

 private:
  void Start();
  void AwaitReady(const char *after);

  std::vector<std::string> command_;
  ExternalOptions options_;
  Subprocess process_;
  uint64_t restarts_ = 0;
};

// Creates a fresh directory under the system temp dir.
std::filesystem::path MakeTempDir(const std::string &prefix);

}  // namespace armada

#endif  // ARMADA_EXTERNAL_FUZZER_H_
