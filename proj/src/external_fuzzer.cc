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

#include <spdlog/spdlog.h>
#include <stdlib.h>

#include "armada/coverage_report.h"
#include "armada/error.h"
#include "armada/text_util.h"

namespace armada {

namespace {

using Clock = Subprocess::Clock;

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::filesystem::path EnsureQueueDir(std::filesystem::path dir, size_t index) {
  if (!dir.empty()) return dir;
  return MakeTempDir("armada-fuzzer" + std::to_string(index) + "-");
}

}  // namespace

std::filesystem::path MakeTempDir(const std::string &prefix) {
  std::string tmpl =
      (std::filesystem::temp_directory_path() / (prefix + "XXXXXX")).string();
  if (mkdtemp(tmpl.data()) == nullptr) {
    Fail(ErrorCode::kIo, "cannot create temp dir " + tmpl);
  }
  return tmpl;
}

ExternalFuzzer::ExternalFuzzer(size_t index, std::string name,
                               std::vector<std::string> command,
                               std::filesystem::path queue_dir,
                               ExternalOptions options)
    : Fuzzer(index, FuzzerKind::kExternal, std::move(name),
             EnsureQueueDir(std::move(queue_dir), index)),
      command_(std::move(command)),
      options_(options) {
  try {
    Start();
  } catch (const Error &e) {
    spdlog::warn("fuzzer {} failed to start: {}", this->name(), e.what());
    MarkCrashed();
  }
}

ExternalFuzzer::~ExternalFuzzer() { Shutdown(); }

void ExternalFuzzer::Start() {
  process_.Spawn(command_);
  if (!process_.WriteLine("INIT " + queue_dir().string())) {
    process_.Kill();
    Fail(ErrorCode::kIo, "adapter closed stdin during INIT");
  }
  AwaitReady("INIT");
}

void ExternalFuzzer::AwaitReady(const char *after) {
  auto deadline = Clock::now() + options_.handshake_timeout;
  std::string line;
  for (;;) {
    auto st = process_.ReadLine(line, deadline);
    if (st != Subprocess::ReadStatus::kLine) {
      process_.Kill();
      Fail(ErrorCode::kIo, std::string("adapter not READY after ") + after);
    }
    line = std::string(Trim(line));
    if (line == "READY") return;
    if (StartsWith(line, "ERROR")) {
      process_.Kill();
      Fail(ErrorCode::kIo, "adapter error after " + std::string(after) + ": " + line);
    }
    spdlog::debug("fuzzer {}: ignoring '{}' while waiting for READY", name(), line);
  }
}

void ExternalFuzzer::Shutdown() {
  if (!process_.running()) return;
  process_.WriteLine("SHUTDOWN");
  process_.Close(std::chrono::milliseconds(500));
}

void ExternalFuzzer::DoImport(std::span<const SeedRecord> records,
                              std::span<const std::filesystem::path> paths) {
  (void)records;
  if (!process_.running()) Fail(ErrorCode::kIo, "adapter not running");
  bool ok = process_.WriteLine("IMPORT " + std::to_string(paths.size()));
  for (const auto &p : paths) ok = ok && process_.WriteLine(p.string());
  if (!ok) {
    process_.Kill();
    Fail(ErrorCode::kIo, "adapter closed stdin during IMPORT");
  }
  AwaitReady("IMPORT");
}

void ExternalFuzzer::DoRestart() {
  process_.Kill();
  ++restarts_;
  Start();
}

CycleResult ExternalFuzzer::DoRun(uint64_t cycles, int64_t timeout_ms, Round) {
  CycleResult result;
  const auto start = Clock::now();
  auto crash = [&](std::string why) {
    process_.Kill();
    result.status = FuzzerStatus::kCrashed;
    result.diagnostic = std::move(why);
  };

  if (!process_.running() ||
      !process_.WriteLine("RUN " + std::to_string(cycles) + " " +
                          std::to_string(timeout_ms))) {
    crash("adapter not accepting RUN");
  }

  auto deadline = start + std::chrono::milliseconds(timeout_ms);
  bool skip_sent = false;
  bool in_result = false;
  bool finished = false;
  CoverageReportParser parser;
  std::string line;
  while (result.status != FuzzerStatus::kCrashed && !finished) {
    auto st = process_.ReadLine(line, deadline,
                                [&] { return !skip_sent && skip_requested(); });
    if (st == Subprocess::ReadStatus::kInterrupted ||
        (st == Subprocess::ReadStatus::kTimeout && !skip_sent)) {
      spdlog::info("fuzzer {}: watchdog skip", name());
      skip_sent = true;
      deadline = Clock::now() + options_.skip_grace;
      if (!process_.WriteLine("SKIP")) crash("adapter gone at SKIP");
      continue;
    }
    if (st == Subprocess::ReadStatus::kTimeout) {
      crash("adapter unresponsive after SKIP");
      break;
    }
    if (st == Subprocess::ReadStatus::kEof) {
      crash("adapter exited during RUN");
      break;
    }
    std::string_view l = StripLineEnd(line);
    if (!in_result) {
      std::vector<std::string_view> f = SplitWhitespace(l);
      if (f.empty() || f[0] == "READY") continue;
      if (f[0] == "RESULT") {
        int64_t reported_ms;
        uint64_t done;
        if (f.size() != 3 || !ParseI64(f[1], reported_ms) || !ParseU64(f[2], done)) {
          crash("malformed RESULT line");
          break;
        }
        result.cycles_completed = done;
        in_result = true;
      } else if (f[0] == "ERROR") {
        crash("adapter error: " + std::string(l));
      } else {
        crash("protocol violation: '" + std::string(l) + "'");
      }
      continue;
    }
    if (l == "END") {
      if (parser.in_stanza()) parser.Feed("");
      finished = true;
      break;
    }
    if (auto err = parser.Feed(l)) crash("bad coverage report: " + *err);
  }

  uint64_t ordinal = 0;
  for (ReportedSeed &s : parser.TakeComplete()) {
    std::filesystem::path path = queue_dir() / s.name;
    SeedCandidate c;
    try {
      c.payload = ReadFile(path);
    } catch (const Error &e) {
      spdlog::warn("fuzzer {}: dropping seed {}: {}", name(), s.name, e.what());
      continue;
    }
    if (ContentHash::Of(c.payload) != s.hash) {
      spdlog::warn("fuzzer {}: dropping seed {}: content hash mismatch", name(), s.name);
      continue;
    }
    c.coverage.seed_id = ordinal++;
    c.coverage.branches = std::move(s.branches);
    result.new_seeds.push_back(std::move(c));
  }

  if (result.status != FuzzerStatus::kCrashed) {
    result.status = skip_sent ? FuzzerStatus::kSkipped : FuzzerStatus::kIdle;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  result.duration_ms = std::max<int64_t>(1, elapsed.count());
  if (!result.diagnostic.empty()) {
    spdlog::warn("fuzzer {}: {}", name(), result.diagnostic);
  }
  return result;
}

}  // namespace armada
