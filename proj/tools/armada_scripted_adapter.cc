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

// Reference adapter speaking the stdin/stdout fuzzer protocol, with scripted
// misbehaviour for exercising the watchdog.
//
//   --mode ok          one new seed per RUN
//   --mode hang        every RUN blocks until SKIP arrives
//   --mode hang-hard   every RUN blocks and ignores SKIP
//   --mode crash       the --crash-on-run'th RUN reports two complete seeds
//                      and half of a third, then exits; with --marker the
//                      crash happens once per marker file
//
// Seeds reuse a hub block: the first RUN covers 0x10 -> 0x11 and every later
// seed adds a fresh edge out of 0x11.

#include <CLI11.hpp>
#include <poll.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>

#include "armada/content_hash.h"
#include "armada/coverage_report.h"
#include "armada/text_util.h"
#include "armada/types.h"

namespace {

constexpr uint64_t kHub = 0x10;
constexpr uint64_t kHubNext = 0x11;

class LineReader {
 public:
  // Returns false on EOF. timeout_ms < 0 blocks; 0 polls; on timeout
  // `line` is left empty and the call returns true.
  bool Next(std::string &line, int timeout_ms) {
    line.clear();
    for (;;) {
      size_t nl = buf_.find('\n');
      if (nl != std::string::npos) {
        line = buf_.substr(0, nl);
        buf_.erase(0, nl + 1);
        return true;
      }
      pollfd p{0, POLLIN, 0};
      int r = poll(&p, 1, timeout_ms);
      if (r == 0) return true;
      if (r < 0) continue;
      char tmp[4096];
      ssize_t n = read(0, tmp, sizeof(tmp));
      if (n <= 0) return false;
      buf_.append(tmp, static_cast<size_t>(n));
    }
  }

 private:
  std::string buf_;
};

struct Options {
  std::string mode = "ok";
  int crash_on_run = 1;
  std::string marker;
  int cycle_ms = 1;
};

class Adapter {
 public:
  explicit Adapter(Options o) : o_(std::move(o)) {}

  int Serve() {
    std::string line;
    while (in_.Next(line, -1)) {
      std::vector<std::string_view> f = armada::SplitWhitespace(line);
      if (f.empty()) continue;
      if (f[0] == "INIT" && f.size() == 2) {
        queue_ = std::string(f[1]);
        Say("READY");
      } else if (f[0] == "IMPORT" && f.size() == 2) {
        uint64_t n = 0;
        armada::ParseU64(f[1], n);
        for (uint64_t i = 0; i < n && in_.Next(line, -1); ++i) {
        }
        Say("READY");
      } else if (f[0] == "RUN" && f.size() == 3) {
        uint64_t cycles = 1;
        armada::ParseU64(f[1], cycles);
        if (!Run(cycles)) return 0;
      } else if (f[0] == "SHUTDOWN") {
        return 0;
      }
      // SKIP outside a run is stale; ignore it.
    }
    return 0;
  }

 private:
  void Say(const std::string &s) {
    std::fputs((s + "\n").c_str(), stdout);
    std::fflush(stdout);
  }

  armada::ReportedSeed MakeSeed(armada::Branch b) {
    armada::ReportedSeed s;
    std::string payload = "branch " + armada::HexId(b.pred.value) + " " +
                          armada::HexId(b.succ.value) + "\n";
    s.name = "adapter_" + std::to_string(getpid()) + "_" + std::to_string(serial_++);
    s.hash = armada::ContentHash::Of(payload);
    s.branches = {b};
    armada::WriteFile(queue_ / s.name, payload);
    return s;
  }

  armada::Branch FreshEdge() {
    uint64_t succ = (static_cast<uint64_t>(getpid()) << 24) + 0x1000 + serial_;
    return {{kHubNext}, {succ}};
  }

  // Returns false when the process should exit.
  bool Run(uint64_t cycles) {
    ++runs_;
    auto start = std::chrono::steady_clock::now();
    if (o_.mode == "hang" || o_.mode == "hang-hard") return Hang(start);
    if (o_.mode == "crash" && runs_ == o_.crash_on_run &&
        (o_.marker.empty() || !std::filesystem::exists(o_.marker))) {
      if (!o_.marker.empty()) std::ofstream(o_.marker) << "crashed\n";
      Crash();
    }

    uint64_t done = 0;
    std::string line;
    bool skipped = false;
    while (done < cycles && !skipped) {
      if (!in_.Next(line, o_.cycle_ms)) return false;
      if (armada::Trim(line) == "SKIP") skipped = true;
      ++done;
    }
    armada::Branch b = first_ ? armada::Branch{{kHub}, {kHubNext}} : FreshEdge();
    first_ = false;
    armada::ReportedSeed seed = MakeSeed(b);
    Result(start, done, armada::FormatCoverageReport({&seed, 1}));
    return true;
  }

  bool Hang(std::chrono::steady_clock::time_point start) {
    std::string line;
    for (;;) {
      if (!in_.Next(line, -1)) return false;
      if (armada::Trim(line) == "SKIP" && o_.mode == "hang") break;
    }
    Result(start, 0, "");
    return true;
  }

  [[noreturn]] void Crash() {
    armada::ReportedSeed a = MakeSeed(FreshEdge());
    armada::ReportedSeed b = MakeSeed(FreshEdge());
    armada::ReportedSeed c = MakeSeed(FreshEdge());
    std::string partial = armada::FormatCoverageReport({&c, 1});
    partial.resize(partial.size() - 1);  // drop the terminating blank line
    std::string text = "RESULT 1 0\n" + armada::FormatCoverageReport({&a, 1}) +
                       armada::FormatCoverageReport({&b, 1}) + partial;
    std::fputs(text.c_str(), stdout);
    std::fflush(stdout);
    _exit(3);
  }

  void Result(std::chrono::steady_clock::time_point start, uint64_t done,
              const std::string &report) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    Say("RESULT " + std::to_string(ms) + " " + std::to_string(done) + "\n" + report + "END");
  }

  Options o_;
  LineReader in_;
  std::filesystem::path queue_;
  int runs_ = 0;
  uint64_t serial_ = 0;
  bool first_ = true;
};

}  // namespace

int main(int argc, char **argv) {
  Options o;
  CLI::App app{"Scripted fuzzer adapter"};
  app.add_option("--mode", o.mode)->check(CLI::IsMember({"ok", "hang", "hang-hard", "crash"}));
  app.add_option("--crash-on-run", o.crash_on_run)->check(CLI::PositiveNumber);
  app.add_option("--marker", o.marker);
  app.add_option("--cycle-ms", o.cycle_ms)->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);
  return Adapter(o).Serve();
}
