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

#ifndef ARMADA_SUBPROCESS_H_
#define ARMADA_SUBPROCESS_H_

#include <sys/types.h>

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace armada {

// A child process whose stdin/stdout are pipes owned by the parent. stderr
// is inherited. Writing to a dead child reports failure instead of raising
// SIGPIPE.
class Subprocess {
 public:
  using Clock = std::chrono::steady_clock;

  enum class ReadStatus { kLine, kTimeout, kEof, kInterrupted };

  Subprocess() = default;
  ~Subprocess();
  Subprocess(const Subprocess &) = delete;
  Subprocess &operator=(const Subprocess &) = delete;

  // Throws Error(kIo) when fork/exec cannot be set up. An exec failure in
  // the child shows up as EOF on the first read.
  void Spawn(const std::vector<std::string> &argv);

  // Writes `line` plus '\n'. Returns false if the child is gone.
  bool WriteLine(std::string_view line);

  // Reads one line (without '\n') before `deadline`. `interrupt` is polled
  // every few milliseconds; when it returns true the read gives up with
  // kInterrupted.
  ReadStatus ReadLine(std::string &line, Clock::time_point deadline,
                      const std::function<bool()> &interrupt = {});

  // SIGKILL and reap. No-op when not running.
  void Kill();
  // Closes stdin and waits up to `grace` for exit, then kills.
  void Close(std::chrono::milliseconds grace);

  bool running() const { return pid_ > 0; }
  pid_t pid() const { return pid_; }

 private:
  void CloseFds();

  pid_t pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
  std::string buffer_;
  bool eof_ = false;
};

}  // namespace armada

#endif  // ARMADA_SUBPROCESS_H_
