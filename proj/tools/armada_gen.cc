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

// Writes the generated target suites as target files.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include "armada/suites.h"
#include "armada/synthetic_target.h"
#include "armada/text_util.h"

int main(int argc, char **argv) {
  CLI::App app{"armada-gen: write synthetic target suites"};
  std::string out;
  std::vector<std::string> which = {"breakthrough", "hetero", "phase", "tree"};
  app.add_option("--out", out, "output directory")->required();
  app.add_option("--suite", which, "suites to write")
      ->check(CLI::IsMember({"breakthrough", "hetero", "phase", "tree"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  namespace s = armada::suites;
  try {
    std::filesystem::create_directories(out);
    for (const std::string &name : which) {
      std::vector<s::NamedDescription> suite;
      if (name == "breakthrough") suite = s::BreakthroughSuite();
      else if (name == "hetero") suite = s::HeterogeneousSuite();
      else if (name == "phase") suite = s::PhaseSwapSuite();
      else suite = {s::SweepTree()};
      for (const auto &n : suite) {
        const std::filesystem::path p = std::filesystem::path(out) / (n.name + ".target");
        armada::WriteFile(p, armada::SyntheticTarget(n.desc).Serialize());
        std::printf("%s\n", p.c_str());
      }
    }
  } catch (const std::exception &e) {
    std::fprintf(stderr, "armada-gen: %s\n", e.what());
    return 1;
  }
  return 0;
}
