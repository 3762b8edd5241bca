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

#ifndef ARMADA_CONFIG_H_
#define ARMADA_CONFIG_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "armada/campaign.h"

namespace armada {

struct NamedTarget {
  std::string name;
  std::shared_ptr<const SyntheticTarget> target;
};

// A parsed campaign configuration file (see docs/config-format.md).
//
// `campaign` is complete except for its target: a file may list several
// targets (used by comparisons), and WithTarget() binds one of them.
struct ConfigFile {
  std::filesystem::path path;
  CampaignConfig campaign;
  std::vector<NamedTarget> targets;
  // Derive a simulated roster from the target when no [fuzzer.N] is given.
  bool implicit_roster = false;
  size_t implicit_roster_size = 0;  // 0: the target's profile count
  bool store_seeds = true;

  CampaignConfig WithTarget(const NamedTarget &target) const;
  // Requires exactly one target (or none for an external-only roster).
  CampaignConfig Single() const;
};

// Throws Error(kConfig) on malformed input, Error(kIo) if unreadable.
ConfigFile ParseConfig(std::string_view text, const std::filesystem::path &base_dir);
ConfigFile LoadConfig(const std::filesystem::path &path);

}  // namespace armada

#endif  // ARMADA_CONFIG_H_
