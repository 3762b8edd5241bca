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

#include "armada/types.h"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "armada/error.h"

namespace armada {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kOrdering: return "ordering";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kProtocol: return "protocol";
    case ErrorCode::kCampaign: return "campaign";
  }
  return "unknown";
}

void SeedCoverage::Canonicalize() {
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
}

bool SeedCoverage::IsCanonical() const {
  return std::adjacent_find(branches.begin(), branches.end(),
                            [](const Branch &a, const Branch &b) {
                              return !(a < b);
                            }) == branches.end();
}

bool SeedCoverage::HasDuplicates() const {
  std::vector<Branch> sorted = branches;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::string HexId(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return std::string(buf, 16);
}

bool ParseHexId(std::string_view text, uint64_t &out) {
  if (text.size() != 16) return false;
  for (char c : text) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + 16, out, 16);
  return ec == std::errc() && ptr == text.data() + 16;
}

}  // namespace armada
