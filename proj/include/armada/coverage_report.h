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

#ifndef ARMADA_COVERAGE_REPORT_H_
#define ARMADA_COVERAGE_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "armada/content_hash.h"
#include "armada/types.h"

namespace armada {

// Coverage reports are line-oriented text, one stanza per seed:
//
//   seed <seed_name> <content_hash: 32 hex>
//   branch <pred: 16 hex> <succ: 16 hex>
//   ...
//   <blank line>
//
// seed_name is an adapter-chosen token without whitespace; for external
// adapters it is also the payload's file name inside the adapter's queue.
struct ReportedSeed {
  std::string name;
  ContentHash hash;
  std::vector<Branch> branches;
};

// Incremental, line-at-a-time parser. Only stanzas closed by a blank line
// are returned by TakeComplete(); an unterminated trailing stanza is held
// back (this is how partial output from a crashed adapter is treated).
class CoverageReportParser {
 public:
  // Returns an error message for a malformed line, nullopt otherwise.
  std::optional<std::string> Feed(std::string_view line);
  std::vector<ReportedSeed> TakeComplete();
  bool in_stanza() const { return current_.has_value(); }

 private:
  std::optional<ReportedSeed> current_;
  std::vector<ReportedSeed> complete_;
};

std::string FormatCoverageReport(std::span<const ReportedSeed> seeds);
// Parses a whole report. Throws Error(kProtocol) on malformed input.
std::vector<ReportedSeed> ParseCoverageReport(std::string_view text);

}  // namespace armada

#endif  // ARMADA_COVERAGE_REPORT_H_
