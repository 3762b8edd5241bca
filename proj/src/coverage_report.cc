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

#include "armada/coverage_report.h"

#include <sstream>

#include "armada/error.h"
#include "armada/text_util.h"

namespace armada {

std::optional<std::string> CoverageReportParser::Feed(std::string_view line) {
  line = StripLineEnd(line);
  if (line.empty()) {
    if (current_) {
      complete_.push_back(std::move(*current_));
      current_.reset();
    }
    return std::nullopt;
  }
  std::vector<std::string_view> f = SplitWhitespace(line);
  if (f[0] == "seed") {
    if (current_) return "seed stanza not terminated by a blank line";
    if (f.size() != 3) return "expected: seed <name> <hash>";
    ReportedSeed seed;
    seed.name = std::string(f[1]);
    if (!ContentHash::Parse(f[2], seed.hash)) {
      return "bad content hash '" + std::string(f[2]) + "'";
    }
    current_ = std::move(seed);
    return std::nullopt;
  }
  if (f[0] == "branch") {
    if (!current_) return "branch line outside a seed stanza";
    if (f.size() != 3) return "expected: branch <pred> <succ>";
    Branch br;
    if (!ParseHexId(f[1], br.pred.value) || !ParseHexId(f[2], br.succ.value)) {
      return "branch ids must be 16 lowercase hex digits";
    }
    current_->branches.push_back(br);
    return std::nullopt;
  }
  return "unknown report line '" + std::string(line) + "'";
}

std::vector<ReportedSeed> CoverageReportParser::TakeComplete() {
  std::vector<ReportedSeed> out;
  out.swap(complete_);
  return out;
}

std::string FormatCoverageReport(std::span<const ReportedSeed> seeds) {
  std::string out;
  for (const ReportedSeed &s : seeds) {
    out += "seed " + s.name + " " + s.hash.Hex() + "\n";
    for (const Branch &b : s.branches) {
      out += "branch " + HexId(b.pred.value) + " " + HexId(b.succ.value) + "\n";
    }
    out += "\n";
  }
  return out;
}

std::vector<ReportedSeed> ParseCoverageReport(std::string_view text) {
  CoverageReportParser parser;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (auto err = parser.Feed(line)) {
      Fail(ErrorCode::kProtocol,
           "coverage report line " + std::to_string(line_no) + ": " + *err);
    }
  }
  if (parser.in_stanza()) {
    Fail(ErrorCode::kProtocol, "coverage report ends inside a stanza");
  }
  return parser.TakeComplete();
}

}  // namespace armada
