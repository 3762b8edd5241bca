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

#include "armada/synthetic_target.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>

#include "armada/error.h"
#include "armada/text_util.h"

namespace armada {

namespace {

constexpr size_t kAbsent = std::numeric_limits<size_t>::max();

void CheckProbability(double p, const std::string &where) {
  if (!(p >= 0.0 && p <= 1.0)) {
    Fail(ErrorCode::kConfig, where + ": probability " + FormatDouble(p) +
                                 " outside [0, 1]");
  }
}

void ValidateTable(const ProbTable &t, const std::string &where) {
  CheckProbability(t.global_default, where);
  for (const auto &[k, p] : t.profile_default) CheckProbability(p, where);
  for (const auto &[k, p] : t.exact) CheckProbability(p, where);
}

size_t MaxProfile(const ProbTable &t) {
  size_t m = 0;
  for (const auto &[k, p] : t.profile_default) m = std::max(m, k + 1);
  for (const auto &[k, p] : t.exact) m = std::max(m, k.first + 1);
  return m;
}

}  // namespace

double ProbTable::Lookup(size_t profile, const Branch &branch) const {
  if (auto it = exact.find({profile, branch}); it != exact.end()) return it->second;
  if (auto it = profile_default.find(profile); it != profile_default.end()) {
    return it->second;
  }
  return global_default;
}

SyntheticTarget::SyntheticTarget(TargetDescription desc) : desc_(std::move(desc)) {
  blocks_ = desc_.entries;
  blocks_.insert(blocks_.end(), desc_.blocks.begin(), desc_.blocks.end());
  for (const Branch &b : desc_.branches) {
    blocks_.push_back(b.pred);
    blocks_.push_back(b.succ);
  }
  std::sort(blocks_.begin(), blocks_.end());
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());

  branches_ = desc_.branches;
  std::sort(branches_.begin(), branches_.end());
  if (std::adjacent_find(branches_.begin(), branches_.end()) != branches_.end()) {
    Fail(ErrorCode::kConfig, "target declares a branch twice");
  }
  if (!branches_.empty() && desc_.entries.empty()) {
    Fail(ErrorCode::kConfig, "target has branches but no entry block");
  }

  is_entry_.assign(blocks_.size(), false);
  for (BlockId e : desc_.entries) {
    size_t i = BlockIndex(e);
    if (!is_entry_[i]) entry_indices_.push_back(i);
    is_entry_[i] = true;
  }
  std::sort(entry_indices_.begin(), entry_indices_.end());

  outgoing_.assign(blocks_.size(), {});
  std::vector<size_t> indegree(blocks_.size(), 0);
  std::vector<bool> is_succ(blocks_.size(), false);
  pred_index_.resize(branches_.size());
  succ_index_.resize(branches_.size());
  for (size_t i = 0; i < branches_.size(); ++i) {
    pred_index_[i] = BlockIndex(branches_[i].pred);
    succ_index_[i] = BlockIndex(branches_[i].succ);
    outgoing_[pred_index_[i]].push_back(i);
    ++indegree[succ_index_[i]];
    is_succ[succ_index_[i]] = true;
  }
  for (size_t i = 0; i < branches_.size(); ++i) {
    size_t p = pred_index_[i];
    if (!is_entry_[p] && !is_succ[p]) {
      Fail(ErrorCode::kConfig, "branch " + HexId(branches_[i].pred.value) + "->" +
                                   HexId(branches_[i].succ.value) +
                                   ": pred is neither an entry nor a successor");
    }
  }

  // Kahn's algorithm; anything left over sits on a cycle.
  std::deque<size_t> ready;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (indegree[b] == 0) ready.push_back(b);
  }
  size_t visited = 0;
  while (!ready.empty()) {
    size_t b = ready.front();
    ready.pop_front();
    ++visited;
    for (size_t br : outgoing_[b]) {
      if (--indegree[succ_index_[br]] == 0) ready.push_back(succ_index_[br]);
    }
  }
  if (visited != blocks_.size()) Fail(ErrorCode::kConfig, "branch graph has a cycle");

  ValidateTable(desc_.probs, "[probs]");
  Round last = 0;
  for (const Phase &ph : desc_.phases) {
    if (ph.switch_round <= last) {
      Fail(ErrorCode::kConfig, "[phases] rounds must be >= 1 and ascending");
    }
    last = ph.switch_round;
    ValidateTable(ph.probs, "[phases] round " + std::to_string(ph.switch_round));
  }
  if (desc_.default_cycle_ms <= 0) Fail(ErrorCode::kConfig, "cycle_ms must be > 0");
  for (const auto &[k, ms] : desc_.cycle_ms) {
    if (ms <= 0) Fail(ErrorCode::kConfig, "cycle_ms must be > 0");
  }
  for (const auto &[key, p] : desc_.probs.exact) {
    if (BranchIndex(key.second) == kAbsent) {
      Fail(ErrorCode::kConfig, "[probs] names an undeclared branch");
    }
  }

  profile_count_ = std::max<size_t>(1, MaxProfile(desc_.probs));
  for (const Phase &ph : desc_.phases) {
    profile_count_ = std::max(profile_count_, MaxProfile(ph.probs));
  }
  for (const auto &[k, ms] : desc_.cycle_ms) {
    profile_count_ = std::max(profile_count_, k + 1);
  }
}

size_t SyntheticTarget::BlockIndex(BlockId id) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), id);
  if (it == blocks_.end() || *it != id) return kAbsent;
  return static_cast<size_t>(it - blocks_.begin());
}

size_t SyntheticTarget::BranchIndex(const Branch &b) const {
  auto it = std::lower_bound(branches_.begin(), branches_.end(), b);
  if (it == branches_.end() || *it != b) return kAbsent;
  return static_cast<size_t>(it - branches_.begin());
}

int64_t SyntheticTarget::CycleMs(size_t profile) const {
  auto it = desc_.cycle_ms.find(profile);
  return it == desc_.cycle_ms.end() ? desc_.default_cycle_ms : it->second;
}

size_t SyntheticTarget::PhaseAt(Round round) const {
  size_t phase = 0;
  for (size_t i = 0; i < desc_.phases.size(); ++i) {
    if (round >= desc_.phases[i].switch_round) phase = i + 1;
  }
  return phase;
}

std::vector<double> SyntheticTarget::DenseProbs(size_t profile, size_t phase) const {
  const ProbTable &table = phase == 0 ? desc_.probs : desc_.phases.at(phase - 1).probs;
  std::vector<double> out(branches_.size());
  for (size_t i = 0; i < branches_.size(); ++i) {
    out[i] = table.Lookup(profile, branches_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

[[noreturn]] void ParseError(size_t line_no, const std::string &msg) {
  Fail(ErrorCode::kConfig, "target line " + std::to_string(line_no) + ": " + msg);
}

BlockId ParseBlock(std::string_view s, size_t line_no) {
  uint64_t v;
  if (!ParseU64(s, v)) ParseError(line_no, "bad block id '" + std::string(s) + "'");
  return BlockId{v};
}

double ParseProb(std::string_view s, size_t line_no) {
  double p;
  if (!ParseDouble(s, p)) ParseError(line_no, "bad probability '" + std::string(s) + "'");
  return p;
}

size_t ParseProfile(std::string_view s, size_t line_no) {
  uint64_t v;
  if (!ParseU64(s, v)) ParseError(line_no, "bad fuzzer index '" + std::string(s) + "'");
  return static_cast<size_t>(v);
}

// default <p> | fuzzer <k> default <p> | fuzzer <k> <pred> <succ> <p>
void ParseProbLine(const std::vector<std::string_view> &f, ProbTable &t,
                   size_t line_no) {
  if (f.size() == 2 && f[0] == "default") {
    t.global_default = ParseProb(f[1], line_no);
  } else if (f.size() == 4 && f[0] == "fuzzer" && f[2] == "default") {
    t.profile_default[ParseProfile(f[1], line_no)] = ParseProb(f[3], line_no);
  } else if (f.size() == 5 && f[0] == "fuzzer") {
    Branch b{ParseBlock(f[2], line_no), ParseBlock(f[3], line_no)};
    t.exact[{ParseProfile(f[1], line_no), b}] = ParseProb(f[4], line_no);
  } else {
    ParseError(line_no, "expected 'default <p>', 'fuzzer <k> default <p>' or "
                        "'fuzzer <k> <pred> <succ> <p>'");
  }
}

void SerializeTable(const ProbTable &t, std::string &out) {
  out += "default " + FormatDouble(t.global_default) + "\n";
  for (const auto &[k, p] : t.profile_default) {
    out += "fuzzer " + std::to_string(k) + " default " + FormatDouble(p) + "\n";
  }
  for (const auto &[key, p] : t.exact) {
    out += "fuzzer " + std::to_string(key.first) + " 0x" +
           HexId(key.second.pred.value) + " 0x" + HexId(key.second.succ.value) +
           " " + FormatDouble(p) + "\n";
  }
}

}  // namespace

SyntheticTarget SyntheticTarget::Parse(std::string_view text) {
  TargetDescription d;
  std::string section;
  size_t line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') ParseError(line_no, "unterminated section header");
      section = std::string(line.substr(1, line.size() - 2));
      if (section != "blocks" && section != "branches" && section != "probs" &&
          section != "cycle_ms" && section != "phases") {
        ParseError(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    std::vector<std::string_view> f = SplitWhitespace(line);
    if (section == "blocks") {
      bool entry = f[0] == "entry";
      for (size_t i = entry ? 1 : 0; i < f.size(); ++i) {
        (entry ? d.entries : d.blocks).push_back(ParseBlock(f[i], line_no));
      }
    } else if (section == "branches") {
      if (f.size() != 2) ParseError(line_no, "expected '<pred> <succ>'");
      d.branches.push_back({ParseBlock(f[0], line_no), ParseBlock(f[1], line_no)});
    } else if (section == "probs") {
      ParseProbLine(f, d.probs, line_no);
    } else if (section == "cycle_ms") {
      int64_t ms;
      if (f.size() == 2 && f[0] == "default" && ParseI64(f[1], ms)) {
        d.default_cycle_ms = ms;
      } else if (f.size() == 3 && f[0] == "fuzzer" && ParseI64(f[2], ms)) {
        d.cycle_ms[ParseProfile(f[1], line_no)] = ms;
      } else {
        ParseError(line_no, "expected 'default <ms>' or 'fuzzer <k> <ms>'");
      }
    } else if (section == "phases") {
      if (f[0] == "round") {
        uint64_t r;
        if (f.size() != 2 || !ParseU64(f[1], r)) ParseError(line_no, "expected 'round <n>'");
        d.phases.push_back(Phase{r, {}});
      } else {
        if (d.phases.empty()) ParseError(line_no, "phase entry before 'round <n>'");
        ParseProbLine(f, d.phases.back().probs, line_no);
      }
    } else {
      ParseError(line_no, "content outside a section");
    }
  }
  return SyntheticTarget(std::move(d));
}

SyntheticTarget SyntheticTarget::Load(const std::filesystem::path &path) {
  std::string text = ReadFile(path);
  try {
    return Parse(text);
  } catch (const Error &e) {
    Fail(e.code(), path.string() + ": " + e.what());
  }
}

std::string SyntheticTarget::Serialize() const {
  std::string out = "[blocks]\n";
  for (BlockId e : desc_.entries) out += "entry 0x" + HexId(e.value) + "\n";
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (!is_entry_[i]) out += "0x" + HexId(blocks_[i].value) + "\n";
  }
  out += "[branches]\n";
  for (const Branch &b : branches_) {
    out += "0x" + HexId(b.pred.value) + " 0x" + HexId(b.succ.value) + "\n";
  }
  out += "[probs]\n";
  SerializeTable(desc_.probs, out);
  out += "[cycle_ms]\ndefault " + std::to_string(desc_.default_cycle_ms) + "\n";
  for (const auto &[k, ms] : desc_.cycle_ms) {
    out += "fuzzer " + std::to_string(k) + " " + std::to_string(ms) + "\n";
  }
  if (!desc_.phases.empty()) {
    out += "[phases]\n";
    for (const Phase &ph : desc_.phases) {
      out += "round " + std::to_string(ph.switch_round) + "\n";
      SerializeTable(ph.probs, out);
    }
  }
  return out;
}

}  // namespace armada
