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

#include "armada/report.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "armada/error.h"
#include "armada/text_util.h"

namespace armada {

CoverageMatrix CoverageMatrix::Make(std::vector<std::string> strategies,
                                    std::vector<std::string> targets, size_t trials) {
  CoverageMatrix m;
  m.values.assign(strategies.size(),
                  std::vector<std::vector<std::optional<double>>>(
                      targets.size(), std::vector<std::optional<double>>(trials)));
  m.strategies = std::move(strategies);
  m.targets = std::move(targets);
  return m;
}

double LowerMedian(std::vector<double> values) {
  if (values.empty()) Fail(ErrorCode::kUsage, "median of no values");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

ScoreTable ComputeScores(const CoverageMatrix &m) {
  if (m.strategies.empty() || m.targets.empty()) {
    Fail(ErrorCode::kUsage, "score table needs at least one strategy and target");
  }
  bool any_trial = false;
  for (const auto &s : m.values) {
    for (const auto &t : s) any_trial = any_trial || !t.empty();
  }
  if (!any_trial) Fail(ErrorCode::kUsage, "score table needs at least one trial");

  const size_t S = m.strategies.size(), T = m.targets.size();
  ScoreTable out;
  out.strategies = m.strategies;
  out.targets = m.targets;
  out.median.assign(S, std::vector<std::optional<double>>(T));
  out.score.assign(S, std::vector<std::optional<double>>(T));
  out.average_score.assign(S, std::nullopt);

  for (size_t s = 0; s < S; ++s) {
    for (size_t t = 0; t < T; ++t) {
      std::vector<double> valid;
      for (const auto &v : m.values[s][t]) {
        if (v) valid.push_back(*v);
      }
      if (!valid.empty()) out.median[s][t] = LowerMedian(valid);
    }
  }
  for (size_t t = 0; t < T; ++t) {
    std::optional<double> best;
    for (size_t s = 0; s < S; ++s) {
      if (out.median[s][t] && (!best || *out.median[s][t] > *best)) best = out.median[s][t];
    }
    for (size_t s = 0; s < S; ++s) {
      if (!out.median[s][t]) continue;
      // A target nobody covered at all scores everyone 100.
      out.score[s][t] = *best > 0 ? 100.0 * *out.median[s][t] / *best : 100.0;
    }
  }
  for (size_t s = 0; s < S; ++s) {
    double sum = 0;
    size_t n = 0;
    for (size_t t = 0; t < T; ++t) {
      if (out.score[s][t]) {
        sum += *out.score[s][t];
        ++n;
      }
    }
    if (n) out.average_score[s] = sum / static_cast<double>(n);
  }
  return out;
}

std::vector<Enhancement> BaselineEnhancement(const ScoreTable &table) {
  std::vector<Enhancement> out;
  for (size_t s = 1; s < table.strategies.size(); ++s) {
    Enhancement e;
    e.versus = table.strategies[s];
    double ratio_sum = 0, base_sum = 0, other_sum = 0;
    size_t n = 0;
    for (size_t t = 0; t < table.targets.size(); ++t) {
      const auto &b = table.median[0][t];
      const auto &o = table.median[s][t];
      if (!b || !o || *o <= 0) continue;
      ratio_sum += *b / *o - 1.0;
      base_sum += *b;
      other_sum += *o;
      ++n;
    }
    if (n) {
      e.mean_of_ratios = ratio_sum / static_cast<double>(n);
      e.ratio_of_means = base_sum / other_sum - 1.0;
    }
    out.push_back(e);
  }
  return out;
}

namespace {

std::string Fixed(std::optional<double> v, int digits) {
  if (!v) return "invalid";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, *v);
  return buf;
}

}  // namespace

std::string FormatScoreTable(const ScoreTable &table) {
  std::string out = "strategy";
  for (const std::string &t : table.targets) out += "\t" + t;
  out += "\taverage_score\n";
  for (size_t s = 0; s < table.strategies.size(); ++s) {
    out += table.strategies[s];
    for (size_t t = 0; t < table.targets.size(); ++t) {
      out += "\t" + Fixed(table.median[s][t], 1) + " (" + Fixed(table.score[s][t], 2) + ")";
    }
    out += "\t" + Fixed(table.average_score[s], 2) + "\n";
  }
  std::vector<Enhancement> enh = BaselineEnhancement(table);
  if (!enh.empty()) {
    out += "\ncoverage enhancement of " + table.strategies[0] + "\n";
    for (const Enhancement &e : enh) {
      out += "  vs " + e.versus + ": mean of per-target ratios " +
             Fixed(e.mean_of_ratios ? std::optional(*e.mean_of_ratios * 100) : std::nullopt, 2) +
             "%, ratio of summed medians " +
             Fixed(e.ratio_of_means ? std::optional(*e.ratio_of_means * 100) : std::nullopt, 2) +
             "%\n";
    }
  }
  return out;
}

std::string ScoresCsv(const ScoreTable &table) {
  std::string out = "strategy,target,median_branches,score\n";
  for (size_t s = 0; s < table.strategies.size(); ++s) {
    for (size_t t = 0; t < table.targets.size(); ++t) {
      out += table.strategies[s] + "," + table.targets[t] + "," +
             (table.median[s][t] ? FormatDouble(*table.median[s][t]) : "") + "," +
             (table.score[s][t] ? FormatDouble(*table.score[s][t]) : "") + "\n";
    }
    out += table.strategies[s] + ",*average*,," +
           (table.average_score[s] ? FormatDouble(*table.average_score[s]) : "") + "\n";
  }
  return out;
}

std::string FinalCoverageCsv(const CoverageMatrix &m) {
  std::string out = "strategy,target,trial,branches\n";
  for (size_t s = 0; s < m.strategies.size(); ++s) {
    for (size_t t = 0; t < m.targets.size(); ++t) {
      for (size_t i = 0; i < m.values[s][t].size(); ++i) {
        const auto &v = m.values[s][t][i];
        out += m.strategies[s] + "," + m.targets[t] + "," + std::to_string(i) + "," +
               (v ? FormatDouble(*v) : "") + "\n";
      }
    }
  }
  return out;
}

CoverageMatrix ParseFinalCoverageCsv(std::string_view text) {
  std::vector<std::string> strategies, targets;
  std::map<std::tuple<std::string, std::string, size_t>, std::optional<double>> cells;
  size_t trials = 0;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripLineEnd(line);
    if (line_no == 1 || line.empty()) continue;
    std::vector<std::string> f;
    size_t start = 0;
    for (;;) {
      size_t c = line.find(',', start);
      f.emplace_back(line.substr(start, c == line.npos ? line.npos : c - start));
      if (c == line.npos) break;
      start = c + 1;
    }
    uint64_t trial;
    if (f.size() != 4 || !ParseU64(f[2], trial)) {
      Fail(ErrorCode::kConfig, "final_coverage.csv line " + std::to_string(line_no) + " malformed");
    }
    if (std::find(strategies.begin(), strategies.end(), f[0]) == strategies.end()) strategies.push_back(f[0]);
    if (std::find(targets.begin(), targets.end(), f[1]) == targets.end()) targets.push_back(f[1]);
    std::optional<double> v;
    if (!f[3].empty()) {
      double d;
      if (!ParseDouble(f[3], d)) Fail(ErrorCode::kConfig, "bad coverage value on line " + std::to_string(line_no));
      v = d;
    }
    cells[{f[0], f[1], trial}] = v;
    trials = std::max<size_t>(trials, trial + 1);
  }
  CoverageMatrix m = CoverageMatrix::Make(strategies, targets, trials);
  for (const auto &[key, v] : cells) {
    size_t s = std::find(strategies.begin(), strategies.end(), std::get<0>(key)) - strategies.begin();
    size_t t = std::find(targets.begin(), targets.end(), std::get<1>(key)) - targets.begin();
    m.values[s][t][std::get<2>(key)] = v;
  }
  return m;
}

std::vector<CoveragePoint> CoverageSeries(const CampaignReport &report) {
  std::vector<CoveragePoint> out;
  out.reserve(report.trace.size());
  for (const RoundRecord &r : report.trace) {
    out.push_back({r.round, r.clock_ms, r.branches, r.fuzzer, r.reward});
  }
  return out;
}

std::string CoverageCsv(std::span<const CoveragePoint> series) {
  std::string out = "round,virtual_ms,branches,selected_fuzzer,reward\n";
  for (const CoveragePoint &p : series) {
    out += std::to_string(p.round) + "," + std::to_string(p.clock_ms) + "," +
           std::to_string(p.branches) + "," + std::to_string(p.fuzzer) + "," +
           FormatDouble(p.reward) + "\n";
  }
  return out;
}

std::vector<CoveragePoint> ParseCoverageCsv(std::string_view text) {
  std::vector<CoveragePoint> out;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripLineEnd(line);
    if (line_no == 1) {
      if (line != "round,virtual_ms,branches,selected_fuzzer,reward") {
        Fail(ErrorCode::kConfig, "coverage.csv: unexpected header");
      }
      continue;
    }
    std::vector<std::string> f = SplitList(line, ',');
    CoveragePoint p;
    uint64_t u1, u2;
    if (f.size() != 5 || !ParseU64(f[0], p.round) || !ParseI64(f[1], p.clock_ms) ||
        !ParseU64(f[2], u1) || !ParseU64(f[3], u2) || !ParseDouble(f[4], p.reward)) {
      Fail(ErrorCode::kConfig, "coverage.csv line " + std::to_string(line_no) + " malformed");
    }
    p.branches = u1;
    p.fuzzer = u2;
    out.push_back(p);
  }
  return out;
}

std::string SummaryText(const CampaignReport &r, const CampaignConfig &c) {
  std::string out;
  auto kv = [&out](const std::string &k, const std::string &v) { out += k + ": " + v + "\n"; };
  kv("name", r.name);
  kv("target", c.target_name.empty() ? "-" : c.target_name);
  kv("scheduler", SchedulerName(c.scheduler));
  kv("reward", RewardModeName(c.reward_mode));
  kv("sync", c.sync_enabled ? "on" : "off");
  kv("reset", c.reset_enabled ? "on" : "off");
  kv("seed", std::to_string(c.rng_seed));
  kv("round_budget_ms", std::to_string(c.round_budget_ms));
  kv("reset_interval_ms", std::to_string(c.reset_interval_ms));
  kv("rounds", std::to_string(r.trace.size()));
  kv("clock_ms", std::to_string(r.clock_ms));
  kv("initial_branches", std::to_string(r.initial_branches));
  kv("final_branches", std::to_string(r.final_branches));
  kv("resets", std::to_string(r.resets));
  kv("status", r.aborted ? "aborted: " + r.abort_reason : "completed");
  for (size_t i = 0; i < r.fuzzer_names.size(); ++i) {
    kv("fuzzer." + std::to_string(i),
       r.fuzzer_names[i] + " selections=" + std::to_string(r.selections[i]) +
           " reward_sum=" + FormatDouble(r.reward_sums[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Comparisons

Comparison RunComparison(std::span<const ConfigFile> strategies, unsigned trials,
                         unsigned threads) {
  if (strategies.size() < 1) Fail(ErrorCode::kUsage, "comparison needs a strategy");
  if (trials < 1) Fail(ErrorCode::kUsage, "comparison needs at least one trial");

  std::vector<std::string> names;
  std::vector<std::string> targets;
  for (const ConfigFile &cf : strategies) {
    std::string name = cf.campaign.name;
    int dup = 1;
    while (std::find(names.begin(), names.end(), name) != names.end()) {
      name = cf.campaign.name + "#" + std::to_string(++dup);
    }
    names.push_back(name);
    if (cf.targets.empty()) Fail(ErrorCode::kConfig, "strategy " + name + " has no target");
    for (const NamedTarget &t : cf.targets) {
      if (std::find(targets.begin(), targets.end(), t.name) == targets.end()) {
        targets.push_back(t.name);
      }
    }
  }

  struct Job {
    size_t s, t, trial;
    const NamedTarget *target;
  };
  std::vector<Job> jobs;
  for (size_t s = 0; s < strategies.size(); ++s) {
    for (const NamedTarget &nt : strategies[s].targets) {
      size_t t = std::find(targets.begin(), targets.end(), nt.name) - targets.begin();
      for (size_t i = 0; i < trials; ++i) jobs.push_back({s, t, i, &nt});
    }
  }

  Comparison out;
  out.matrix = CoverageMatrix::Make(names, targets, trials);
  std::vector<std::vector<size_t>> traces(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t j = next++; j < jobs.size(); j = next++) {
      const Job &job = jobs[j];
      try {
        CampaignConfig c = strategies[job.s].WithTarget(*job.target);
        c.rng_seed += job.trial;
        c.campaign_dir.clear();
        c.trace_path.clear();
        CampaignReport r = RunCampaign(c);
        if (r.aborted) continue;
        out.matrix.values[job.s][job.t][job.trial] = static_cast<double>(r.final_branches);
        for (const RoundRecord &rec : r.trace) traces[j].push_back(rec.branches);
      } catch (const std::exception &e) {
        spdlog::error("{} on {} trial {}: {}", names[job.s], targets[job.t], job.trial, e.what());
      }
    }
  };
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(jobs.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
  }

  out.scores = ComputeScores(out.matrix);

  // Per-round median curves; shorter traces carry their last value forward.
  std::map<std::pair<size_t, size_t>, std::vector<size_t>> groups;
  for (size_t j = 0; j < jobs.size(); ++j) {
    if (out.matrix.values[jobs[j].s][jobs[j].t][jobs[j].trial]) {
      groups[{jobs[j].s, jobs[j].t}].push_back(j);
    }
  }
  for (const auto &[key, members] : groups) {
    size_t len = 0;
    for (size_t j : members) len = std::max(len, traces[j].size());
    for (size_t r = 0; r < len; ++r) {
      std::vector<double> vals;
      for (size_t j : members) {
        const auto &tr = traces[j];
        vals.push_back(tr.empty() ? 0.0 : static_cast<double>(tr[std::min(r, tr.size() - 1)]));
      }
      out.curves.push_back({names[key.first], targets[key.second], r + 1, LowerMedian(vals)});
    }
  }
  return out;
}

void WriteComparison(const Comparison &c, const std::filesystem::path &out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot create " + out_dir.string());
  WriteFile(out_dir / "final_coverage.csv", FinalCoverageCsv(c.matrix));
  WriteFile(out_dir / "scores.csv", ScoresCsv(c.scores));
  std::string curves = "strategy,target,round,median_branches\n";
  for (const CurvePoint &p : c.curves) {
    curves += p.strategy + "," + p.target + "," + std::to_string(p.round) + "," +
              FormatDouble(p.median_branches) + "\n";
  }
  WriteFile(out_dir / "curves.csv", curves);
  WriteFile(out_dir / "comparison.txt", FormatScoreTable(c.scores));
}

}  // namespace armada
