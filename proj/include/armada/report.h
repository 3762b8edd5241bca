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

#ifndef ARMADA_REPORT_H_
#define ARMADA_REPORT_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "armada/campaign.h"
#include "armada/config.h"

namespace armada {

// Final branch coverage per (strategy, target, trial). nullopt marks a trial
// whose campaign aborted.
struct CoverageMatrix {
  std::vector<std::string> strategies;
  std::vector<std::string> targets;
  std::vector<std::vector<std::vector<std::optional<double>>>> values;  // [s][t][trial]

  static CoverageMatrix Make(std::vector<std::string> strategies,
                             std::vector<std::string> targets, size_t trials);
};

// score(s, t) = 100 * median(s, t) / max over strategies of median(., t);
// average_score(s) is the mean over targets with a valid score.
struct ScoreTable {
  std::vector<std::string> strategies;
  std::vector<std::string> targets;
  std::vector<std::vector<std::optional<double>>> median;  // [s][t]
  std::vector<std::vector<std::optional<double>>> score;   // [s][t]
  std::vector<std::optional<double>> average_score;       // [s]
};

// Lower median (element (n-1)/2 of the sorted values). Requires n >= 1.
double LowerMedian(std::vector<double> values);

// Throws Error(kUsage) on an empty matrix.
ScoreTable ComputeScores(const CoverageMatrix &matrix);

// Coverage enhancement of strategy 0 over every other strategy, aggregated
// two ways: mean over targets of (m0/ms - 1), and (sum m0 / sum ms - 1).
struct Enhancement {
  std::string versus;
  std::optional<double> mean_of_ratios;
  std::optional<double> ratio_of_means;
};
std::vector<Enhancement> BaselineEnhancement(const ScoreTable &table);

std::string FormatScoreTable(const ScoreTable &table);
std::string ScoresCsv(const ScoreTable &table);

// strategy,target,trial,branches (branches empty for an aborted trial).
std::string FinalCoverageCsv(const CoverageMatrix &matrix);
CoverageMatrix ParseFinalCoverageCsv(std::string_view text);

struct CoveragePoint {
  Round round = 0;
  int64_t clock_ms = 0;
  size_t branches = 0;
  size_t fuzzer = 0;
  double reward = 0.0;

  friend bool operator==(const CoveragePoint &, const CoveragePoint &) = default;
};

std::vector<CoveragePoint> CoverageSeries(const CampaignReport &report);
// round,virtual_ms,branches,selected_fuzzer,reward
std::string CoverageCsv(std::span<const CoveragePoint> series);
std::vector<CoveragePoint> ParseCoverageCsv(std::string_view text);
std::string SummaryText(const CampaignReport &report, const CampaignConfig &config);

struct CurvePoint {
  std::string strategy;
  std::string target;
  Round round = 0;
  double median_branches = 0.0;
};

struct Comparison {
  CoverageMatrix matrix;
  ScoreTable scores;
  std::vector<CurvePoint> curves;
};

// Runs every (strategy, target, trial) campaign in memory. Trial i of a
// strategy uses rng seed (strategy seed + i). `threads` = 0 picks the
// hardware concurrency.
Comparison RunComparison(std::span<const ConfigFile> strategies, unsigned trials,
                         unsigned threads = 0);
// final_coverage.csv, scores.csv, curves.csv, comparison.txt
void WriteComparison(const Comparison &comparison, const std::filesystem::path &out_dir);

}  // namespace armada

#endif  // ARMADA_REPORT_H_
