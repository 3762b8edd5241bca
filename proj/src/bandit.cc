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

#include "armada/bandit.h"

#include <string>

#include "armada/error.h"

namespace armada {

size_t ArgmaxRandomTies(std::span<const double> values, Rng &rng) {
  if (values.empty()) Fail(ErrorCode::kUsage, "argmax over no values");
  double best = values[0];
  size_t ties = 1;
  size_t best_index = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] > best) {
      best = values[i];
      best_index = i;
      ties = 1;
    } else if (values[i] == best) {
      ++ties;
    }
  }
  if (ties == 1) return best_index;
  uint64_t pick = rng.UniformIndex(ties);
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] == best && pick-- == 0) return i;
  }
  return best_index;
}

ThompsonBandit::ThompsonBandit(size_t arms) : arms_(arms) {
  if (arms == 0) Fail(ErrorCode::kUsage, "bandit needs at least one arm");
}

size_t ThompsonBandit::Select(Rng &rng) const {
  std::vector<double> samples;
  return Select(rng, samples);
}

size_t ThompsonBandit::Select(Rng &rng, std::vector<double> &samples) const {
  samples.resize(arms_.size());
  for (size_t k = 0; k < arms_.size(); ++k) {
    samples[k] = rng.Beta(arms_[k].alpha, arms_[k].beta);
  }
  return ArgmaxRandomTies(samples, rng);
}

size_t ThompsonBandit::SelectGreedy(Rng &rng) const {
  std::vector<double> means(arms_.size());
  for (size_t k = 0; k < arms_.size(); ++k) means[k] = arms_[k].PosteriorMean();
  return ArgmaxRandomTies(means, rng);
}

void ThompsonBandit::Update(size_t arm, int rhat) {
  if (arm >= arms_.size()) {
    Fail(ErrorCode::kUsage, "arm index " + std::to_string(arm) + " out of range");
  }
  if (rhat != 0 && rhat != 1) Fail(ErrorCode::kDomain, "rhat must be 0 or 1");
  arms_[arm].alpha += rhat;
  arms_[arm].beta += 1 - rhat;
}

void ThompsonBandit::Reset() {
  for (ArmState &a : arms_) a = ArmState{};
}

int Discretize(double r, Rng &rng) {
  if (!(r >= 0.0 && r <= 1.0)) {
    Fail(ErrorCode::kDomain, "reward must lie in [0, 1]");
  }
  return rng.Bernoulli(r) ? 1 : 0;
}

}  // namespace armada
