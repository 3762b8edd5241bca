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

#ifndef ARMADA_BANDIT_H_
#define ARMADA_BANDIT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "armada/rng.h"

namespace armada {

// Beta(alpha, beta) weight distribution of one arm (one fuzzer).
struct ArmState {
  double alpha = 1.0;
  double beta = 1.0;

  double PosteriorMean() const { return alpha / (alpha + beta); }
  // alpha + beta - 2: number of updates since the last reset.
  uint64_t Updates() const {
    return static_cast<uint64_t>(alpha + beta - 2.0 + 0.5);
  }

  friend bool operator==(const ArmState &, const ArmState &) = default;
};

// Index of the largest value; ties are broken uniformly at random. One
// UniformIndex draw is consumed only when there is a tie.
size_t ArgmaxRandomTies(std::span<const double> values, Rng &rng);

// Thompson sampling over K Beta-Bernoulli arms with binary reward
// discretization and full resets. The rng is owned by the caller so that the
// whole campaign draws from a single replayable stream.
class ThompsonBandit {
 public:
  explicit ThompsonBandit(size_t arms);

  // Draws one Beta sample per arm (arm order) and returns the argmax.
  size_t Select(Rng &rng) const;
  // Same, but also exposes the sampled values.
  size_t Select(Rng &rng, std::vector<double> &samples) const;
  // Argmax of posterior means, no sampling. Exploit-only baseline.
  size_t SelectGreedy(Rng &rng) const;

  // alpha += rhat, beta += 1 - rhat on one arm.
  void Update(size_t arm, int rhat);
  // Every arm back to Beta(1, 1).
  void Reset();

  size_t size() const { return arms_.size(); }
  const ArmState &arm(size_t i) const { return arms_.at(i); }
  std::span<const ArmState> arms() const { return arms_; }

 private:
  std::vector<ArmState> arms_;
};

// Samples rhat ~ Bernoulli(r). r must lie in [0, 1].
int Discretize(double r, Rng &rng);

}  // namespace armada

#endif  // ARMADA_BANDIT_H_
