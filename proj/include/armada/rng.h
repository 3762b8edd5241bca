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

#ifndef ARMADA_RNG_H_
#define ARMADA_RNG_H_

#include <cstdint>
#include <random>
#include <string>

namespace armada {

// Seedable pseudorandom source threaded through every stochastic operation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard <random> distributions are not portable across
// library implementations, so every distribution used by the campaign is
// implemented here with a pinned draw order:
//   Uniform01   one engine draw
//   Normal      Marsaglia polar; two engine draws per attempt, spare dropped
//   Gamma       Marsaglia-Tsang; shape < 1 boosted with one extra Uniform01
//   Beta        Gamma(a) then Gamma(b)
//   Bernoulli   one Uniform01
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 bits of precision.
  double Uniform01();
  // Uniform on [0, n). n must be > 0.
  uint64_t UniformIndex(uint64_t n);
  double Normal();
  double Gamma(double shape);
  double Beta(double a, double b);
  bool Bernoulli(double p) { return Uniform01() < p; }

  std::string SaveState() const;
  void LoadState(const std::string &state);

 private:
  std::mt19937_64 engine_;
};

// Derives an independent stream seed from a base seed (SplitMix64 finalizer).
uint64_t DeriveSeed(uint64_t base, uint64_t stream);

}  // namespace armada

#endif  // ARMADA_RNG_H_
