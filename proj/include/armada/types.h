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

#ifndef ARMADA_TYPES_H_
#define ARMADA_TYPES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace armada {

// Campaign round index. Round 0 is reserved for the initial corpus.
using Round = uint64_t;

// Opaque basic-block identifier.
struct BlockId {
  uint64_t value = 0;

  friend auto operator<=>(const BlockId &, const BlockId &) = default;
};

// Directed edge between two basic blocks. (a,b) and (b,a) are distinct.
struct Branch {
  BlockId pred;
  BlockId succ;

  friend auto operator<=>(const Branch &, const Branch &) = default;
};

// The set of branches exercised by one seed.
//
// `branches` is expected to be duplicate-free. Producers should call
// Canonicalize(); consumers that must reject malformed input check
// HasDuplicates() first.
struct SeedCoverage {
  uint64_t seed_id = 0;
  std::vector<Branch> branches;

  // Sorts branches ascending by (pred, succ) and drops duplicates.
  void Canonicalize();
  bool IsCanonical() const;
  bool HasDuplicates() const;
};

// 16 lowercase hex digits.
std::string HexId(uint64_t value);
// Accepts exactly 16 hex digits. Returns false on anything else.
bool ParseHexId(std::string_view text, uint64_t &out);

}  // namespace armada

template <>
struct std::hash<armada::BlockId> {
  size_t operator()(const armada::BlockId &b) const noexcept {
    return std::hash<uint64_t>{}(b.value);
  }
};

template <>
struct std::hash<armada::Branch> {
  size_t operator()(const armada::Branch &b) const noexcept {
    uint64_t h = b.pred.value * 0x9e3779b97f4a7c15ULL;
    h ^= b.succ.value + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

#endif  // ARMADA_TYPES_H_
