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

#ifndef ARMADA_CONTENT_HASH_H_
#define ARMADA_CONTENT_HASH_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace armada {

// 128-bit payload digest (BLAKE2b with a 16-byte output).
struct ContentHash {
  uint64_t hi = 0;
  uint64_t lo = 0;

  static ContentHash Of(std::string_view payload);
  // 32 lowercase hex digits.
  std::string Hex() const;
  // First 16 hex digits, used in queue file names.
  std::string Hex16() const { return Hex().substr(0, 16); }
  static bool Parse(std::string_view hex, ContentHash &out);

  friend auto operator<=>(const ContentHash &, const ContentHash &) = default;
};

}  // namespace armada

template <>
struct std::hash<armada::ContentHash> {
  size_t operator()(const armada::ContentHash &h) const noexcept {
    return static_cast<size_t>(h.lo ^ (h.hi * 0x9e3779b97f4a7c15ULL));
  }
};

#endif  // ARMADA_CONTENT_HASH_H_
