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

#include "armada/content_hash.h"

#include <sodium.h>

#include "armada/error.h"
#include "armada/types.h"

namespace armada {

namespace {

void EnsureSodium() {
  static const int init = sodium_init();
  if (init < 0) Fail(ErrorCode::kIo, "libsodium initialization failed");
}

uint64_t LoadBigEndian(const unsigned char *p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

ContentHash ContentHash::Of(std::string_view payload) {
  EnsureSodium();
  unsigned char out[16];
  crypto_generichash(out, sizeof(out),
                     reinterpret_cast<const unsigned char *>(payload.data()),
                     payload.size(), nullptr, 0);
  return ContentHash{LoadBigEndian(out), LoadBigEndian(out + 8)};
}

std::string ContentHash::Hex() const { return HexId(hi) + HexId(lo); }

bool ContentHash::Parse(std::string_view hex, ContentHash &out) {
  if (hex.size() != 32) return false;
  ContentHash h;
  if (!ParseHexId(hex.substr(0, 16), h.hi)) return false;
  if (!ParseHexId(hex.substr(16), h.lo)) return false;
  out = h;
  return true;
}

}  // namespace armada
