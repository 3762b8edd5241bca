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

#include "armada/seed_pool.h"

#include <cstdio>

#include "armada/error.h"
#include "armada/text_util.h"

namespace armada {

std::string QueueFileName(uint64_t seed_id, const ContentHash &hash) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%08llu_",
                static_cast<unsigned long long>(seed_id));
  return buf + hash.Hex16();
}

SeedPool::SeedPool(std::filesystem::path queue_dir)
    : queue_dir_(std::move(queue_dir)) {
  std::error_code ec;
  std::filesystem::create_directories(queue_dir_, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot create " + queue_dir_.string());
}

std::vector<SeedRecord> SeedPool::Diff(const HashSet &local_hashes) const {
  std::vector<SeedRecord> missing;
  for (const SeedRecord &r : records_) {
    if (!local_hashes.contains(r.content_hash)) missing.push_back(r);
  }
  return missing;
}

MergeResult SeedPool::Merge(std::span<const SeedCandidate> candidates,
                            size_t fuzzer, Round round) {
  MergeResult result;
  for (const SeedCandidate &c : candidates) {
    if (c.coverage.HasDuplicates()) {
      result.diagnostics.push_back("fuzzer " + std::to_string(fuzzer) +
                                   ": candidate with duplicate branches rejected");
      continue;
    }
    ContentHash hash = ContentHash::Of(c.payload);
    if (index_.contains(hash)) continue;
    bool adds_coverage = false;
    for (const Branch &b : c.coverage.branches) {
      if (!branch_union_.contains(b)) {
        adds_coverage = true;
        break;
      }
    }
    if (!adds_coverage) continue;

    SeedRecord rec;
    rec.seed_id = next_id_++;
    rec.content_hash = hash;
    rec.payload = std::make_shared<const std::string>(c.payload);
    rec.coverage = c.coverage;
    rec.coverage.seed_id = rec.seed_id;
    rec.coverage.Canonicalize();
    rec.origin_fuzzer = fuzzer;
    rec.discovered_round = round;
    if (!queue_dir_.empty()) {
      rec.payload_path = queue_dir_ / QueueFileName(rec.seed_id, hash);
      WriteFile(rec.payload_path, *rec.payload);
    }
    for (const Branch &b : rec.coverage.branches) branch_union_.insert(b);
    index_.emplace(hash, records_.size());
    records_.push_back(rec);
    result.accepted.push_back(std::move(rec));
  }
  return result;
}

HashSet SeedPool::SnapshotHashes() const {
  HashSet out;
  out.reserve(records_.size());
  for (const SeedRecord &r : records_) out.insert(r.content_hash);
  return out;
}

}  // namespace armada
