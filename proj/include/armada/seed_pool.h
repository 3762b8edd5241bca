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

#ifndef ARMADA_SEED_POOL_H_
#define ARMADA_SEED_POOL_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "armada/content_hash.h"
#include "armada/types.h"

namespace armada {

using HashSet = std::unordered_set<ContentHash>;
using BranchSet = std::unordered_set<Branch>;

// A seed produced by a fuzzer during a round, before the pool has seen it.
struct SeedCandidate {
  std::string payload;
  SeedCoverage coverage;
};

struct SeedRecord {
  uint64_t seed_id = 0;  // assigned by the pool, ascending from 1
  ContentHash content_hash;
  std::shared_ptr<const std::string> payload;
  std::filesystem::path payload_path;  // empty for in-memory pools
  SeedCoverage coverage;               // canonical, seed_id == this->seed_id
  size_t origin_fuzzer = 0;
  Round discovered_round = 0;
};

struct MergeResult {
  std::vector<SeedRecord> accepted;
  // One line per rejected malformed candidate.
  std::vector<std::string> diagnostics;
};

// "<seed_id>_<first 16 hex digits of the hash>".
std::string QueueFileName(uint64_t seed_id, const ContentHash &hash);

// The global seed pool. Keeps one copy of every accepted payload, the union
// of all accepted coverage, and never forgets a record.
class SeedPool {
 public:
  // In-memory pool.
  SeedPool() = default;
  // Payloads are additionally written to `queue_dir` (created if missing).
  explicit SeedPool(std::filesystem::path queue_dir);

  // Records whose hash is not in `local_hashes`, ascending by seed_id.
  std::vector<SeedRecord> Diff(const HashSet &local_hashes) const;

  // Accepts, in the given order, each candidate whose payload is new and
  // whose coverage adds at least one branch to branch_union().
  MergeResult Merge(std::span<const SeedCandidate> candidates, size_t fuzzer,
                    Round round);

  HashSet SnapshotHashes() const;

  const BranchSet &branch_union() const { return branch_union_; }
  std::span<const SeedRecord> records() const { return records_; }
  bool Contains(const ContentHash &hash) const { return index_.contains(hash); }
  size_t size() const { return records_.size(); }
  const std::filesystem::path &queue_dir() const { return queue_dir_; }

 private:
  std::filesystem::path queue_dir_;
  std::vector<SeedRecord> records_;
  std::unordered_map<ContentHash, size_t> index_;
  BranchSet branch_union_;
  uint64_t next_id_ = 1;
};

}  // namespace armada

#endif  // ARMADA_SEED_POOL_H_
