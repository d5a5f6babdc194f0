// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dynamic tau-thresholding under a cardinality constraint, maintained as a
// leveled structure:
//
//   chosen elements  e_1, ..., e_T          (T <= k)
//   prefix sets      I_0 = {} , I_i = I_{i-1} + e_i
//   candidate pools  R_0 >= R_1 >= ... >= R_T >= R_{T+1} = {}
//
// R_0 is every alive element. R_i (i >= 1) holds the elements that were
// promotable on top of I_{i-1} when level i was last built, and e_i is drawn
// uniformly from R_i. Updates rebuild only from the first level they touch.
//
// After every update the reported set I_T satisfies: either |I_T| = k and
// f(I_T) >= k * tau, or every alive v outside I_T has f(I_T + v) - f(I_T) <
// tau. The number of output changes per update is bounded by the number of
// oracle queries spent on it.

#ifndef DYNSUB_THRESHOLD_LEVELING_H_
#define DYNSUB_THRESHOLD_LEVELING_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynsub/common.h"
#include "dynsub/oracle.h"

namespace dynsub {

struct ThresholdParams {
  int k = 1;
  double tau = 1.0;

  // Throws ConfigError unless k >= 1 and tau > 0.
  void Validate() const;
};

enum class UpdateStatus {
  kApplied,
  kDuplicateInsert,  // element already alive; nothing changed
  kAbsentDelete,     // element not alive; nothing changed
};

class ThresholdLeveling {
 public:
  ThresholdLeveling(ThresholdParams params,
                    std::shared_ptr<const SubmodularObjective> objective,
                    std::uint64_t seed);

  UpdateStatus Insert(ElementId v);
  UpdateStatus Delete(ElementId v);

  // I_T, in level order e_1..e_T. No queries.
  const ElementSet& Extract() const { return chosen_; }

  // f(I + e) - f(I) >= tau and |I| < k. Always charges 2 queries.
  bool Promote(std::span<const ElementId> prefix, ElementId e);

  // Rebuilds levels i, i+1, ... from the current pool R_i using a fresh
  // random permutation. Requires 1 <= i <= T + 1 (std::logic_error
  // otherwise). Exposed for tests; Insert and Delete call it internally.
  void ConstructLevel(int i);

  int top_level() const { return static_cast<int>(chosen_.size()); }
  const ThresholdParams& params() const { return params_; }

  bool Contains(ElementId v) const { return slots_.contains(v); }
  std::size_t alive_count() const { return slots_.size(); }
  // R_0, in an arbitrary but deterministic order.
  ElementSet AliveElements() const { return Pool(0); }

  // Deepest pool index containing v, or -1 when v is not alive.
  int PoolLevel(ElementId v) const;
  // R_i for 0 <= i; empty above the top level.
  ElementSet Pool(int i) const;
  std::size_t PoolSize(int i) const;

  std::int64_t queries() const { return oracle_.queries(); }
  const CountingOracle& oracle() const { return oracle_; }

  // One line per level: "level i e_i |R_i|" (level 0 prints "-" for e_0).
  void DumpLevels(std::ostream& out) const;

  // Structural audit: chain, nesting, T <= k, every e_i in R_i, pool
  // bookkeeping. Re-checks each e_i's promotion with `shadow`, never with
  // this instance's own oracle. Returns a description of the first problem.
  std::optional<std::string> CheckStructure(CountingOracle& shadow) const;

 private:
  struct Slot {
    int level = 0;
    std::size_t position = 0;  // index inside buckets_[level]
  };

  std::span<const ElementId> Prefix(int i) const {
    return std::span<const ElementId>(chosen_).first(static_cast<std::size_t>(i));
  }
  void Place(ElementId e, int level);
  void Move(ElementId e, int level);
  void Remove(ElementId e);

  ThresholdParams params_;
  CountingOracle oracle_;
  Rng rng_;
  ElementSet chosen_;
  // buckets_[r] holds the elements whose deepest pool is R_r, so
  // R_i = union of buckets_[r] for r >= i.
  std::vector<ElementSet> buckets_;
  std::unordered_map<ElementId, Slot> slots_;
};

}  // namespace dynsub

#endif  // DYNSUB_THRESHOLD_LEVELING_H_
