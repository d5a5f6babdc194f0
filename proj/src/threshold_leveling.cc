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

#include "dynsub/threshold_leveling.h"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace dynsub {

void ThresholdParams::Validate() const {
  if (k < 1) throw ConfigError("cardinality k must be >= 1");
  if (!(tau > 0.0)) throw ConfigError("threshold tau must be > 0");
}

ThresholdLeveling::ThresholdLeveling(
    ThresholdParams params, std::shared_ptr<const SubmodularObjective> objective,
    std::uint64_t seed)
    : params_(params), oracle_(std::move(objective)), rng_(seed), buckets_(1) {
  params_.Validate();
}

bool ThresholdLeveling::Promote(std::span<const ElementId> prefix,
                                ElementId e) {
  const double gain = oracle_.Marginal(e, prefix);
  return gain >= params_.tau &&
         prefix.size() < static_cast<std::size_t>(params_.k);
}

UpdateStatus ThresholdLeveling::Insert(ElementId v) {
  if (slots_.contains(v)) return UpdateStatus::kDuplicateInsert;
  Place(v, 0);
  const int top = top_level();
  for (int i = 1; i <= top + 1; ++i) {
    if (!Promote(Prefix(i - 1), v)) break;
    Move(v, i);
    if (rng_.UniformIndex(PoolSize(i)) != 0) continue;

    // v becomes e_i; R_{i+1} is re-filtered against I_i and everything
    // above is rebuilt.
    chosen_.resize(static_cast<std::size_t>(i - 1));
    chosen_.push_back(v);
    for (ElementId e : Pool(i)) {
      if (e == v) continue;
      Move(e, Promote(Prefix(i), e) ? i + 1 : i);
    }
    ConstructLevel(i + 1);
    break;
  }
  return UpdateStatus::kApplied;
}

UpdateStatus ThresholdLeveling::Delete(ElementId v) {
  auto it = slots_.find(v);
  if (it == slots_.end()) return UpdateStatus::kAbsentDelete;
  const int level = it->second.level;
  Remove(v);
  // Only e_level can equal v: a chosen element's deepest pool is its own
  // level.
  if (level >= 1 && level <= top_level() &&
      chosen_[static_cast<std::size_t>(level - 1)] == v) {
    ConstructLevel(level);
  }
  return UpdateStatus::kApplied;
}

void ThresholdLeveling::ConstructLevel(int i) {
  if (i < 1 || i > top_level() + 1) {
    throw std::logic_error("ConstructLevel(" + std::to_string(i) +
                           ") outside [1, T+1] with T = " +
                           std::to_string(top_level()));
  }
  chosen_.resize(static_cast<std::size_t>(i - 1));
  ElementSet order = Pool(i);
  for (ElementId e : order) Move(e, i);
  rng_.Shuffle(std::span<ElementId>(order));

  int ell = i;
  for (ElementId e : order) {
    int z;
    if (Promote(Prefix(ell - 1), e)) {
      chosen_.push_back(e);
      z = ell;
      ++ell;
    } else {
      // Lowest z in [i, ell-1] with Promote(I_z, e) false. Promote(I_{ell-1})
      // just failed, so search [i, ell-2] and fall back to ell-1.
      int lo = i;
      int hi = ell - 1;
      while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (Promote(Prefix(mid), e)) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      z = hi;  // i - 1 when the range is empty
    }
    if (z > i) Move(e, z);
  }
}

// ---------------------------------------------------------------------------

void ThresholdLeveling::Place(ElementId e, int level) {
  if (static_cast<std::size_t>(level) >= buckets_.size()) {
    buckets_.resize(static_cast<std::size_t>(level) + 1);
  }
  auto& bucket = buckets_[static_cast<std::size_t>(level)];
  slots_[e] = Slot{level, bucket.size()};
  bucket.push_back(e);
}

void ThresholdLeveling::Remove(ElementId e) {
  auto it = slots_.find(e);
  const Slot slot = it->second;
  slots_.erase(it);
  auto& bucket = buckets_[static_cast<std::size_t>(slot.level)];
  if (slot.position + 1 != bucket.size()) {
    bucket[slot.position] = bucket.back();
    slots_[bucket[slot.position]].position = slot.position;
  }
  bucket.pop_back();
}

void ThresholdLeveling::Move(ElementId e, int level) {
  if (slots_.at(e).level == level) return;
  Remove(e);
  Place(e, level);
}

int ThresholdLeveling::PoolLevel(ElementId v) const {
  auto it = slots_.find(v);
  return it == slots_.end() ? -1 : it->second.level;
}

ElementSet ThresholdLeveling::Pool(int i) const {
  ElementSet pool;
  for (std::size_t r = static_cast<std::size_t>(std::max(i, 0));
       r < buckets_.size(); ++r) {
    pool.insert(pool.end(), buckets_[r].begin(), buckets_[r].end());
  }
  return pool;
}

std::size_t ThresholdLeveling::PoolSize(int i) const {
  std::size_t size = 0;
  for (std::size_t r = static_cast<std::size_t>(std::max(i, 0));
       r < buckets_.size(); ++r) {
    size += buckets_[r].size();
  }
  return size;
}

void ThresholdLeveling::DumpLevels(std::ostream& out) const {
  for (int i = 0; i <= top_level(); ++i) {
    out << "level " << i << ' ';
    if (i == 0) {
      out << '-';
    } else {
      out << chosen_[static_cast<std::size_t>(i - 1)];
    }
    out << ' ' << PoolSize(i) << '\n';
  }
}

std::optional<std::string> ThresholdLeveling::CheckStructure(
    CountingOracle& shadow) const {
  std::ostringstream problem;
  const int top = top_level();
  if (top > params_.k) {
    problem << "T = " << top << " exceeds k = " << params_.k;
    return problem.str();
  }
  std::unordered_set<ElementId> seen;
  for (int i = 1; i <= top; ++i) {
    const ElementId e = chosen_[static_cast<std::size_t>(i - 1)];
    if (!seen.insert(e).second) {
      problem << "e_" << i << " = " << e << " repeats an earlier level";
      return problem.str();
    }
    if (PoolLevel(e) != i) {
      problem << "e_" << i << " = " << e << " has deepest pool "
              << PoolLevel(e) << ", expected " << i;
      return problem.str();
    }
    const double gain = shadow.Marginal(e, Prefix(i - 1));
    if (gain < params_.tau) {
      problem << "e_" << i << " = " << e << " has gain " << gain
              << " < tau over I_" << i - 1;
      return problem.str();
    }
  }
  std::size_t counted = 0;
  for (std::size_t r = 0; r < buckets_.size(); ++r) {
    if (static_cast<int>(r) > top && !buckets_[r].empty()) {
      problem << "pool R_" << r << " non-empty above T = " << top;
      return problem.str();
    }
    for (std::size_t p = 0; p < buckets_[r].size(); ++p) {
      auto it = slots_.find(buckets_[r][p]);
      if (it == slots_.end() || it->second.level != static_cast<int>(r) ||
          it->second.position != p) {
        problem << "pool bookkeeping mismatch for element " << buckets_[r][p];
        return problem.str();
      }
      ++counted;
    }
  }
  if (counted != slots_.size()) {
    problem << "pool bookkeeping holds " << counted << " elements, "
            << slots_.size() << " alive";
    return problem.str();
  }
  return std::nullopt;
}

}  // namespace dynsub
