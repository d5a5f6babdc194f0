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

// Comparison algorithms for the benchmarks.
//
// SampleStreaming is the sample-and-swap streaming algorithm made dynamic by
// restarting the pass over all alive elements whenever a solution element is
// deleted. RandomSelector reports k uniformly random alive elements.

#ifndef DYNSUB_BASELINES_H_
#define DYNSUB_BASELINES_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "dynsub/common.h"
#include "dynsub/oracle.h"

namespace dynsub {

struct SampleStreamingParams {
  int k = 1;
  double q = 0.5;  // probability an arriving element is considered at all
  double c = 1.0;  // swap slack: replace v only if the gain is >= (1+c) x v's
  std::uint64_t seed = 0;

  void Validate() const;
};

class SampleStreaming {
 public:
  struct Member {
    ElementId element;
    double gain;  // marginal recorded when the element was admitted
  };

  SampleStreaming(SampleStreamingParams params,
                  std::shared_ptr<const SubmodularObjective> objective);

  // One streaming step for u. Ignored with probability 1 - q; otherwise
  // admitted when |S| < k and its gain is positive, or swapped in for the
  // member with the smallest recorded gain when it beats that gain by the
  // factor (1 + c).
  void Arrive(ElementId u);

  // Insert: remember arrival order, then Arrive. Delete of a non-member only
  // forgets the element (no queries); delete of a member restarts the pass
  // over the surviving elements in arrival order with a fresh coin stream.
  // Throws PreconditionError on an inconsistent event.
  const std::vector<Member>& Update(const UpdateEvent& event);

  ElementSet solution() const;
  const std::vector<Member>& members() const { return members_; }
  ElementSet alive_order() const;

  std::int64_t queries() const { return oracle_.queries(); }
  std::int64_t restarts() const { return restarts_; }
  const SampleStreamingParams& params() const { return params_; }

  // A single pass over `order` from an empty solution, drawing coins from
  // `rng`. Restarts are exactly this pass with Rng(MixSeed(seed, restarts)).
  static std::vector<Member> SinglePass(
      const SampleStreamingParams& params,
      std::shared_ptr<const SubmodularObjective> objective,
      std::span<const ElementId> order, Rng rng);

 private:
  void Restart();

  SampleStreamingParams params_;
  CountingOracle oracle_;
  Rng rng_;
  std::vector<Member> members_;
  std::map<std::uint64_t, ElementId> arrivals_;
  std::unordered_map<ElementId, std::uint64_t> arrival_index_;
  std::uint64_t next_arrival_ = 0;
  std::int64_t restarts_ = 0;
};

// Uniformly random subset of size min(k, |alive|). No oracle queries.
ElementSet RandomBaseline(std::span<const ElementId> alive, int k, Rng& rng);

// Maintains the alive set and draws a fresh RandomBaseline after each update.
class RandomSelector {
 public:
  RandomSelector(int k, std::uint64_t seed);

  // Throws PreconditionError on an inconsistent event.
  ElementSet Update(const UpdateEvent& event);

  const GroundSet& alive() const { return alive_; }

 private:
  int k_;
  Rng rng_;
  GroundSet alive_;
};

}  // namespace dynsub

#endif  // DYNSUB_BASELINES_H_
