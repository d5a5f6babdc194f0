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

// Non-monotone reduction for one fixed guess of the optimum.
//
// Two thresholding instances run side by side: the first sees every alive
// element and maintains S1; the second sees everything except S1 and
// maintains S2. A subset selection step picks S1' inside S1, and the answer
// is the best of {S1, S1', S2}. With tau = OPT / (k (3 + 1/(2 alpha))) the
// answer is, in expectation, a (6 + 1/alpha)-approximation whenever the
// guess brackets the true optimum.

#ifndef DYNSUB_REDUCTION_H_
#define DYNSUB_REDUCTION_H_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "dynsub/common.h"
#include "dynsub/oracle.h"
#include "dynsub/threshold_leveling.h"

namespace dynsub {

// How S1' is chosen inside S1. alpha is the expected approximation ratio of
// the procedure for unconstrained maximization over subsets of S1.
class SubsetStrategy {
 public:
  enum class Kind { kUniform, kLocalSearch };

  static SubsetStrategy Uniform() { return SubsetStrategy(Kind::kUniform); }
  static SubsetStrategy LocalSearch() {
    return SubsetStrategy(Kind::kLocalSearch);
  }

  Kind kind() const { return kind_; }
  double alpha() const { return kind_ == Kind::kUniform ? 0.25 : 0.5; }
  std::string name() const {
    return kind_ == Kind::kUniform ? "uniform" : "local-search";
  }
  bool operator==(const SubsetStrategy&) const = default;

 private:
  explicit SubsetStrategy(Kind kind) : kind_(kind) {}
  Kind kind_;
};

// tau = opt_guess / (k * (3 + 1 / (2 alpha))).
double ReductionThreshold(double opt_guess, int k, SubsetStrategy strategy);

// Keeps each element independently with probability 1/2. No queries.
ElementSet UniformSubset(std::span<const ElementId> set, Rng& rng);

// Randomized double greedy over `set` in the given order. Exactly 4 queries
// per element.
ElementSet LocalSearchSubset(std::span<const ElementId> set,
                             CountingOracle& oracle, Rng& rng);

struct Solution {
  ElementSet elements;
  double value = 0.0;
};

// Queries split by origin: updates of the first and second instance,
// subset selection, and the final argmax evaluations.
struct QueryBreakdown {
  std::int64_t first_instance = 0;
  std::int64_t second_instance = 0;
  std::int64_t subset_selection = 0;
  std::int64_t reporting = 0;

  std::int64_t total() const {
    return first_instance + second_instance + subset_selection + reporting;
  }
};

class ReductionRun {
 public:
  // Throws ConfigError unless k >= 1 and opt_guess > 0. Evaluates f(empty)
  // once so that the initial answer carries its true value.
  ReductionRun(int k, double opt_guess, SubsetStrategy strategy,
               std::shared_ptr<const SubmodularObjective> objective,
               std::uint64_t seed);

  // Applies one update and returns the new answer. An insert of an alive
  // element or a delete of a dead one throws PreconditionError before any
  // state changes.
  const Solution& Update(const UpdateEvent& event);

  const Solution& solution() const { return solution_; }

  // The three candidates compared in the last update: S1, S1', S2.
  const std::array<Solution, 3>& candidates() const { return candidates_; }

  int k() const { return k_; }
  double opt_guess() const { return opt_guess_; }
  double tau() const { return tau_; }
  SubsetStrategy strategy() const { return strategy_; }

  const ThresholdLeveling& first() const { return first_; }
  const ThresholdLeveling& second() const { return second_; }
  const GroundSet& alive() const { return alive_; }

  QueryBreakdown queries() const;

 private:
  int k_;
  double opt_guess_;
  SubsetStrategy strategy_;
  double tau_;
  ThresholdLeveling first_;
  ThresholdLeveling second_;
  CountingOracle selection_oracle_;
  CountingOracle report_oracle_;
  Rng rng_;
  GroundSet alive_;
  std::array<Solution, 3> candidates_;
  Solution solution_;
};

}  // namespace dynsub

#endif  // DYNSUB_REDUCTION_H_
