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

#include "dynsub/reduction.h"

#include <algorithm>
#include <cmath>

namespace dynsub {

double ReductionThreshold(double opt_guess, int k, SubsetStrategy strategy) {
  if (k < 1) throw ConfigError("cardinality k must be >= 1");
  if (!(opt_guess > 0.0) || !std::isfinite(opt_guess)) {
    throw ConfigError("optimum guess must be a positive finite number");
  }
  return opt_guess / (k * (3.0 + 1.0 / (2.0 * strategy.alpha())));
}

ElementSet UniformSubset(std::span<const ElementId> set, Rng& rng) {
  ElementSet kept;
  for (ElementId s : set) {
    if (rng.Coin()) kept.push_back(s);
  }
  return kept;
}

ElementSet LocalSearchSubset(std::span<const ElementId> set,
                             CountingOracle& oracle, Rng& rng) {
  ElementSet grown;                                // X_i
  ElementSet shrunk(set.begin(), set.end());       // Y_i
  for (ElementId s : set) {
    ElementSet grown_plus = grown;
    grown_plus.push_back(s);
    const double a = oracle.Value(grown_plus) - oracle.Value(grown);

    ElementSet shrunk_minus;
    shrunk_minus.reserve(shrunk.size());
    for (ElementId y : shrunk) {
      if (y != s) shrunk_minus.push_back(y);
    }
    const double b = oracle.Value(shrunk_minus) - oracle.Value(shrunk);

    const double a_clamped = std::max(a, 0.0);
    const double b_clamped = std::max(b, 0.0);
    const double keep_probability =
        (a_clamped == 0.0 && b_clamped == 0.0)
            ? 0.0
            : a_clamped / (a_clamped + b_clamped);
    if (rng.Bernoulli(keep_probability)) {
      grown = std::move(grown_plus);
    } else {
      shrunk = std::move(shrunk_minus);
    }
  }
  return grown;
}

// ---------------------------------------------------------------------------

ReductionRun::ReductionRun(int k, double opt_guess, SubsetStrategy strategy,
                           std::shared_ptr<const SubmodularObjective> objective,
                           std::uint64_t seed)
    : k_(k),
      opt_guess_(opt_guess),
      strategy_(strategy),
      tau_(ReductionThreshold(opt_guess, k, strategy)),
      first_({k, tau_}, objective, MixSeed(seed, 1)),
      second_({k, tau_}, objective, MixSeed(seed, 2)),
      selection_oracle_(objective),
      report_oracle_(objective),
      rng_(MixSeed(seed, 3)) {
  const double empty_value = report_oracle_.Value({});
  for (Solution& c : candidates_) c.value = empty_value;
  solution_.value = empty_value;
}

const Solution& ReductionRun::Update(const UpdateEvent& event) {
  const ElementId v = event.element;
  if (event.is_insert() == alive_.Contains(v)) {
    throw PreconditionError(
        std::string(event.is_insert() ? "insert of alive" : "delete of dead") +
        " element " + std::to_string(v));
  }
  alive_.Apply(event);

  ElementSet z = first_.Extract();
  if (event.is_insert()) {
    first_.Insert(v);
    z.push_back(v);
  } else {
    first_.Delete(v);
    second_.Delete(v);  // a no-op when v was in S1
    std::erase(z, v);
  }
  const ElementSet s1 = first_.Extract();
  ElementSet s1_prime = strategy_.kind() == SubsetStrategy::Kind::kUniform
                            ? UniformSubset(s1, rng_)
                            : LocalSearchSubset(s1, selection_oracle_, rng_);

  // Keep the second instance's ground set equal to alive \ S1.
  for (ElementId u : s1) {
    if (!Contains(z, u)) second_.Delete(u);
  }
  for (ElementId u : z) {
    if (!Contains(s1, u)) second_.Insert(u);
  }
  const ElementSet& s2 = second_.Extract();

  candidates_[0] = {s1, report_oracle_.Value(s1)};
  candidates_[1] = {std::move(s1_prime), 0.0};
  candidates_[1].value = report_oracle_.Value(candidates_[1].elements);
  candidates_[2] = {s2, report_oracle_.Value(s2)};

  std::size_t best = 0;
  for (std::size_t c = 1; c < candidates_.size(); ++c) {
    if (candidates_[c].value > candidates_[best].value) best = c;
  }
  solution_ = candidates_[best];
  return solution_;
}

QueryBreakdown ReductionRun::queries() const {
  return {first_.queries(), second_.queries(), selection_oracle_.queries(),
          report_oracle_.queries()};
}

}  // namespace dynsub
