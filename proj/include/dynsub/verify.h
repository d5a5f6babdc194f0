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

// Exhaustive optimizers and invariant audits for small instances.
//
// Every audit evaluates through a caller-supplied shadow oracle so that the
// algorithm's own query counters are never touched.

#ifndef DYNSUB_VERIFY_H_
#define DYNSUB_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "dynsub/common.h"
#include "dynsub/guess_grid.h"
#include "dynsub/oracle.h"
#include "dynsub/reduction.h"
#include "dynsub/threshold_leveling.h"

namespace dynsub {

inline constexpr std::size_t kBruteForceCap = 22;
inline constexpr double kAuditTolerance = 1e-9;

struct BruteForceResult {
  double opt_value = 0.0;
  ElementSet opt_set;  // ascending ids
  std::uint64_t enumerated = 0;
};

// Exact max of f over subsets of `alive` with at most k elements, by
// depth-first enumeration in lexicographic order of ascending id lists; the
// first maximizer wins ties. Throws DomainError above kBruteForceCap.
BruteForceResult BruteForceOpt(CountingOracle& oracle,
                               std::span<const ElementId> alive, int k);

// Same optimum through a Gray-code walk over all 2^n subsets, ties resolved
// to the lexicographically smallest set. Independent cross-check of the
// above.
BruteForceResult BruteForceOptGray(CountingOracle& oracle,
                                   std::span<const ElementId> alive, int k);

// max over all C subset of `set` (no size limit).
double BestSubsetValue(CountingOracle& oracle, std::span<const ElementId> set);

struct AuditReport {
  std::string check;
  bool pass = true;
  std::optional<ElementId> witness;
  std::string detail;
  // Smallest slack seen (slack audit); +inf when not applicable.
  double worst_margin = 0.0;
};

// Thresholding dichotomy for a reported set S: either |S| = k and
// f(S) >= k tau, or every alive v outside S has gain < tau. Values are
// compared with kAuditTolerance in the algorithm's favour.
AuditReport AuditThreshold(std::span<const ElementId> solution, int k,
                           double tau, CountingOracle& shadow,
                           std::span<const ElementId> alive);
AuditReport AuditThreshold(const ThresholdLeveling& instance,
                           CountingOracle& shadow);

// Output changes of one update against the queries it spent. With queries
// > 0 the full symmetric difference must not exceed them. With no queries
// nothing may change apart from dropping `deleted` itself.
AuditReport AuditChangeBound(std::span<const ElementId> before,
                           std::span<const ElementId> after,
                           std::int64_t queries,
                           std::optional<ElementId> deleted);

// f(S) >= f(S u C) - |C| tau for `trials` random C subset of alive (each
// element kept with probability 1/2). Applies only when |S| < k; a full set
// passes trivially.
AuditReport AuditSlack(std::span<const ElementId> solution, int k, double tau,
                        CountingOracle& shadow,
                        std::span<const ElementId> alive, int trials, Rng& rng);
AuditReport AuditSlack(const ThresholdLeveling& instance,
                        CountingOracle& shadow, int trials, Rng& rng);

AuditReport AuditStructure(const ThresholdLeveling& instance,
                           CountingOracle& shadow);

// The second instance sees exactly alive \ S1.
AuditReport AuditSecondGround(const ReductionRun& run);

// |answer| <= k, answer subset of alive, and the answer's value is the best of
// the three candidates (re-evaluated with `shadow`).
AuditReport AuditRunOutput(const ReductionRun& run, CountingOracle& shadow);

// |solution| <= k and every member alive.
AuditReport AuditFeasible(std::span<const ElementId> solution, int k,
                          const GroundSet& alive);

// Some active run's guess lies in [opt, (1+eps') opt]; vacuous when opt <= 0.
AuditReport AuditBracketing(const GuessGrid& grid, double opt);

// {"t":..,"check":"..","pass":..,"witness":..} (witness only when present).
std::string ToJsonLine(std::int64_t t, const AuditReport& report);

}  // namespace dynsub

#endif  // DYNSUB_VERIFY_H_
