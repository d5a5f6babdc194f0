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

#include "dynsub/verify.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace dynsub {

namespace {

ElementSet SortedCopy(std::span<const ElementId> set) {
  ElementSet out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

void CheckCap(std::size_t n) {
  if (n > kBruteForceCap) {
    throw DomainError("brute force refused: " + std::to_string(n) +
                      " elements exceeds the cap of " +
                      std::to_string(kBruteForceCap));
  }
}

AuditReport NewReport(std::string check) {
  AuditReport report;
  report.check = std::move(check);
  return report;
}

std::string Describe(std::span<const ElementId> set) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << (i ? "," : "") << set[i];
  }
  out << '}';
  return out.str();
}

struct LexicographicSearch {
  CountingOracle& oracle;
  const ElementSet& items;
  std::size_t k;
  BruteForceResult best;
  bool have_best = false;
  ElementSet current;

  void Visit(std::size_t start) {
    const double value = oracle.Value(current);
    ++best.enumerated;
    if (!have_best || value > best.opt_value) {
      best.opt_value = value;
      best.opt_set = current;
      have_best = true;
    }
    if (current.size() == k) return;
    for (std::size_t j = start; j < items.size(); ++j) {
      current.push_back(items[j]);
      Visit(j + 1);
      current.pop_back();
    }
  }
};

}  // namespace

BruteForceResult BruteForceOpt(CountingOracle& oracle,
                               std::span<const ElementId> alive, int k) {
  CheckCap(alive.size());
  const ElementSet items = SortedCopy(alive);
  LexicographicSearch search{oracle, items,
                             static_cast<std::size_t>(std::max(k, 0)), {},
                             false, {}};
  search.Visit(0);
  return search.best;
}

BruteForceResult BruteForceOptGray(CountingOracle& oracle,
                                   std::span<const ElementId> alive, int k) {
  CheckCap(alive.size());
  const ElementSet items = SortedCopy(alive);
  const std::uint64_t total = std::uint64_t{1} << items.size();
  BruteForceResult best;
  bool have_best = false;
  ElementSet current;
  for (std::uint64_t g = 0; g < total; ++g) {
    const std::uint64_t mask = g ^ (g >> 1);
    if (std::popcount(mask) > k) continue;
    current.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) current.push_back(items[i]);
    }
    const double value = oracle.Value(current);
    ++best.enumerated;
    if (!have_best || value > best.opt_value ||
        (value == best.opt_value && current < best.opt_set)) {
      best.opt_value = value;
      best.opt_set = current;
      have_best = true;
    }
  }
  return best;
}

double BestSubsetValue(CountingOracle& oracle, std::span<const ElementId> set) {
  return BruteForceOpt(oracle, set, static_cast<int>(set.size())).opt_value;
}

// ---------------------------------------------------------------------------

AuditReport AuditThreshold(std::span<const ElementId> solution, int k,
                           double tau, CountingOracle& shadow,
                           std::span<const ElementId> alive) {
  AuditReport report = NewReport("threshold");
  const std::size_t size = solution.size();
  if (size > static_cast<std::size_t>(k)) {
    report.pass = false;
    report.detail = "reported set larger than k";
    return report;
  }
  if (size == static_cast<std::size_t>(k)) {
    const double value = shadow.Value(solution);
    if (value < k * tau - kAuditTolerance) {
      report.pass = false;
      std::ostringstream detail;
      detail << "|S| = k but f(S) = " << value << " < k*tau = " << k * tau;
      report.detail = detail.str();
    } else {
      report.detail = "full set with f(S) >= k*tau";
    }
    return report;
  }
  for (ElementId v : alive) {
    if (Contains(solution, v)) continue;
    const double gain = shadow.Marginal(v, solution);
    if (gain >= tau + kAuditTolerance) {
      report.pass = false;
      report.witness = v;
      std::ostringstream detail;
      detail << "|S| < k and gain " << gain << " >= tau = " << tau;
      report.detail = detail.str();
      return report;
    }
  }
  report.detail = "no outside element reaches tau";
  return report;
}

AuditReport AuditThreshold(const ThresholdLeveling& instance,
                           CountingOracle& shadow) {
  const ElementSet alive = instance.AliveElements();
  return AuditThreshold(instance.Extract(), instance.params().k,
                        instance.params().tau, shadow, alive);
}

AuditReport AuditChangeBound(std::span<const ElementId> before,
                           std::span<const ElementId> after,
                           std::int64_t queries,
                           std::optional<ElementId> deleted) {
  AuditReport report = NewReport("change_bound");
  std::int64_t changes = 0;
  std::int64_t changes_besides_deleted = 0;
  for (ElementId e : after) {
    if (!Contains(before, e)) {
      ++changes;
      ++changes_besides_deleted;
    }
  }
  for (ElementId e : before) {
    if (!Contains(after, e)) {
      ++changes;
      if (!deleted || e != *deleted) ++changes_besides_deleted;
    }
  }
  std::ostringstream detail;
  detail << changes << " changes, " << queries << " queries";
  report.detail = detail.str();
  report.pass = queries > 0 ? changes <= queries : changes_besides_deleted == 0;
  return report;
}

AuditReport AuditSlack(std::span<const ElementId> solution, int k, double tau,
                        CountingOracle& shadow,
                        std::span<const ElementId> alive, int trials,
                        Rng& rng) {
  AuditReport report = NewReport("slack");
  report.worst_margin = std::numeric_limits<double>::infinity();
  if (solution.size() >= static_cast<std::size_t>(k)) {
    report.detail = "not applicable: |S| = k";
    return report;
  }
  const double base = shadow.Value(solution);
  ElementSet extra;
  ElementSet joined;
  for (int trial = 0; trial < trials; ++trial) {
    extra.clear();
    for (ElementId v : alive) {
      if (rng.Coin()) extra.push_back(v);
    }
    joined.assign(solution.begin(), solution.end());
    for (ElementId v : extra) {
      if (!Contains(solution, v)) joined.push_back(v);
    }
    const double margin =
        base - shadow.Value(joined) + static_cast<double>(extra.size()) * tau;
    if (margin < report.worst_margin) report.worst_margin = margin;
    if (margin < -kAuditTolerance) {
      report.pass = false;
      report.detail = "violated for C = " + Describe(extra);
      return report;
    }
  }
  return report;
}

AuditReport AuditSlack(const ThresholdLeveling& instance,
                        CountingOracle& shadow, int trials, Rng& rng) {
  const ElementSet alive = instance.AliveElements();
  return AuditSlack(instance.Extract(), instance.params().k,
                     instance.params().tau, shadow, alive, trials, rng);
}

AuditReport AuditStructure(const ThresholdLeveling& instance,
                           CountingOracle& shadow) {
  AuditReport report = NewReport("structure");
  if (auto problem = instance.CheckStructure(shadow)) {
    report.pass = false;
    report.detail = *problem;
  }
  return report;
}

AuditReport AuditSecondGround(const ReductionRun& run) {
  AuditReport report = NewReport("second_ground");
  const ElementSet& s1 = run.first().Extract();
  for (ElementId v : run.alive().elements()) {
    const bool expected = !Contains(s1, v);
    if (run.second().Contains(v) != expected) {
      report.pass = false;
      report.witness = v;
      report.detail = expected ? "alive element outside S1 missing"
                               : "S1 element present in second instance";
      return report;
    }
  }
  if (run.second().alive_count() + s1.size() != run.alive().size()) {
    report.pass = false;
    report.detail = "second instance holds dead elements";
  }
  return report;
}

AuditReport AuditRunOutput(const ReductionRun& run, CountingOracle& shadow) {
  AuditReport report = NewReport("output");
  const Solution& answer = run.solution();
  if (answer.elements.size() > static_cast<std::size_t>(run.k())) {
    report.pass = false;
    report.detail = "answer larger than k";
    return report;
  }
  for (ElementId v : answer.elements) {
    if (!run.alive().Contains(v)) {
      report.pass = false;
      report.witness = v;
      report.detail = "answer contains a dead element";
      return report;
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const Solution& c : run.candidates()) {
    best = std::max(best, shadow.Value(c.elements));
  }
  const double value = shadow.Value(answer.elements);
  if (std::abs(value - best) > kAuditTolerance ||
      std::abs(value - answer.value) > kAuditTolerance) {
    report.pass = false;
    std::ostringstream detail;
    detail << "answer value " << answer.value << " vs best candidate " << best;
    report.detail = detail.str();
  }
  return report;
}

AuditReport AuditFeasible(std::span<const ElementId> solution, int k,
                          const GroundSet& alive) {
  AuditReport report = NewReport("feasible");
  if (solution.size() > static_cast<std::size_t>(k)) {
    report.pass = false;
    report.detail = "solution larger than k";
    return report;
  }
  for (ElementId v : solution) {
    if (!alive.Contains(v)) {
      report.pass = false;
      report.witness = v;
      report.detail = "solution contains a dead element";
      return report;
    }
  }
  return report;
}

AuditReport AuditBracketing(const GuessGrid& grid, double opt) {
  AuditReport report = NewReport("bracketing");
  if (!(opt > 0.0)) {
    report.detail = "vacuous: OPT = 0";
    return report;
  }
  const double eps = grid.config().eps_prime;
  for (int i : grid.ActiveRunIndices()) {
    const double guess = GuessValue(i, eps);
    if (guess >= opt * (1.0 - 1e-12) && guess <= (1.0 + eps) * opt * (1.0 + 1e-12)) {
      report.detail = "run " + std::to_string(i);
      return report;
    }
  }
  report.pass = false;
  std::ostringstream detail;
  detail << "no active guess in [" << opt << ", " << (1.0 + eps) * opt << "]";
  report.detail = detail.str();
  return report;
}

std::string ToJsonLine(std::int64_t t, const AuditReport& report) {
  nlohmann::ordered_json line;
  line["t"] = t;
  line["check"] = report.check;
  line["pass"] = report.pass;
  if (report.witness) line["witness"] = *report.witness;
  return line.dump();
}

}  // namespace dynsub
