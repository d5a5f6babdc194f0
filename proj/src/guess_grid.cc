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

#include "dynsub/guess_grid.h"

#include <cmath>

namespace dynsub {

namespace {

constexpr double kWindowSlack = 1e-12;

// Membership test straight from the window inequalities.
bool Admits(int i, double fv, double eps_prime, int k) {
  const double guess = GuessValue(i, eps_prime);
  return (eps_prime / k) * guess <= fv * (1.0 + kWindowSlack) &&
         fv <= guess * (1.0 + kWindowSlack);
}

}  // namespace

double GuessValue(int index, double eps_prime) {
  return std::pow(1.0 + eps_prime, index);
}

GuessWindow ElementWindow(double fv, double eps_prime, int k) {
  if (!(fv > 0.0) || !std::isfinite(fv)) return {};
  const double log_base = std::log1p(eps_prime);
  // Closed-form estimate, then nudge each end onto the exact inequality.
  int lo = static_cast<int>(std::ceil(std::log(fv) / log_base));
  int hi = static_cast<int>(
      std::floor(std::log(static_cast<double>(k) * fv / eps_prime) / log_base));
  while (Admits(lo - 1, fv, eps_prime, k)) --lo;
  while (lo <= hi && !Admits(lo, fv, eps_prime, k)) ++lo;
  while (Admits(hi + 1, fv, eps_prime, k)) ++hi;
  while (hi >= lo && !Admits(hi, fv, eps_prime, k)) --hi;
  return {lo, hi};
}

void GridConfig::Validate() const {
  if (k < 1) throw ConfigError("cardinality k must be >= 1");
  if (!(eps_prime > 0.0) || !std::isfinite(eps_prime)) {
    throw ConfigError("eps' must be a positive finite number");
  }
}

GuessGrid::GuessGrid(GridConfig config,
                     std::shared_ptr<const SubmodularObjective> objective)
    : config_(config), objective_(objective), oracle_(std::move(objective)) {
  config_.Validate();
}

const Solution& GuessGrid::ApplyUpdate(const UpdateEvent& event) {
  const ElementId v = event.element;
  if (event.is_insert() == alive_.Contains(v)) {
    throw PreconditionError(
        std::string(event.is_insert() ? "insert of alive" : "delete of dead") +
        " element " + std::to_string(v));
  }

  GuessWindow window;
  if (event.is_insert()) {
    const ElementId singleton[] = {v};
    const double fv = oracle_.Value(singleton);
    window = ElementWindow(fv, config_.eps_prime, config_.k);
    records_[v] = {fv, window};
  } else {
    auto it = records_.find(v);
    window = it->second.window;
    records_.erase(it);
  }
  alive_.Apply(event);

  last_fanout_ = window.width();
  for (int i = window.lo; i <= window.hi; ++i) {
    auto it = runs_.find(i);
    if (it == runs_.end()) {
      RunSlot slot;
      slot.run = std::make_unique<ReductionRun>(
          config_.k, GuessValue(i, config_.eps_prime), config_.strategy,
          objective_, MixSeed(config_.seed, static_cast<std::uint64_t>(i)));
      it = runs_.emplace(i, std::move(slot)).first;
    }
    RunSlot& slot = it->second;
    slot.run->Update(event);
    if (event.is_insert()) {
      ++slot.members;
    } else if (--slot.members == 0) {
      retired_queries_ += slot.run->queries().total();
      runs_.erase(it);
    }
  }
  RefreshAnswer();
  return answer_;
}

void GuessGrid::RefreshAnswer() {
  best_run_.reset();
  if (runs_.empty()) {
    answer_ = Solution{{}, oracle_.Value({})};
    return;
  }
  const Solution* best = nullptr;
  for (const auto& [index, slot] : runs_) {
    const Solution& s = slot.run->solution();
    if (best == nullptr || s.value > best->value) {
      best = &s;
      best_run_ = index;
    }
  }
  answer_ = *best;
}

std::int64_t GuessGrid::TotalQueries() const {
  std::int64_t total = oracle_.queries() + retired_queries_;
  for (const auto& [index, slot] : runs_) total += slot.run->queries().total();
  return total;
}

std::vector<int> GuessGrid::ActiveRunIndices() const {
  std::vector<int> indices;
  indices.reserve(runs_.size());
  for (const auto& [index, slot] : runs_) indices.push_back(index);
  return indices;
}

const ReductionRun* GuessGrid::FindRun(int index) const {
  auto it = runs_.find(index);
  return it == runs_.end() ? nullptr : it->second.run.get();
}

std::optional<GuessWindow> GuessGrid::WindowOf(ElementId v) const {
  auto it = records_.find(v);
  if (it == records_.end()) return std::nullopt;
  return it->second.window;
}

}  // namespace dynsub
