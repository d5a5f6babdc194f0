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

// Runs the fixed-guess reduction for every guess (1+eps')^i that some alive
// element can matter to. Element v only joins run i when
//
//   (eps'/k) * (1+eps')^i  <=  f({v})  <=  (1+eps')^i,
//
// which bounds the fan-out of an update by O(log_{1+eps'}(k/eps')) runs.
// Runs are created on first use and dropped when their last element leaves.

#ifndef DYNSUB_GUESS_GRID_H_
#define DYNSUB_GUESS_GRID_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dynsub/common.h"
#include "dynsub/oracle.h"
#include "dynsub/reduction.h"

namespace dynsub {

// Inclusive index interval; empty when lo > hi.
struct GuessWindow {
  int lo = 0;
  int hi = -1;

  bool empty() const { return lo > hi; }
  int width() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int i) const { return lo <= i && i <= hi; }
  bool operator==(const GuessWindow&) const = default;
};

// (1 + eps')^index.
double GuessValue(int index, double eps_prime);

// Guess indices i with (eps'/k)(1+eps')^i <= fv <= (1+eps')^i, i.e.
// [ceil(log_{1+eps'} fv), floor(log_{1+eps'}(k fv / eps'))]. Both ends are
// inclusive, with a 1e-12 relative allowance so exact powers land inside.
// fv <= 0 gives the empty window.
GuessWindow ElementWindow(double fv, double eps_prime, int k);

struct GridConfig {
  int k = 1;
  double eps_prime = 1.0;
  SubsetStrategy strategy = SubsetStrategy::LocalSearch();
  std::uint64_t seed = 0;

  void Validate() const;
};

class GuessGrid {
 public:
  GuessGrid(GridConfig config,
            std::shared_ptr<const SubmodularObjective> objective);

  // Routes the update to the element's window of runs and returns the best
  // answer across all active runs (ties to the lowest run index). Throws
  // PreconditionError for an insert of an alive element or a delete of a
  // dead one, leaving the grid unchanged.
  const Solution& ApplyUpdate(const UpdateEvent& event);

  const Solution& answer() const { return answer_; }
  // Index of the run whose solution is the current answer.
  std::optional<int> best_run() const { return best_run_; }

  // All queries ever charged: orchestrator singletons plus every run, live
  // or retired.
  std::int64_t TotalQueries() const;
  std::int64_t orchestrator_queries() const { return oracle_.queries(); }

  std::vector<int> ActiveRunIndices() const;
  const ReductionRun* FindRun(int index) const;
  std::size_t active_run_count() const { return runs_.size(); }

  std::optional<GuessWindow> WindowOf(ElementId v) const;
  // Number of runs the most recent update was forwarded to.
  int last_fanout() const { return last_fanout_; }

  const GroundSet& alive() const { return alive_; }
  const GridConfig& config() const { return config_; }

 private:
  struct RunSlot {
    std::unique_ptr<ReductionRun> run;
    std::size_t members = 0;
  };
  struct ElementRecord {
    double singleton_value = 0.0;
    GuessWindow window;
  };

  void RefreshAnswer();

  GridConfig config_;
  std::shared_ptr<const SubmodularObjective> objective_;
  CountingOracle oracle_;
  std::map<int, RunSlot> runs_;
  std::unordered_map<ElementId, ElementRecord> records_;
  GroundSet alive_;
  std::int64_t retired_queries_ = 0;
  int last_fanout_ = 0;
  Solution answer_;
  std::optional<int> best_run_;
};

}  // namespace dynsub

#endif  // DYNSUB_GUESS_GRID_H_
