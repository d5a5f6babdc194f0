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

#include "dynsub/verify.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dynsub {
namespace {

std::shared_ptr<const SubmodularObjective> Modular(std::vector<double> w) {
  return std::make_shared<const testing::ModularObjective>(std::move(w));
}

TEST(ReductionThresholdTest, Arithmetic) {
  EXPECT_DOUBLE_EQ(ReductionThreshold(40, 5, SubsetStrategy::LocalSearch()),
                   2.0);
  EXPECT_DOUBLE_EQ(ReductionThreshold(40, 5, SubsetStrategy::Uniform()), 1.6);
  EXPECT_THROW(ReductionThreshold(0, 5, SubsetStrategy::Uniform()),
               ConfigError);
  EXPECT_THROW(ReductionThreshold(1, 0, SubsetStrategy::Uniform()),
               ConfigError);
}

TEST(SubsetStrategyTest, AlphaFollowsKind) {
  EXPECT_EQ(SubsetStrategy::Uniform().alpha(), 0.25);
  EXPECT_EQ(SubsetStrategy::LocalSearch().alpha(), 0.5);
}

TEST(UniformSubsetTest, EmptyAndSubset) {
  Rng rng(1);
  EXPECT_TRUE(UniformSubset({}, rng).empty());
  const ElementSet set = {4, 8, 15, 16, 23, 42};
  for (int i = 0; i < 100; ++i) {
    for (ElementId e : UniformSubset(set, rng)) EXPECT_TRUE(Contains(set, e));
  }
}

TEST(UniformSubsetTest, HalfTheElementsOnAverage) {
  Rng rng(2);
  ElementSet set(20);
  for (ElementId i = 0; i < 20; ++i) set[i] = i;
  const int trials = 4000;
  double total = 0;
  for (int i = 0; i < trials; ++i) total += UniformSubset(set, rng).size();
  // Var |T| = 20/4 = 5, so the mean has standard error sqrt(5/4000).
  EXPECT_NEAR(total / trials, 10.0, 4 * std::sqrt(5.0 / trials));
}

TEST(LocalSearchSubsetTest, ModularCases) {
  Rng rng(3);
  CountingOracle positive(Modular({1, 2, 3, 0.5}));
  const ElementSet set = {0, 1, 2, 3};
  ElementSet kept = LocalSearchSubset(set, positive, rng);
  std::sort(kept.begin(), kept.end());
  EXPECT_EQ(kept, set);
  EXPECT_EQ(positive.queries(), 16);

  CountingOracle with_zero(Modular({1, 0, 3}));
  const ElementSet three = {0, 1, 2};
  for (int i = 0; i < 20; ++i) {
    ElementSet out = LocalSearchSubset(three, with_zero, rng);
    std::sort(out.begin(), out.end());
    EXPECT_EQ(out, ElementSet({0, 2}));
  }

  CountingOracle unused(Modular({1}));
  EXPECT_TRUE(LocalSearchSubset({}, unused, rng).empty());
  EXPECT_EQ(unused.queries(), 0);
}

// Mean value against alpha times the exact unconstrained maximum.
TEST(SubsetSelectionTest, StatisticalGuarantee) {
  Rng gen(4);
  auto graph = testing::MakeGraph(14, testing::ErdosRenyiEdges(14, 0.5, gen));
  for (int instance = 0; instance < 5; ++instance) {
    ElementSet set;
    for (ElementId v = 0; v < 14 && set.size() < 10; ++v) {
      if (gen.Coin()) set.push_back(v);
    }
    CountingOracle oracle(graph);
    const double best = BestSubsetValue(oracle, set);
    for (auto strategy :
         {SubsetStrategy::Uniform(), SubsetStrategy::LocalSearch()}) {
      const int trials = 2000;
      double sum = 0, sum_sq = 0;
      Rng rng(gen.Next());
      for (int t = 0; t < trials; ++t) {
        const ElementSet out = strategy == SubsetStrategy::Uniform()
                                   ? UniformSubset(set, rng)
                                   : LocalSearchSubset(set, oracle, rng);
        const double value = graph->Evaluate(out);
        sum += value;
        sum_sq += value * value;
      }
      const double mean = sum / trials;
      const double var = std::max(0.0, sum_sq / trials - mean * mean);
      const double se = std::sqrt(var / trials);
      EXPECT_GE(mean, strategy.alpha() * best - 3 * se) << strategy.name();
    }
  }
}

TEST(ReductionRunTest, FreshRunIsEmpty) {
  auto graph = testing::MakeGraph(
      3, std::vector<testing::Edge>{{0, 1}, {1, 2}, {0, 2}});
  ReductionRun run(5, 40, SubsetStrategy::LocalSearch(), graph, 1);
  EXPECT_DOUBLE_EQ(run.tau(), 2.0);
  EXPECT_TRUE(run.solution().elements.empty());
  EXPECT_EQ(run.solution().value, 0.0);
  EXPECT_THROW(ReductionRun(0, 1, SubsetStrategy::Uniform(), graph, 1),
               ConfigError);
  EXPECT_THROW(ReductionRun(1, 0, SubsetStrategy::Uniform(), graph, 1),
               ConfigError);
}

TEST(ReductionRunTest, FirstPromotableInsert) {
  auto graph = testing::MakeGraph(
      3, std::vector<testing::Edge>{{0, 1}, {1, 2}, {0, 2}});
  // tau = 4 / (2 * 4) = 0.5 <= f({v}) = 2.
  ReductionRun run(2, 4, SubsetStrategy::LocalSearch(), graph, 9);
  const Solution& out = run.Update(UpdateEvent::Insert(1));
  EXPECT_EQ(run.first().Extract(), ElementSet({1}));
  EXPECT_TRUE(run.second().Extract().empty());
  EXPECT_EQ(out.elements, ElementSet({1}));
  EXPECT_EQ(out.value, 2.0);
}

TEST(ReductionRunTest, PreconditionsLeaveStateUnchanged) {
  auto objective = Modular({1, 1});
  ReductionRun run(1, 4, SubsetStrategy::Uniform(), objective, 9);
  run.Update(UpdateEvent::Insert(0));
  const auto before = run.queries().total();
  EXPECT_THROW(run.Update(UpdateEvent::Insert(0)), PreconditionError);
  EXPECT_THROW(run.Update(UpdateEvent::Delete(1)), PreconditionError);
  EXPECT_EQ(run.queries().total(), before);
  run.Update(UpdateEvent::Delete(0));
  EXPECT_TRUE(run.solution().elements.empty());
}

TEST(ReductionRunTest, DeleteOfGroundOnlyElementKeepsS1) {
  // tau = 3 / (1 * 4) = 0.75; element 1 (weight 0.1) never reaches a pool.
  ReductionRun run(1, 3, SubsetStrategy::LocalSearch(), Modular({2, 0.1}), 2);
  run.Update(UpdateEvent::Insert(0));
  run.Update(UpdateEvent::Insert(1));
  const ElementSet s1 = run.first().Extract();
  run.Update(UpdateEvent::Delete(1));
  EXPECT_EQ(run.first().Extract(), s1);
  EXPECT_EQ(run.solution().elements, ElementSet({0}));
}

TEST(ReductionRunTest, InvariantsOnRandomStreams) {
  Rng gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 8 + gen.UniformIndex(20);
    auto graph = testing::MakeGraph(n, testing::ErdosRenyiEdges(n, 0.3, gen));
    const int k = 1 + static_cast<int>(gen.UniformIndex(4));
    const auto strategy =
        gen.Coin() ? SubsetStrategy::Uniform() : SubsetStrategy::LocalSearch();
    ReductionRun run(k, 1.0 + 10 * gen.Uniform01(), strategy, graph,
                     gen.Next());
    CountingOracle shadow(graph);
    for (const auto& event : testing::RandomStream(n, 120, 0.6, gen)) {
      const auto before = run.queries();
      run.Update(event);
      const auto after = run.queries();
      ASSERT_TRUE(AuditSecondGround(run).pass);
      ASSERT_TRUE(AuditRunOutput(run, shadow).pass);
      ASSERT_TRUE(AuditFeasible(run.solution().elements, k, run.alive()).pass);
      const std::int64_t selection =
          after.subset_selection - before.subset_selection;
      const std::int64_t expected =
          strategy == SubsetStrategy::LocalSearch()
              ? 4 * static_cast<std::int64_t>(run.first().Extract().size())
              : 0;
      EXPECT_EQ(selection, expected);
      EXPECT_EQ(after.reporting - before.reporting, 3);
    }
  }
}

TEST(ReductionRunTest, ArgmaxPrefersEarlierCandidate) {
  // With a modular objective S1' = S1 minus zero-weight items, so S1 and S1'
  // tie and the answer must be S1 itself.
  ReductionRun run(3, 4, SubsetStrategy::LocalSearch(), Modular({2, 2, 2}), 5);
  for (ElementId v = 0; v < 3; ++v) run.Update(UpdateEvent::Insert(v));
  EXPECT_EQ(run.solution().elements, run.candidates()[0].elements);
}

}  // namespace
}  // namespace dynsub
