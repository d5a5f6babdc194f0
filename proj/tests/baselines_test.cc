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

#include "dynsub/baselines.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "test_util.h"

namespace dynsub {
namespace {

std::shared_ptr<const SubmodularObjective> Modular(std::vector<double> w) {
  return std::make_shared<const testing::ModularObjective>(std::move(w));
}

TEST(SampleStreamingTest, ParamValidation) {
  EXPECT_THROW((SampleStreamingParams{0}.Validate()), ConfigError);
  EXPECT_THROW((SampleStreamingParams{1, 1.5}.Validate()), ConfigError);
  EXPECT_THROW((SampleStreamingParams{1, 0.5, -1}.Validate()), ConfigError);
}

TEST(SampleStreamingTest, SwapHandTrace) {
  SampleStreaming alg({1, 1.0, 0.5, 3}, Modular({2, 4}));
  alg.Update(UpdateEvent::Insert(0));
  ASSERT_EQ(alg.members().size(), 1u);
  EXPECT_EQ(alg.members()[0].element, 0u);
  EXPECT_EQ(alg.members()[0].gain, 2.0);
  // 4 >= 1.5 * 2, so the second element replaces the first.
  alg.Update(UpdateEvent::Insert(1));
  EXPECT_EQ(alg.solution(), ElementSet({1}));
  EXPECT_EQ(alg.members()[0].gain, 4.0);
}

TEST(SampleStreamingTest, SwapNeedsSlack) {
  SampleStreaming alg({1, 1.0, 1.0, 3}, Modular({2, 3.5}));
  alg.Update(UpdateEvent::Insert(0));
  alg.Update(UpdateEvent::Insert(1));
  EXPECT_EQ(alg.solution(), ElementSet({0}));
}

TEST(SampleStreamingTest, ZeroGainNotAdmitted) {
  SampleStreaming alg({3, 1.0, 1.0, 3}, Modular({0, 1}));
  alg.Update(UpdateEvent::Insert(0));
  EXPECT_TRUE(alg.solution().empty());
  alg.Update(UpdateEvent::Insert(1));
  EXPECT_EQ(alg.solution(), ElementSet({1}));
}

TEST(SampleStreamingTest, ZeroSamplingKeepsEmpty) {
  SampleStreaming alg({3, 0.0, 1.0, 3}, Modular({1, 2, 3}));
  for (ElementId v = 0; v < 3; ++v) alg.Update(UpdateEvent::Insert(v));
  EXPECT_TRUE(alg.solution().empty());
  EXPECT_EQ(alg.queries(), 0);
}

TEST(SampleStreamingTest, DeletionPaths) {
  SampleStreaming alg({1, 1.0, 10.0, 3}, Modular({2, 1, 0.5}));
  for (ElementId v = 0; v < 3; ++v) alg.Update(UpdateEvent::Insert(v));
  ASSERT_EQ(alg.solution(), ElementSet({0}));

  const auto before = alg.queries();
  alg.Update(UpdateEvent::Delete(2));
  EXPECT_EQ(alg.queries(), before);
  EXPECT_EQ(alg.restarts(), 0);
  EXPECT_EQ(alg.alive_order(), ElementSet({0, 1}));

  alg.Update(UpdateEvent::Delete(0));
  EXPECT_EQ(alg.restarts(), 1);
  EXPECT_EQ(alg.solution(), ElementSet({1}));

  alg.Update(UpdateEvent::Delete(1));
  EXPECT_TRUE(alg.solution().empty());
  EXPECT_TRUE(alg.alive_order().empty());

  EXPECT_THROW(alg.Update(UpdateEvent::Delete(1)), PreconditionError);
  alg.Update(UpdateEvent::Insert(1));
  EXPECT_THROW(alg.Update(UpdateEvent::Insert(1)), PreconditionError);
}

TEST(SampleStreamingTest, RestartEqualsFreshPass) {
  Rng gen(21);
  auto graph = testing::MakeGraph(40, testing::ErdosRenyiEdges(40, 0.2, gen));
  const SampleStreamingParams params{4, 0.5, 1.0, 99};
  SampleStreaming alg(params, graph);
  int checked = 0;
  for (const auto& event : testing::RandomStream(40, 400, 0.6, gen)) {
    const auto restarts = alg.restarts();
    alg.Update(event);
    if (alg.restarts() == restarts) continue;
    const auto replay = SampleStreaming::SinglePass(
        params, graph, alg.alive_order(),
        Rng(MixSeed(params.seed, static_cast<std::uint64_t>(alg.restarts()))));
    ASSERT_EQ(replay.size(), alg.members().size());
    for (std::size_t i = 0; i < replay.size(); ++i) {
      EXPECT_EQ(replay[i].element, alg.members()[i].element);
      EXPECT_EQ(replay[i].gain, alg.members()[i].gain);
    }
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(SampleStreamingTest, ReplacementGainsGrow) {
  Rng gen(22);
  auto graph = testing::MakeGraph(50, testing::ErdosRenyiEdges(50, 0.2, gen));
  const SampleStreamingParams params{3, 1.0, 0.5, 1};
  SampleStreaming alg(params, graph);
  for (ElementId v = 0; v < 50; ++v) {
    const auto before = alg.members();
    alg.Arrive(v);
    const auto& after = alg.members();
    ASSERT_LE(after.size(), 3u);
    if (before.size() != after.size()) continue;
    for (std::size_t i = 0; i < after.size(); ++i) {
      if (after[i].element != before[i].element) {
        EXPECT_GE(after[i].gain, (1 + params.c) * before[i].gain);
      }
    }
  }
}

TEST(RandomBaselineTest, SizeAndDeterminism) {
  const ElementSet alive = {3, 1, 4, 5, 9, 2, 6};
  Rng rng(5);
  for (int k = 1; k <= 10; ++k) {
    const ElementSet out = RandomBaseline(alive, k, rng);
    EXPECT_EQ(out.size(), std::min<std::size_t>(k, alive.size()));
    EXPECT_EQ(std::set<ElementId>(out.begin(), out.end()).size(), out.size());
    for (ElementId e : out) EXPECT_TRUE(Contains(alive, e));
  }
  ElementSet whole = RandomBaseline(alive, 7, rng);
  std::sort(whole.begin(), whole.end());
  EXPECT_EQ(whole, ElementSet({1, 2, 3, 4, 5, 6, 9}));

  Rng a(8), b(8);
  EXPECT_EQ(RandomBaseline(alive, 3, a), RandomBaseline(alive, 3, b));
}

TEST(RandomBaselineTest, RoughlyUniform) {
  const ElementSet alive = {0, 1, 2, 3};
  Rng rng(6);
  std::vector<int> hits(4, 0);
  const int trials = 8000;
  for (int t = 0; t < trials; ++t) {
    for (ElementId e : RandomBaseline(alive, 1, rng)) ++hits[e];
  }
  for (int h : hits) EXPECT_NEAR(h, trials / 4.0, 200);
}

TEST(RandomSelectorTest, TracksAlive) {
  RandomSelector selector(2, 4);
  EXPECT_EQ(selector.Update(UpdateEvent::Insert(7)), ElementSet({7}));
  EXPECT_EQ(selector.Update(UpdateEvent::Insert(8)).size(), 2u);
  EXPECT_THROW(selector.Update(UpdateEvent::Insert(8)), PreconditionError);
  EXPECT_EQ(selector.Update(UpdateEvent::Delete(7)), ElementSet({8}));
  EXPECT_TRUE(selector.Update(UpdateEvent::Delete(8)).empty());
  EXPECT_THROW(RandomSelector(0, 1), ConfigError);
}

}  // namespace
}  // namespace dynsub
