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

namespace dynsub {

void SampleStreamingParams::Validate() const {
  if (k < 1) throw ConfigError("cardinality k must be >= 1");
  if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("q must lie in [0, 1]");
  if (!(c >= 0.0)) throw ConfigError("swap slack c must be >= 0");
}

SampleStreaming::SampleStreaming(
    SampleStreamingParams params,
    std::shared_ptr<const SubmodularObjective> objective)
    : params_(params),
      oracle_(std::move(objective)),
      rng_(MixSeed(params.seed, 0)) {
  params_.Validate();
}

namespace {

void ArriveInto(std::vector<SampleStreaming::Member>& members,
                const SampleStreamingParams& params, CountingOracle& oracle,
                Rng& rng, ElementId u) {
  if (!rng.Bernoulli(params.q)) return;
  ElementSet current;
  current.reserve(members.size());
  for (const auto& m : members) current.push_back(m.element);
  const double gain = oracle.Marginal(u, current);

  if (members.size() < static_cast<std::size_t>(params.k)) {
    if (gain > 0.0) members.push_back({u, gain});
    return;
  }
  auto weakest = std::min_element(
      members.begin(), members.end(),
      [](const auto& a, const auto& b) { return a.gain < b.gain; });
  if (gain >= (1.0 + params.c) * weakest->gain) *weakest = {u, gain};
}

}  // namespace

void SampleStreaming::Arrive(ElementId u) {
  ArriveInto(members_, params_, oracle_, rng_, u);
}

const std::vector<SampleStreaming::Member>& SampleStreaming::Update(
    const UpdateEvent& event) {
  const ElementId v = event.element;
  const bool known = arrival_index_.contains(v);
  if (event.is_insert() == known) {
    throw PreconditionError(
        std::string(event.is_insert() ? "insert of alive" : "delete of dead") +
        " element " + std::to_string(v));
  }
  if (event.is_insert()) {
    arrival_index_[v] = next_arrival_;
    arrivals_[next_arrival_++] = v;
    Arrive(v);
    return members_;
  }
  arrivals_.erase(arrival_index_[v]);
  arrival_index_.erase(v);
  const bool selected =
      std::any_of(members_.begin(), members_.end(),
                  [v](const Member& m) { return m.element == v; });
  if (selected) Restart();
  return members_;
}

void SampleStreaming::Restart() {
  ++restarts_;
  rng_ = Rng(MixSeed(params_.seed, static_cast<std::uint64_t>(restarts_)));
  members_.clear();
  for (const auto& [index, u] : arrivals_) Arrive(u);
}

std::vector<SampleStreaming::Member> SampleStreaming::SinglePass(
    const SampleStreamingParams& params,
    std::shared_ptr<const SubmodularObjective> objective,
    std::span<const ElementId> order, Rng rng) {
  CountingOracle oracle(std::move(objective));
  std::vector<Member> members;
  for (ElementId u : order) ArriveInto(members, params, oracle, rng, u);
  return members;
}

ElementSet SampleStreaming::solution() const {
  ElementSet out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.element);
  return out;
}

ElementSet SampleStreaming::alive_order() const {
  ElementSet out;
  out.reserve(arrivals_.size());
  for (const auto& [index, u] : arrivals_) out.push_back(u);
  return out;
}

// ---------------------------------------------------------------------------

ElementSet RandomBaseline(std::span<const ElementId> alive, int k, Rng& rng) {
  ElementSet pool(alive.begin(), alive.end());
  const std::size_t take =
      std::min(pool.size(), static_cast<std::size_t>(std::max(k, 0)));
  // Partial Fisher-Yates: the first `take` slots end up a uniform sample.
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + rng.UniformIndex(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  return pool;
}

RandomSelector::RandomSelector(int k, std::uint64_t seed) : k_(k), rng_(seed) {
  if (k < 1) throw ConfigError("cardinality k must be >= 1");
}

ElementSet RandomSelector::Update(const UpdateEvent& event) {
  if (!alive_.Apply(event)) {
    throw PreconditionError("inconsistent update for element " +
                            std::to_string(event.element));
  }
  return RandomBaseline(alive_.elements(), k_, rng_);
}

}  // namespace dynsub
