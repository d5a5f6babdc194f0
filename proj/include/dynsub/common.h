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

#ifndef DYNSUB_COMMON_H_
#define DYNSUB_COMMON_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynsub {

// Identity of a ground-set element. Objectives index their universe densely
// from 0, so an ElementId doubles as a row/vertex index.
using ElementId = std::uint32_t;

// Sets are small (at most k + 1 members on every hot path) and are kept as
// plain vectors; order is meaningful for the leveling structure (e_1..e_T).
using ElementSet = std::vector<ElementId>;

// Invalid parameters (k < 1, tau <= 0, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element outside an objective's universe, or a set too large to evaluate.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller violated an operation's precondition (e in A for a marginal,
// insert of an alive element into a run, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class UpdateOp { kInsert, kDelete };

struct UpdateEvent {
  UpdateOp op = UpdateOp::kInsert;
  ElementId element = 0;
  std::int64_t t = 0;

  static UpdateEvent Insert(ElementId e, std::int64_t t = 0) {
    return {UpdateOp::kInsert, e, t};
  }
  static UpdateEvent Delete(ElementId e, std::int64_t t = 0) {
    return {UpdateOp::kDelete, e, t};
  }
  bool is_insert() const { return op == UpdateOp::kInsert; }
  bool operator==(const UpdateEvent&) const = default;
};

// splitmix64 finalizer over a pair; used to derive independent sub-streams
// (per guess run, per restart) from a user seed.
std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b);

// Seeded pseudorandom source. The distributions are written out here rather
// than taken from <random> so that streams are identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n); n must be positive.
  std::size_t UniformIndex(std::size_t n);

  // Uniform real in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  bool Coin() { return (Next() >> 63) != 0; }

  // True with probability p (p <= 0 never, p >= 1 always).
  bool Bernoulli(double p) { return Uniform01() < p; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = UniformIndex(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

bool Contains(std::span<const ElementId> set, ElementId e);

}  // namespace dynsub

#endif  // DYNSUB_COMMON_H_
