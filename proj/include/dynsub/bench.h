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

// Benchmark driver: replays an update sequence through one algorithm per
// seed and records value and oracle cost after every update.
//
// Per-update CSV (header always written):
//   alg,k,seed,t,op,element,f_value,queries_update,queries_cum,solution_size
// One summary row per seed follows that seed's rows, with op = "summary",
// t = number of updates, f_value = average reported f over the run,
// queries_cum = total queries, and the other fields empty.
//
// Sweep CSV:      alg,k,seed,avg_f,total_queries
// Aggregate CSV:  alg,k,seeds,avg_f_mean,avg_f_min,avg_f_max,
//                 total_queries_mean,total_queries_min,total_queries_max
//
// Reals are printed with 6 significant digits.

#ifndef DYNSUB_BENCH_H_
#define DYNSUB_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dynsub/common.h"
#include "dynsub/oracle.h"

namespace dynsub {

enum class Algorithm {
  kReductionLocalSearch,
  kReductionUniform,
  kSampleStreaming,
  kRandom,
};

// "reduction-ls", "reduction-us", "sample-streaming", "random".
std::string AlgorithmName(Algorithm algorithm);
// Throws ConfigError for an unknown name.
Algorithm ParseAlgorithm(const std::string& name);

struct BenchConfig {
  Algorithm algorithm = Algorithm::kReductionLocalSearch;
  int k = 1;
  double eps_prime = 1.0;
  double q = 0.5;
  double c = 1.0;
  std::vector<std::uint64_t> seeds = {0};
  bool verify = false;
  // Dump the leveling structure of the winning run after every update
  // (reduction algorithms only).
  bool dump_levels = false;

  void Validate() const;
};

struct BenchRow {
  std::int64_t t = 0;
  UpdateOp op = UpdateOp::kInsert;
  ElementId element = 0;
  double f_value = 0.0;
  std::int64_t queries_update = 0;
  std::int64_t queries_cum = 0;
  std::size_t solution_size = 0;
};

struct SeedSummary {
  Algorithm algorithm = Algorithm::kRandom;
  int k = 0;
  std::uint64_t seed = 0;
  std::int64_t updates = 0;
  double avg_f = 0.0;
  std::int64_t total_queries = 0;
};

struct SeedResult {
  std::vector<BenchRow> rows;
  SeedSummary summary;
  std::vector<std::string> verify_lines;  // JSON lines
  bool verify_failed = false;
  std::string level_dump;
};

struct BenchResult {
  BenchConfig config;
  std::vector<SeedResult> seeds;  // in config.seeds order

  bool verify_failed() const;
};

// One seed. Throws PreconditionError on a malformed stream.
SeedResult RunSeed(const BenchConfig& config, std::uint64_t seed,
                   std::shared_ptr<const SubmodularObjective> objective,
                   std::span<const UpdateEvent> events);

// All seeds of `config`, run concurrently, results in seed order.
BenchResult RunBench(const BenchConfig& config,
                     std::shared_ptr<const SubmodularObjective> objective,
                     std::span<const UpdateEvent> events);

void WriteBenchHeader(std::ostream& out);
void WriteBenchRows(std::ostream& out, const BenchResult& result);

// Runs every config over the same objective and sequence; returns the seed
// summaries keyed by (algorithm, k, seed) in config order.
std::vector<SeedSummary> Sweep(std::span<const BenchConfig> configs,
                               std::shared_ptr<const SubmodularObjective> objective,
                               std::span<const UpdateEvent> events);

void WriteSweepCsv(std::ostream& out, std::span<const SeedSummary> summaries);

struct AggregateRow {
  Algorithm algorithm = Algorithm::kRandom;
  int k = 0;
  std::size_t seeds = 0;
  double avg_f_mean = 0.0;
  double avg_f_min = 0.0;
  double avg_f_max = 0.0;
  double total_queries_mean = 0.0;
  std::int64_t total_queries_min = 0;
  std::int64_t total_queries_max = 0;
};

// Mean/min/max over seeds per (algorithm, k), in first-appearance order.
std::vector<AggregateRow> Aggregate(std::span<const SeedSummary> summaries);
void WriteAggregateCsv(std::ostream& out, std::span<const AggregateRow> rows);

// printf("%.6g").
std::string FormatReal(double value);

}  // namespace dynsub

#endif  // DYNSUB_BENCH_H_
