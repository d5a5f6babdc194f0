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

#include "dynsub/bench.h"

#include <cstdio>
#include <future>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "dynsub/baselines.h"
#include "dynsub/data_io.h"
#include "dynsub/guess_grid.h"
#include "dynsub/reduction.h"
#include "dynsub/verify.h"

namespace dynsub {

namespace {

constexpr std::size_t kVerifyEveryUpdateUpTo = 50;
constexpr std::int64_t kVerifyStride = 10;
constexpr std::size_t kBracketingBruteForceUpTo = 14;
constexpr int kVerifySlackTrials = 50;

bool IsReduction(Algorithm a) {
  return a == Algorithm::kReductionLocalSearch ||
         a == Algorithm::kReductionUniform;
}

class Recorder {
 public:
  Recorder(SeedResult& result, std::int64_t t) : result_(result), t_(t) {}

  void Add(AuditReport report, const std::string& scope = "") {
    if (!scope.empty()) report.check += "[" + scope + "]";
    result_.verify_lines.push_back(ToJsonLine(t_, report));
    if (!report.pass) result_.verify_failed = true;
  }

 private:
  SeedResult& result_;
  std::int64_t t_;
};

void VerifyGrid(const GuessGrid& grid, CountingOracle& shadow, Rng& rng,
                Recorder& recorder) {
  for (int index : grid.ActiveRunIndices()) {
    const ReductionRun& run = *grid.FindRun(index);
    const std::string run_scope = "run=" + std::to_string(index);
    const ThresholdLeveling* instances[] = {&run.first(), &run.second()};
    for (int which = 0; which < 2; ++which) {
      const std::string scope = run_scope + ",inst=" + std::to_string(which + 1);
      recorder.Add(AuditStructure(*instances[which], shadow), scope);
      recorder.Add(AuditThreshold(*instances[which], shadow), scope);
      recorder.Add(
          AuditSlack(*instances[which], shadow, kVerifySlackTrials, rng),
          scope);
    }
    recorder.Add(AuditSecondGround(run), run_scope);
    recorder.Add(AuditRunOutput(run, shadow), run_scope);
  }
  // The element windows only guarantee a bracketing guess when
  // eps' (1 + eps') <= 1; above that the audit would flag legitimate states.
  const double eps = grid.config().eps_prime;
  if (eps * (1.0 + eps) <= 1.0 &&
      grid.alive().size() <= kBracketingBruteForceUpTo) {
    const double opt =
        BruteForceOpt(shadow, grid.alive().elements(), grid.config().k)
            .opt_value;
    recorder.Add(AuditBracketing(grid, opt));
  }
}

}  // namespace

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kReductionLocalSearch:
      return "reduction-ls";
    case Algorithm::kReductionUniform:
      return "reduction-us";
    case Algorithm::kSampleStreaming:
      return "sample-streaming";
    case Algorithm::kRandom:
      return "random";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (Algorithm a :
       {Algorithm::kReductionLocalSearch, Algorithm::kReductionUniform,
        Algorithm::kSampleStreaming, Algorithm::kRandom}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw ConfigError("unknown algorithm \"" + name + "\"");
}

void BenchConfig::Validate() const {
  if (k < 1) throw ConfigError("k must be >= 1");
  if (seeds.empty()) throw ConfigError("at least one seed is required");
  if (IsReduction(algorithm)) {
    GridConfig{k, eps_prime, SubsetStrategy::Uniform(), 0}.Validate();
  }
  if (algorithm == Algorithm::kSampleStreaming) {
    SampleStreamingParams{k, q, c, 0}.Validate();
  }
}

bool BenchResult::verify_failed() const {
  for (const auto& s : seeds) {
    if (s.verify_failed) return true;
  }
  return false;
}

SeedResult RunSeed(const BenchConfig& config, std::uint64_t seed,
                   std::shared_ptr<const SubmodularObjective> objective,
                   std::span<const UpdateEvent> events) {
  config.Validate();
  if (auto problem = LintStream(events, objective->UniverseSize())) {
    throw PreconditionError("malformed update stream: " + *problem);
  }

  SeedResult result;
  result.summary = {config.algorithm, config.k, seed, 0, 0.0, 0};

  std::unique_ptr<GuessGrid> grid;
  std::unique_ptr<SampleStreaming> streaming;
  std::unique_ptr<RandomSelector> random;
  CountingOracle report(objective);
  switch (config.algorithm) {
    case Algorithm::kReductionLocalSearch:
    case Algorithm::kReductionUniform:
      grid = std::make_unique<GuessGrid>(
          GridConfig{config.k, config.eps_prime,
                     config.algorithm == Algorithm::kReductionUniform
                         ? SubsetStrategy::Uniform()
                         : SubsetStrategy::LocalSearch(),
                     seed},
          objective);
      break;
    case Algorithm::kSampleStreaming:
      streaming = std::make_unique<SampleStreaming>(
          SampleStreamingParams{config.k, config.q, config.c, seed}, objective);
      break;
    case Algorithm::kRandom:
      random = std::make_unique<RandomSelector>(config.k, seed);
      break;
  }

  CountingOracle shadow(objective);
  Rng audit_rng(MixSeed(seed, 0x5eed));
  const bool verify_every_update =
      objective->UniverseSize() <= kVerifyEveryUpdateUpTo;
  GroundSet alive;
  std::int64_t previous_queries = 0;
  double value_sum = 0.0;
  std::ostringstream dump;

  for (std::size_t index = 0; index < events.size(); ++index) {
    const UpdateEvent& event = events[index];
    alive.Apply(event);
    Solution answer;
    std::int64_t queries = 0;
    if (grid) {
      answer = grid->ApplyUpdate(event);
      queries = grid->TotalQueries();
    } else if (streaming) {
      streaming->Update(event);
      answer.elements = streaming->solution();
      answer.value = report.Value(answer.elements);
      queries = streaming->queries() + report.queries();
    } else {
      answer.elements = random->Update(event);
      answer.value = report.Value(answer.elements);
      queries = report.queries();
    }

    result.rows.push_back({event.t, event.op, event.element, answer.value,
                           queries - previous_queries, queries,
                           answer.elements.size()});
    previous_queries = queries;
    value_sum += answer.value;

    if (config.dump_levels && grid && grid->best_run()) {
      dump << "t " << event.t << " run " << *grid->best_run() << '\n';
      grid->FindRun(*grid->best_run())->first().DumpLevels(dump);
    }

    const auto step = static_cast<std::int64_t>(index) + 1;
    if (config.verify && (verify_every_update || step % kVerifyStride == 0)) {
      Recorder recorder(result, event.t);
      recorder.Add(AuditFeasible(answer.elements, config.k, alive));
      if (grid) VerifyGrid(*grid, shadow, audit_rng, recorder);
    }
  }

  result.summary.updates = static_cast<std::int64_t>(events.size());
  result.summary.avg_f =
      events.empty() ? 0.0 : value_sum / static_cast<double>(events.size());
  result.summary.total_queries = previous_queries;
  result.level_dump = dump.str();
  return result;
}

BenchResult RunBench(const BenchConfig& config,
                     std::shared_ptr<const SubmodularObjective> objective,
                     std::span<const UpdateEvent> events) {
  config.Validate();
  std::vector<std::future<SeedResult>> pending;
  pending.reserve(config.seeds.size());
  for (std::uint64_t seed : config.seeds) {
    pending.push_back(std::async(std::launch::async, [&config, seed, objective,
                                                      events] {
      return RunSeed(config, seed, objective, events);
    }));
  }
  BenchResult result{config, {}};
  for (auto& p : pending) result.seeds.push_back(p.get());
  return result;
}

std::string FormatReal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

void WriteBenchHeader(std::ostream& out) {
  out << "alg,k,seed,t,op,element,f_value,queries_update,queries_cum,"
         "solution_size\n";
}

void WriteBenchRows(std::ostream& out, const BenchResult& result) {
  const std::string alg = AlgorithmName(result.config.algorithm);
  for (const SeedResult& s : result.seeds) {
    const std::string prefix = alg + "," + std::to_string(s.summary.k) + "," +
                               std::to_string(s.summary.seed) + ",";
    for (const BenchRow& row : s.rows) {
      out << prefix << row.t << ',' << (row.op == UpdateOp::kInsert ? '+' : '-')
          << ',' << row.element << ',' << FormatReal(row.f_value) << ','
          << row.queries_update << ',' << row.queries_cum << ','
          << row.solution_size << '\n';
    }
    out << prefix << s.summary.updates << ",summary,,"
        << FormatReal(s.summary.avg_f) << ",," << s.summary.total_queries
        << ",\n";
  }
}

std::vector<SeedSummary> Sweep(std::span<const BenchConfig> configs,
                               std::shared_ptr<const SubmodularObjective> objective,
                               std::span<const UpdateEvent> events) {
  std::vector<SeedSummary> summaries;
  for (const BenchConfig& config : configs) {
    const BenchResult result = RunBench(config, objective, events);
    for (const SeedResult& s : result.seeds) summaries.push_back(s.summary);
  }
  return summaries;
}

void WriteSweepCsv(std::ostream& out, std::span<const SeedSummary> summaries) {
  out << "alg,k,seed,avg_f,total_queries\n";
  for (const SeedSummary& s : summaries) {
    out << AlgorithmName(s.algorithm) << ',' << s.k << ',' << s.seed << ','
        << FormatReal(s.avg_f) << ',' << s.total_queries << '\n';
  }
}

std::vector<AggregateRow> Aggregate(std::span<const SeedSummary> summaries) {
  std::vector<AggregateRow> rows;
  std::map<std::pair<Algorithm, int>, std::size_t> slot;
  std::vector<double> query_sums;
  for (const SeedSummary& s : summaries) {
    auto [it, fresh] = slot.emplace(std::make_pair(s.algorithm, s.k), rows.size());
    if (fresh) {
      AggregateRow row;
      row.algorithm = s.algorithm;
      row.k = s.k;
      row.avg_f_min = std::numeric_limits<double>::infinity();
      row.avg_f_max = -std::numeric_limits<double>::infinity();
      row.total_queries_min = std::numeric_limits<std::int64_t>::max();
      row.total_queries_max = std::numeric_limits<std::int64_t>::min();
      rows.push_back(row);
      query_sums.push_back(0.0);
    }
    AggregateRow& row = rows[it->second];
    ++row.seeds;
    row.avg_f_mean += s.avg_f;
    row.avg_f_min = std::min(row.avg_f_min, s.avg_f);
    row.avg_f_max = std::max(row.avg_f_max, s.avg_f);
    query_sums[it->second] += static_cast<double>(s.total_queries);
    row.total_queries_min = std::min(row.total_queries_min, s.total_queries);
    row.total_queries_max = std::max(row.total_queries_max, s.total_queries);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double n = static_cast<double>(rows[i].seeds);
    rows[i].avg_f_mean /= n;
    rows[i].total_queries_mean = query_sums[i] / n;
  }
  return rows;
}

void WriteAggregateCsv(std::ostream& out, std::span<const AggregateRow> rows) {
  out << "alg,k,seeds,avg_f_mean,avg_f_min,avg_f_max,total_queries_mean,"
         "total_queries_min,total_queries_max\n";
  for (const AggregateRow& r : rows) {
    out << AlgorithmName(r.algorithm) << ',' << r.k << ',' << r.seeds << ','
        << FormatReal(r.avg_f_mean) << ',' << FormatReal(r.avg_f_min) << ','
        << FormatReal(r.avg_f_max) << ',' << FormatReal(r.total_queries_mean)
        << ',' << r.total_queries_min << ',' << r.total_queries_max << '\n';
  }
}

}  // namespace dynsub
