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

// dynsub_bench: replays an update sequence through one or more algorithms
// and writes per-update CSV.
//
//   dynsub_bench --objective maxcut --graph g.txt --sequence sliding:W=100
//       --alg reduction-ls,random --k 5,10 --seed 1,2,3 --out run.csv
//
// Exit status: 0 ok, 2 bad configuration, 3 verification failure, 4 I/O.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynsub/bench.h"
#include "dynsub/data_io.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string objective = "maxcut";
  std::string graph_path;
  std::string kernel_path;
  std::string sequence = "sliding:W=100";
  std::uint64_t sequence_seed = 0;
  std::vector<std::string> algorithms = {"reduction-ls"};
  std::vector<int> ks = {10};
  double eps_prime = 1.0;
  double q = 0.5;
  double c = 1.0;
  std::vector<std::uint64_t> seeds = {0};
  bool verify = false;
  std::string verify_log;
  bool full_psd_check = false;
  bool verbose = false;
  std::string out = "-";
  std::string summary;
  std::string aggregate;
  std::string dump_sequence;
};

struct Instance {
  std::shared_ptr<const dynsub::SubmodularObjective> objective;
  std::shared_ptr<const dynsub::MaxCutObjective> graph;  // null for kernels
};

Instance LoadInstance(const Options& options) {
  Instance instance;
  if (options.objective == "maxcut") {
    if (options.graph_path.empty()) {
      throw dynsub::ConfigError("--objective maxcut needs --graph");
    }
    instance.graph = dynsub::LoadEdgeList(options.graph_path).objective;
    instance.objective = instance.graph;
  } else if (options.objective == "logdet") {
    if (options.kernel_path.empty()) {
      throw dynsub::ConfigError("--objective logdet needs --kernel");
    }
    dynsub::KernelOptions kernel_options;
    kernel_options.full_psd_check = options.full_psd_check;
    instance.objective = dynsub::LoadKernelCsv(options.kernel_path,
                                               kernel_options);
  } else {
    throw dynsub::ConfigError("unknown objective \"" + options.objective +
                              "\"");
  }
  return instance;
}

std::size_t ParseWindow(const std::string& text) {
  const std::string prefix = "W=";
  if (text.rfind(prefix, 0) != 0) {
    throw dynsub::ConfigError("sliding window must be given as sliding:W=N");
  }
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text.substr(prefix.size()), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() - prefix.size() || value < 1) {
    throw dynsub::ConfigError("bad window size \"" + text + "\"");
  }
  return static_cast<std::size_t>(value);
}

std::vector<dynsub::UpdateEvent> BuildSequence(const Options& options,
                                               const Instance& instance) {
  const std::string& spec = options.sequence;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "sliding") {
    dynsub::ElementSet order;
    if (instance.graph) {
      order = dynsub::DescendingDegreeOrder(*instance.graph);
    } else {
      order.resize(instance.objective->UniverseSize());
      for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<dynsub::ElementId>(i);
      }
    }
    return dynsub::SlidingWindowSequence(order, ParseWindow(arg));
  }
  if (kind == "noisy") {
    if (!instance.graph) {
      throw dynsub::ConfigError("--sequence noisy needs a Max-Cut graph");
    }
    const auto order =
        dynsub::NoisyDegreeOrder(*instance.graph, options.sequence_seed);
    return dynsub::InsertThenDeleteSequence(order.insert_order,
                                            order.delete_order);
  }
  if (kind == "file") {
    if (arg.empty()) throw dynsub::ConfigError("--sequence file:PATH");
    auto events = dynsub::LoadScript(arg);
    if (auto problem =
            dynsub::LintStream(events, instance.objective->UniverseSize())) {
      throw dynsub::ConfigError("sequence file: " + *problem);
    }
    return events;
  }
  throw dynsub::ConfigError("unknown sequence \"" + spec + "\"");
}

// Opens `path` for writing, or returns stdout for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw dynsub::IoError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int Run(const Options& options) {
  const Instance instance = LoadInstance(options);
  const auto events = BuildSequence(options, instance);

  if (options.eps_prime > 1.0) {
    std::cerr << "warning: --eps-prime " << options.eps_prime
              << " is above 1; the approximation analysis assumes eps' <= 1\n";
  }
  if (!options.dump_sequence.empty()) {
    Sink sink(options.dump_sequence);
    dynsub::WriteScript(sink.stream(), events);
  }

  std::vector<dynsub::BenchConfig> configs;
  for (const std::string& name : options.algorithms) {
    for (int k : options.ks) {
      dynsub::BenchConfig config;
      config.algorithm = dynsub::ParseAlgorithm(name);
      config.k = k;
      config.eps_prime = options.eps_prime;
      config.q = options.q;
      config.c = options.c;
      config.seeds = options.seeds;
      config.verify = options.verify;
      config.dump_levels = options.verbose;
      config.Validate();
      configs.push_back(config);
    }
  }

  if (options.verbose) {
    std::cerr << "objective " << instance.objective->Name() << ", "
              << instance.objective->UniverseSize() << " elements, "
              << events.size() << " updates\n";
  }

  Sink out(options.out);
  std::optional<Sink> verify_log;
  if (!options.verify_log.empty()) verify_log.emplace(options.verify_log);

  dynsub::WriteBenchHeader(out.stream());
  std::vector<dynsub::SeedSummary> summaries;
  bool verify_failed = false;
  for (const auto& config : configs) {
    const auto result = dynsub::RunBench(config, instance.objective, events);
    dynsub::WriteBenchRows(out.stream(), result);
    for (const auto& seed : result.seeds) {
      summaries.push_back(seed.summary);
      if (options.verbose && !seed.level_dump.empty()) {
        std::cerr << seed.level_dump;
      }
      for (const std::string& line : seed.verify_lines) {
        if (verify_log) {
          verify_log->stream() << line << '\n';
        } else if (line.find("\"pass\":false") != std::string::npos) {
          std::cerr << line << '\n';
        }
      }
    }
    verify_failed |= result.verify_failed();
  }
  out.stream().flush();

  if (!options.summary.empty()) {
    Sink sink(options.summary);
    dynsub::WriteSweepCsv(sink.stream(), summaries);
  }
  if (!options.aggregate.empty()) {
    Sink sink(options.aggregate);
    dynsub::WriteAggregateCsv(sink.stream(), dynsub::Aggregate(summaries));
  }
  if (verify_failed) {
    std::cerr << "verification failed\n";
    return kExitVerify;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully dynamic submodular maximization benchmark"};
  Options options;

  app.add_option("--objective", options.objective, "maxcut or logdet")
      ->check(CLI::IsMember({"maxcut", "logdet"}))
      ->capture_default_str();
  app.add_option("--graph", options.graph_path, "edge list (Max-Cut)");
  app.add_option("--kernel", options.kernel_path, "kernel CSV (log-det)");
  app.add_option("--sequence", options.sequence,
                 "sliding:W=N, noisy, or file:PATH")
      ->capture_default_str();
  app.add_option("--sequence-seed", options.sequence_seed,
                 "seed of the noisy deletion order")
      ->capture_default_str();
  app.add_option("--alg", options.algorithms,
                 "reduction-ls, reduction-us, sample-streaming, random")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--k", options.ks, "cardinality bound(s)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--eps-prime", options.eps_prime, "guess grid ratio - 1")
      ->capture_default_str();
  app.add_option("--q", options.q, "sample-streaming sampling probability")
      ->capture_default_str();
  app.add_option("--c", options.c, "sample-streaming swap slack")
      ->capture_default_str();
  app.add_option("--seed", options.seeds, "seed(s)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_flag("--verify", options.verify, "audit invariants while running");
  app.add_option("--verify-log", options.verify_log,
                 "write every audit as a JSON line");
  app.add_flag("--full-psd-check", options.full_psd_check,
               "eigenvalue check on the kernel");
  app.add_flag("-v,--verbose", options.verbose,
               "progress and level dumps on stderr");
  app.add_option("--out", options.out, "per-update CSV ('-' for stdout)")
      ->capture_default_str();
  app.add_option("--summary", options.summary, "per-seed summary CSV");
  app.add_option("--aggregate", options.aggregate,
                 "mean/min/max per algorithm and k");
  app.add_option("--dump-sequence", options.dump_sequence,
                 "write the generated update sequence as a script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    return Run(options);
  } catch (const dynsub::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dynsub::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dynsub::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const dynsub::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
