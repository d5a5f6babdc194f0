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

#include "dynsub/data_io.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace dynsub {

namespace {

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool IsSkippable(std::string_view line) {
  return line.empty() || line.front() == '#';
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view token) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// from_chars for double is missing from older libstdc++; strtod on a copy.
std::optional<double> ParseReal(std::string_view token) {
  const std::string copy(Trim(token));
  if (copy.empty()) return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size()) return std::nullopt;
  return value;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

EdgeListGraph ParseEdgeList(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view body = Trim(line);
    if (IsSkippable(body)) continue;
    const auto tokens = SplitWhitespace(body);
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex ids, got \"" + std::string(body) +
                           "\"",
                       line_number);
    }
    const auto u = ParseNumber<std::int64_t>(tokens[0]);
    const auto v = ParseNumber<std::int64_t>(tokens[1]);
    if (!u || !v) {
      throw ParseError("non-integer vertex id in \"" + std::string(body) + "\"",
                       line_number);
    }
    if (*u == *v) {
      throw ParseError("self-loop on vertex " + std::to_string(*u),
                       line_number);
    }
    raw.emplace_back(*u, *v);
  }

  std::map<std::int64_t, ElementId> dense;
  for (auto [u, v] : raw) {
    dense.emplace(u, 0);
    dense.emplace(v, 0);
  }
  EdgeListGraph graph;
  graph.original_ids.reserve(dense.size());
  for (auto& [original, id] : dense) {
    id = static_cast<ElementId>(graph.original_ids.size());
    graph.original_ids.push_back(original);
  }
  std::vector<std::pair<ElementId, ElementId>> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(dense[u], dense[v]);
  graph.objective =
      std::make_shared<const MaxCutObjective>(dense.size(), edges);
  return graph;
}

EdgeListGraph LoadEdgeList(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseEdgeList(in);
}

std::shared_ptr<const LogDetObjective> ParseKernelCsv(
    std::istream& in, const KernelOptions& options) {
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view body = Trim(line);
    if (IsSkippable(body)) continue;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      const auto field = body.substr(
          start, comma == std::string_view::npos ? body.size() - start
                                                 : comma - start);
      const auto value = ParseReal(field);
      if (!value) {
        throw ParseError("bad kernel entry \"" + std::string(Trim(field)) +
                             "\"",
                         line_number);
      }
      values.push_back(*value);
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("row has " + std::to_string(count) +
                           " entries, expected " + std::to_string(cols),
                       line_number);
    }
    ++rows;
  }
  if (rows != cols) {
    throw ParseError("kernel is " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", expected square",
                     line_number);
  }
  DenseMatrix kernel(rows, cols, std::move(values));
  if (options.full_psd_check && rows > 0) {
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>
        view(kernel.data.data(), static_cast<Eigen::Index>(rows),
             static_cast<Eigen::Index>(cols));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        view, Eigen::EigenvaluesOnly);
    const double smallest = solver.eigenvalues().minCoeff();
    const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
    if (smallest < -options.psd_tolerance * scale) {
      throw ConfigError("kernel is not positive semi-definite (eigenvalue " +
                        std::to_string(smallest) + ")");
    }
  }
  return std::make_shared<const LogDetObjective>(std::move(kernel));
}

std::shared_ptr<const LogDetObjective> LoadKernelCsv(
    const std::filesystem::path& path, const KernelOptions& options) {
  std::ifstream in = OpenOrThrow(path);
  return ParseKernelCsv(in, options);
}

// ---------------------------------------------------------------------------

std::vector<UpdateEvent> SlidingWindowSequence(std::span<const ElementId> order,
                                               std::size_t window) {
  if (window < 1) throw ConfigError("window must be >= 1");
  std::vector<UpdateEvent> events;
  events.reserve(2 * order.size());
  auto push = [&events](UpdateOp op, ElementId e) {
    events.push_back({op, e, static_cast<std::int64_t>(events.size())});
  };
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t >= window) push(UpdateOp::kDelete, order[t - window]);
    push(UpdateOp::kInsert, order[t]);
  }
  const std::size_t first_alive =
      order.size() > window ? order.size() - window : 0;
  for (std::size_t t = first_alive; t < order.size(); ++t) {
    push(UpdateOp::kDelete, order[t]);
  }
  return events;
}

ElementSet DescendingDegreeOrder(const MaxCutObjective& graph) {
  ElementSet order(graph.UniverseSize());
  for (std::size_t v = 0; v < order.size(); ++v) {
    order[v] = static_cast<ElementId>(v);
  }
  std::stable_sort(order.begin(), order.end(), [&graph](ElementId a, ElementId b) {
    return graph.Degree(a) > graph.Degree(b);
  });
  return order;
}

NoisyOrder NoisyDegreeOrder(const MaxCutObjective& graph, std::uint64_t seed) {
  NoisyOrder result;
  result.insert_order = DescendingDegreeOrder(graph);
  result.delete_order = result.insert_order;
  ElementSet& order = result.delete_order;
  const std::size_t n = order.size();
  std::vector<unsigned char> swapped(n, 0);
  Rng rng(seed);
  for (std::size_t p = 0; p < n; ++p) {
    if (swapped[p]) continue;
    if (!rng.Coin()) continue;
    const bool left = rng.Coin();
    if (left ? p == 0 : p + 1 == n) continue;
    const std::size_t q = left ? p - 1 : p + 1;
    if (swapped[q]) continue;
    std::swap(order[p], order[q]);
    swapped[p] = swapped[q] = 1;
  }
  return result;
}

std::vector<UpdateEvent> InsertThenDeleteSequence(
    std::span<const ElementId> insert_order,
    std::span<const ElementId> delete_order) {
  std::vector<UpdateEvent> events;
  events.reserve(insert_order.size() + delete_order.size());
  for (ElementId e : insert_order) {
    events.push_back(UpdateEvent::Insert(e, static_cast<std::int64_t>(events.size())));
  }
  for (ElementId e : delete_order) {
    events.push_back(UpdateEvent::Delete(e, static_cast<std::int64_t>(events.size())));
  }
  return events;
}

// ---------------------------------------------------------------------------

std::vector<UpdateEvent> ParseScript(std::istream& in) {
  std::vector<UpdateEvent> events;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view body = Trim(line);
    if (IsSkippable(body)) continue;
    const auto tokens = SplitWhitespace(body);
    if (tokens.size() != 2 || (tokens[0] != "+" && tokens[0] != "-")) {
      throw ParseError("expected \"+ <id>\" or \"- <id>\"", line_number);
    }
    const auto id = ParseNumber<ElementId>(tokens[1]);
    if (!id) throw ParseError("bad element id", line_number);
    events.push_back({tokens[0] == "+" ? UpdateOp::kInsert : UpdateOp::kDelete,
                      *id, static_cast<std::int64_t>(events.size())});
  }
  return events;
}

std::vector<UpdateEvent> LoadScript(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseScript(in);
}

void WriteScript(std::ostream& out, std::span<const UpdateEvent> events) {
  for (const auto& e : events) {
    out << (e.is_insert() ? '+' : '-') << ' ' << e.element << '\n';
  }
}

std::optional<std::string> LintStream(std::span<const UpdateEvent> events,
                                      std::optional<std::size_t> universe_size) {
  std::unordered_set<ElementId> alive;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const UpdateEvent& e = events[i];
    std::ostringstream problem;
    if (universe_size && e.element >= *universe_size) {
      problem << "event " << i << ": element " << e.element
              << " outside universe of size " << *universe_size;
      return problem.str();
    }
    if (e.is_insert() && !alive.insert(e.element).second) {
      problem << "event " << i << ": insert of alive element " << e.element;
      return problem.str();
    }
    if (!e.is_insert() && alive.erase(e.element) == 0) {
      problem << "event " << i << ": delete of dead element " << e.element;
      return problem.str();
    }
  }
  return std::nullopt;
}

}  // namespace dynsub
