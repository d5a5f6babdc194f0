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

// Dataset ingestion and update-sequence generation.
//
// Formats:
//   edge list   one "u v" pair per line (whitespace separated, integer ids),
//               '#' comment lines; self-loops rejected, duplicates merged.
//   kernel CSV  n rows of n comma-separated reals, '#' comment lines.
//   script      one event per line, "+ <id>" or "- <id>", '#' comments.

#ifndef DYNSUB_DATA_IO_H_
#define DYNSUB_DATA_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynsub/common.h"
#include "dynsub/oracle.h"

namespace dynsub {

struct EdgeListGraph {
  std::shared_ptr<const MaxCutObjective> objective;
  // original_ids[dense id] = id as written in the file. Dense ids follow the
  // ascending order of the original ids.
  std::vector<std::int64_t> original_ids;
};

// Throws ParseError (with line number) on malformed lines and self-loops.
EdgeListGraph ParseEdgeList(std::istream& in);
// Additionally throws IoError when the file cannot be opened.
EdgeListGraph LoadEdgeList(const std::filesystem::path& path);

struct KernelOptions {
  // Eigenvalue check on top of the symmetric / non-negative-diagonal screen.
  bool full_psd_check = false;
  double psd_tolerance = 1e-9;
};

std::shared_ptr<const LogDetObjective> ParseKernelCsv(
    std::istream& in, const KernelOptions& options = {});
std::shared_ptr<const LogDetObjective> LoadKernelCsv(
    const std::filesystem::path& path, const KernelOptions& options = {});

// Insert order[t] at each step; once W elements are alive, the oldest one is
// deleted right before the next insert. Remaining elements are deleted in
// insertion order at the end. Event t fields number the stream 0, 1, 2, ...
std::vector<UpdateEvent> SlidingWindowSequence(std::span<const ElementId> order,
                                               std::size_t window);

struct NoisyOrder {
  ElementSet insert_order;
  ElementSet delete_order;
};

// Vertices by descending degree (ties by id) to insert; the delete order is
// the same list after one left-to-right pass of random adjacent swaps: each
// position not yet swapped swaps with probability 1/2, towards a fair-coin
// direction, unless that neighbour is missing or already swapped.
NoisyOrder NoisyDegreeOrder(const MaxCutObjective& graph, std::uint64_t seed);

// Vertices by descending degree, ties by id.
ElementSet DescendingDegreeOrder(const MaxCutObjective& graph);

// All inserts, then all deletes.
std::vector<UpdateEvent> InsertThenDeleteSequence(
    std::span<const ElementId> insert_order,
    std::span<const ElementId> delete_order);

std::vector<UpdateEvent> ParseScript(std::istream& in);
std::vector<UpdateEvent> LoadScript(const std::filesystem::path& path);
void WriteScript(std::ostream& out, std::span<const UpdateEvent> events);

// Returns a description of the first event that inserts an alive element or
// deletes a dead one (or references an id >= universe_size, when given).
std::optional<std::string> LintStream(
    std::span<const UpdateEvent> events,
    std::optional<std::size_t> universe_size = std::nullopt);

}  // namespace dynsub

#endif  // DYNSUB_DATA_IO_H_
