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

#include "dynsub/oracle.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace dynsub {

CountingOracle::CountingOracle(
    std::shared_ptr<const SubmodularObjective> objective)
    : objective_(std::move(objective)) {
  if (!objective_) throw ConfigError("CountingOracle: null objective");
}

void CountingOracle::CheckDomain(std::span<const ElementId> set) const {
  const std::size_t n = objective_->UniverseSize();
  for (ElementId e : set) {
    if (e >= n) {
      throw DomainError("element " + std::to_string(e) +
                        " outside universe of size " + std::to_string(n));
    }
  }
}

double CountingOracle::Value(std::span<const ElementId> set) {
  CheckDomain(set);
  ++queries_;
  return objective_->Evaluate(set);
}

double CountingOracle::Marginal(ElementId e, std::span<const ElementId> set) {
  if (Contains(set, e)) {
    throw PreconditionError("marginal of element " + std::to_string(e) +
                            " already in the set");
  }
  ElementSet with(set.begin(), set.end());
  with.push_back(e);
  const double with_value = Value(with);
  return with_value - Value(set);
}

// ---------------------------------------------------------------------------

MaxCutObjective::MaxCutObjective(
    std::size_t num_vertices,
    std::span<const std::pair<ElementId, ElementId>> edges)
    : adjacency_(num_vertices) {
  std::set<std::pair<ElementId, ElementId>> unique;
  for (auto [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw ConfigError("edge endpoint outside vertex range");
    }
    if (u == v) {
      throw ConfigError("self-loop on vertex " + std::to_string(u));
    }
    unique.emplace(std::min(u, v), std::max(u, v));
  }
  for (auto [u, v] : unique) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  num_edges_ = unique.size();
}

double MaxCutObjective::Evaluate(std::span<const ElementId> set) const {
  // Scratch membership marks, cleared again before returning so the buffer
  // stays all-zero between calls.
  thread_local std::vector<unsigned char> in_set;
  if (in_set.size() < adjacency_.size()) in_set.resize(adjacency_.size(), 0);

  std::size_t marked = 0;
  bool duplicate = false;
  for (ElementId v : set) {
    if (in_set[v]) {
      duplicate = true;
      break;
    }
    in_set[v] = 1;
    ++marked;
  }
  std::size_t cut = 0;
  if (!duplicate) {
    for (ElementId v : set) {
      for (ElementId w : adjacency_[v]) cut += in_set[w] ? 0 : 1;
    }
  }
  for (std::size_t i = 0; i < marked; ++i) in_set[set[i]] = 0;
  if (duplicate) throw PreconditionError("duplicate element in set");
  return static_cast<double>(cut);
}

// ---------------------------------------------------------------------------

DenseMatrix::DenseMatrix(std::size_t r, std::size_t c,
                         std::vector<double> values)
    : rows(r), cols(c), data(std::move(values)) {
  if (data.size() != r * c) throw ShapeError("DenseMatrix: size mismatch");
}

double Determinant(const DenseMatrix& matrix, std::size_t max_dimension) {
  if (matrix.rows != matrix.cols) {
    throw ShapeError("determinant of a " + std::to_string(matrix.rows) + "x" +
                     std::to_string(matrix.cols) + " matrix");
  }
  const std::size_t n = matrix.rows;
  if (n > max_dimension) {
    throw DomainError("determinant dimension " + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_dimension));
  }
  std::vector<double> a = matrix.data;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    const double p = a[pivot * n + col];
    if (p == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
      }
      det = -det;
    }
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / p;
      if (factor == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) {
        a[r * n + j] -= factor * a[col * n + j];
      }
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

LogDetObjective::LogDetObjective(DenseMatrix kernel, std::size_t max_dimension)
    : kernel_(std::move(kernel)), max_dimension_(max_dimension) {
  if (kernel_.rows != kernel_.cols) {
    throw ConfigError("kernel is not square");
  }
  const std::size_t n = kernel_.rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(kernel_(i, i) >= 0.0)) {
      throw ConfigError("kernel diagonal entry " + std::to_string(i) +
                        " is negative");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = kernel_(i, j);
      const double b = kernel_(j, i);
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      if (std::abs(a - b) > 1e-9 * scale) {
        throw ConfigError("kernel is not symmetric at (" + std::to_string(i) +
                          ", " + std::to_string(j) + ")");
      }
    }
  }
}

double LogDetObjective::Evaluate(std::span<const ElementId> set) const {
  const std::size_t m = set.size();
  if (m > max_dimension_) {
    throw DomainError("log-det set size exceeds determinant cap");
  }
  DenseMatrix sub(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sub(i, j) = kernel_(set[i], set[j]);
  }
  // A PSD principal minor is >= 0; elimination round-off can dip below.
  const double det = std::max(0.0, Determinant(sub, max_dimension_));
  return std::log(det + 1.0);
}

// ---------------------------------------------------------------------------

CoverageObjective::CoverageObjective(std::vector<std::vector<std::size_t>> covers,
                                     std::vector<double> item_weights)
    : covers_(std::move(covers)), item_weights_(std::move(item_weights)) {
  for (const auto& items : covers_) {
    for (std::size_t item : items) {
      if (item >= item_weights_.size()) {
        throw ConfigError("coverage item index out of range");
      }
    }
  }
  for (double w : item_weights_) {
    if (!(w >= 0.0)) throw ConfigError("coverage weights must be >= 0");
  }
}

double CoverageObjective::Evaluate(std::span<const ElementId> set) const {
  std::vector<unsigned char> covered(item_weights_.size(), 0);
  double total = 0.0;
  for (ElementId e : set) {
    for (std::size_t item : covers_[e]) {
      if (!covered[item]) {
        covered[item] = 1;
        total += item_weights_[item];
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

bool GroundSet::Apply(const UpdateEvent& event) {
  return event.is_insert() ? Insert(event.element) : Erase(event.element);
}

bool GroundSet::Insert(ElementId e) {
  if (!position_.emplace(e, elements_.size()).second) return false;
  elements_.push_back(e);
  return true;
}

bool GroundSet::Erase(ElementId e) {
  auto it = position_.find(e);
  if (it == position_.end()) return false;
  const std::size_t pos = it->second;
  position_.erase(it);
  if (pos + 1 != elements_.size()) {
    elements_[pos] = elements_.back();
    position_[elements_[pos]] = pos;
  }
  elements_.pop_back();
  return true;
}

ElementSet GroundSet::Sorted() const {
  ElementSet out = elements_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dynsub
