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

// Submodular objectives and the query-counting oracle that every algorithm
// in this library goes through. The oracle is the cost model: algorithms are
// compared by how many set evaluations they charge, never by wall clock.

#ifndef DYNSUB_ORACLE_H_
#define DYNSUB_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynsub/common.h"

namespace dynsub {

// A non-negative set function over the universe {0, ..., UniverseSize()-1}.
// Evaluate() may assume its argument is a duplicate-free subset of the
// universe; CountingOracle checks membership before calling it.
// Implementations must be safe to evaluate concurrently from several threads.
class SubmodularObjective {
 public:
  virtual ~SubmodularObjective() = default;

  virtual std::size_t UniverseSize() const = 0;
  virtual double Evaluate(std::span<const ElementId> set) const = 0;
  virtual std::string Name() const = 0;
};

// Wraps an objective and charges one query per set evaluation. A marginal is
// two set evaluations, even for objectives that could answer incrementally.
class CountingOracle {
 public:
  explicit CountingOracle(std::shared_ptr<const SubmodularObjective> objective);

  // f(A); +1 query.
  double Value(std::span<const ElementId> set);

  // f(A + e) - f(A); +2 queries. Throws PreconditionError if e is in A.
  double Marginal(ElementId e, std::span<const ElementId> set);

  std::int64_t queries() const { return queries_; }
  const SubmodularObjective& objective() const { return *objective_; }
  const std::shared_ptr<const SubmodularObjective>& shared_objective() const {
    return objective_;
  }

 private:
  void CheckDomain(std::span<const ElementId> set) const;

  std::shared_ptr<const SubmodularObjective> objective_;
  std::int64_t queries_ = 0;
};

// Cut size |C(A, V \ A)| of an undirected simple graph.
class MaxCutObjective : public SubmodularObjective {
 public:
  // Self-loops are rejected with ConfigError; repeated edges are collapsed.
  MaxCutObjective(std::size_t num_vertices,
                  std::span<const std::pair<ElementId, ElementId>> edges);

  std::size_t UniverseSize() const override { return adjacency_.size(); }
  double Evaluate(std::span<const ElementId> set) const override;
  std::string Name() const override { return "maxcut"; }

  std::size_t num_edges() const { return num_edges_; }
  std::size_t Degree(ElementId v) const { return adjacency_[v].size(); }
  std::span<const ElementId> Neighbors(ElementId v) const {
    return adjacency_[v];
  }

 private:
  std::vector<std::vector<ElementId>> adjacency_;
  std::size_t num_edges_ = 0;
};

// Row-major dense matrix, just enough for kernels and determinants.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  DenseMatrix(std::size_t r, std::size_t c, std::vector<double> values);

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
};

inline constexpr std::size_t kDefaultDeterminantCap = 512;

// Determinant by Gaussian elimination with partial pivoting. The 0x0 matrix
// has determinant 1. Throws ShapeError for non-square input and DomainError
// above `max_dimension`.
double Determinant(const DenseMatrix& matrix,
                   std::size_t max_dimension = kDefaultDeterminantCap);

// f(A) = ln(det(L_A) + 1) for a PSD kernel L. f(empty) = ln 2.
class LogDetObjective : public SubmodularObjective {
 public:
  // Requires a square, symmetric kernel with non-negative diagonal (the cheap
  // PSD screen); ConfigError otherwise.
  explicit LogDetObjective(DenseMatrix kernel,
                           std::size_t max_dimension = kDefaultDeterminantCap);

  std::size_t UniverseSize() const override { return kernel_.rows; }
  double Evaluate(std::span<const ElementId> set) const override;
  std::string Name() const override { return "logdet"; }

  const DenseMatrix& kernel() const { return kernel_; }

 private:
  DenseMatrix kernel_;
  std::size_t max_dimension_;
};

// Weighted coverage: element i covers items covers[i]; f(A) is the total
// weight of covered items. Monotone submodular, used to exercise the
// thresholding backend on its home turf.
class CoverageObjective : public SubmodularObjective {
 public:
  CoverageObjective(std::vector<std::vector<std::size_t>> covers,
                    std::vector<double> item_weights);

  std::size_t UniverseSize() const override { return covers_.size(); }
  double Evaluate(std::span<const ElementId> set) const override;
  std::string Name() const override { return "coverage"; }

 private:
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<double> item_weights_;
};

// The alive elements V_t. Insertion order is kept so that iteration is
// deterministic; removal is O(1) by swap-with-last.
class GroundSet {
 public:
  // Returns false (and changes nothing) for an insert of an alive element or
  // a delete of a dead one.
  bool Apply(const UpdateEvent& event);
  bool Insert(ElementId e);
  bool Erase(ElementId e);

  bool Contains(ElementId e) const { return position_.contains(e); }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::span<const ElementId> elements() const { return elements_; }
  ElementSet Sorted() const;

 private:
  ElementSet elements_;
  std::unordered_map<ElementId, std::size_t> position_;
};

}  // namespace dynsub

#endif  // DYNSUB_ORACLE_H_
