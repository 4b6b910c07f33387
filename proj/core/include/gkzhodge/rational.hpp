#pragma once

#include <gkzhodge/linalg.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace gkz {

using RatVec = std::vector<Rat>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::size_t rank(const RatMatrix& m);
// Basis of {v : M v = 0}.
std::vector<RatVec> nullspace(const RatMatrix& m);
// Solves M x = b; nullopt if inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

// Sparse rows keyed by column index, for large homology computations.
using SparseRow = std::map<std::size_t, Rat>;

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void add(std::size_t i, std::size_t j, const Rat& v);
  const SparseRow& row(std::size_t i) const { return data_[i]; }
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseRow> data_;
};

std::size_t rank(const SparseMatrix& m);

// Incremental row-echelon span over Q, used for dimension-wise comparisons.
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}
  // Returns true if v was independent of the current span.
  bool insert(SparseRow v);
  bool contains(SparseRow v) const;
  std::size_t dimension() const { return pivots_.size(); }

 private:
  void reduce(SparseRow& v) const;
  std::size_t dim_;
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace gkz
