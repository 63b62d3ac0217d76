#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "multilap/error.hpp"

namespace multilap {

// Row-major dense matrix.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;

struct SparseEntry {
  std::size_t index;  // row index inside a column
  std::int64_t value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Compressed sparse columns; every column is sorted by row and holds no zeros.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nonZeros() const noexcept;

  std::span<const SparseEntry> column(std::size_t c) const { return columns_[c]; }
  std::int64_t at(std::size_t r, std::size_t c) const;

  // Replaces column c; entries are sorted and zeros dropped.
  void setColumn(std::size_t c, std::vector<SparseEntry> entries);

  SparseIntMatrix transpose() const;
  IntMatrix toDense() const;

  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<SparseEntry>> columns_;
};

}  // namespace multilap
