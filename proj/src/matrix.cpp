#include "multilap/matrix.hpp"

#include <algorithm>
#include <string>

namespace multilap {

std::size_t SparseIntMatrix::nonZeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::int64_t SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const SparseEntry& e, std::size_t row) { return e.index < row; });
  return (it != col.end() && it->index == r) ? it->value : 0;
}

void SparseIntMatrix::setColumn(std::size_t c, std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  std::vector<SparseEntry> merged;
  for (const auto& e : entries) {
    if (e.index >= rows_) throw DimensionMismatch("row index out of range");
    if (!merged.empty() && merged.back().index == e.index) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const SparseEntry& e) { return e.value == 0; });
  columns_.at(c) = std::move(merged);
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) t.columns_[e.index].push_back({c, e.value});
  }
  return t;
}

IntMatrix SparseIntMatrix::toDense() const {
  IntMatrix d(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) d(e.index, c) = e.value;
  }
  return d;
}

std::vector<std::int64_t> SparseIntMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != cols()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                            " applied to matrix with " + std::to_string(cols()) + " columns");
  }
  std::vector<std::int64_t> y(rows_, 0);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (x[c] == 0) continue;
    for (const auto& e : columns_[c]) y[e.index] += e.value * x[c];
  }
  return y;
}

}  // namespace multilap
