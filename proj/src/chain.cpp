#include "multilap/chain.hpp"

#include <ostream>

#include "multilap/kernels.hpp"

namespace multilap {

namespace {

std::vector<Monomial> basisOf(const Multicomplex& m, Degree d) {
  const auto l = m.layer(d);
  return {l.begin(), l.end()};
}

}  // namespace

BoundaryMatrix boundaryMatrix(const Multicomplex& m, Degree d) {
  if (d < 0) throw InvalidArgument("boundary degree must be non-negative");
  BoundaryMatrix b;
  b.degree = d;
  b.rowBasis = d == 0 ? std::vector<Monomial>{} : basisOf(m, d - 1);
  b.colBasis = basisOf(m, d);
  b.entries = SparseIntMatrix(b.rowBasis.size(), b.colBasis.size());
  if (d == 0) return b;
  for (std::size_t c = 0; c < b.colBasis.size(); ++c) {
    const auto& t = b.colBasis[c];
    std::vector<SparseEntry> col;
    std::uint64_t prefix = 0;
    for (std::size_t j = 0; j < t.ambientDim(); ++j) {
      if (t[j] % 2 == 1) {
        const auto row = m.indexInLayer(t.dividedByVariable(j));
        if (!row) throw InvalidArgument("multicomplex is not divisor-closed");
        col.push_back({*row, prefix % 2 == 0 ? 1 : -1});
      }
      prefix += t[j];
    }
    b.entries.setColumn(c, std::move(col));
  }
  return b;
}

BoundaryMatrix dualBoundaryMatrix(const Multicomplex& m, Degree d) {
  auto b = boundaryMatrix(m, d);
  BoundaryMatrix t;
  t.degree = d;
  t.dual = true;
  t.rowBasis = std::move(b.colBasis);
  t.colBasis = std::move(b.rowBasis);
  t.entries = b.entries.transpose();
  return t;
}

BoundaryMatrix dualBoundaryClosedForm(const Multicomplex& m, Degree d) {
  if (d < 0) throw InvalidArgument("boundary degree must be non-negative");
  BoundaryMatrix t;
  t.degree = d;
  t.dual = true;
  t.rowBasis = basisOf(m, d);
  t.colBasis = d == 0 ? std::vector<Monomial>{} : basisOf(m, d - 1);
  t.entries = SparseIntMatrix(t.rowBasis.size(), t.colBasis.size());
  for (std::size_t c = 0; c < t.colBasis.size(); ++c) {
    const auto& base = t.colBasis[c];
    std::vector<SparseEntry> col;
    std::uint64_t prefix = 0;
    for (std::size_t j = 0; j < base.ambientDim(); ++j) {
      if (base[j] % 2 == 0) {
        if (auto row = m.indexInLayer(base.timesVariable(j))) {
          col.push_back({*row, prefix % 2 == 0 ? 1 : -1});
        }
      }
      prefix += base[j];
    }
    t.entries.setColumn(c, std::move(col));
  }
  return t;
}

std::vector<std::int64_t> applyBoundary(const BoundaryMatrix& b,
                                        std::span<const std::int64_t> chain) {
  return b.entries.apply(chain);
}

bool checkBoundarySquareZero(const Multicomplex& m) {
  for (Degree d = 2; d <= m.maxDegree(); ++d) {
    const auto lower = boundaryMatrix(m, d - 1);
    const auto upper = boundaryMatrix(m, d);
    if (!kernels::parallel::productIsZero(lower.entries, upper.entries)) return false;
  }
  return true;
}

void writeMatrixDump(std::ostream& out, const BoundaryMatrix& b) {
  out << "rows " << b.rows() << " cols " << b.cols() << " degree " << b.degree << '\n';
  for (std::size_t r = 0; r < b.rowBasis.size(); ++r) {
    out << "# row " << r << ": " << formatExponents(b.rowBasis[r]) << '\n';
  }
  for (std::size_t c = 0; c < b.colBasis.size(); ++c) {
    out << "# col " << c << ": " << formatExponents(b.colBasis[c]) << '\n';
  }
  const auto rowsMajor = b.entries.transpose();
  for (std::size_t r = 0; r < rowsMajor.cols(); ++r) {
    for (const auto& e : rowsMajor.column(r)) out << r << ' ' << e.index << ' ' << e.value << '\n';
  }
}

}  // namespace multilap
