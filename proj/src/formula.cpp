#include "multilap/formula.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "multilap/kernels.hpp"

namespace multilap {

namespace {

void trimZeros(std::vector<Partition::Part>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

void requireShifted(const Multicomplex& m, const FormulaOptions& options) {
  if (options.force) return;
  const auto order = options.order.value_or(naturalOrder(m.ambientDim()));
  if (!admitsShiftedFormula(m, order)) {
    throw NotShifted("multicomplex is not shifted under the requested variable order");
  }
}

Partition conjugateOf(std::span<const std::size_t> sequence) {
  return conjugatePartition(Partition::fromUnsorted(sequence));
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{})) {
    throw InvalidPartition("parts are not weakly decreasing");
  }
  trimZeros(parts_);
}

Partition Partition::fromUnsorted(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

Partition::Part Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Part{0});
}

Partition conjugatePartition(const Partition& p) {
  if (p.empty()) return {};
  const auto parts = p.parts();
  std::vector<Partition::Part> out(parts.front(), 0);
  // parts are decreasing, so row i contributes to columns 1..parts[i]
  for (auto part : parts) {
    for (Partition::Part j = 0; j < part; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

Partition partitionUnion(const Partition& a, const Partition& b) {
  std::vector<Partition::Part> all(a.parts().begin(), a.parts().end());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return Partition::fromUnsorted(std::move(all));
}

std::string formatPartition(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

bool matchesUpToZeros(const Partition& p, const Spectrum& s, double tol) {
  std::vector<double> asReal(p.parts().begin(), p.parts().end());
  return equalUpToZeros(s, asReal, tol);
}

Partition formulaSpectrumSimplicial(const Multicomplex& complex, Degree k,
                                    const FormulaOptions& options) {
  if (!complex.isSimplicial()) throw NotSquareFree("complex contains a non square-free monomial");
  if (!options.force) {
    const auto order = options.order.value_or(naturalOrder(complex.ambientDim()));
    if (!isShiftedSimplicial(complex, order)) throw NotShifted("simplicial complex is not shifted");
  }
  return conjugateOf(degreeSequence(complex, k));
}

std::vector<std::uint64_t> paritySum(const Multicomplex& m, Degree k) {
  return kernels::parallel::paritySum(m.layer(k), m.ambientDim());
}

Partition formulaSpectrum(const Multicomplex& m, Degree k, const FormulaOptions& options) {
  requireShifted(m, options);
  return conjugatePartition(Partition::fromUnsorted(paritySum(m, k)));
}

Partition masterSpectrum(const Multicomplex& m, Degree k, const FormulaOptions& options) {
  requireShifted(m, options);
  Partition sum;
  for (const auto& c : constituents(m)) {
    const auto shift = static_cast<Degree>(2 * totalDegree(c.root));
    if (shift > k) continue;
    sum = partitionUnion(sum, conjugateOf(degreeSequence(c.complex, k - shift)));
  }
  return sum;
}

}  // namespace multilap
