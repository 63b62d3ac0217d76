#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multilap/multicomplex.hpp"
#include "multilap/spectra.hpp"

namespace multilap {

// Weakly decreasing sequence of non-negative integers. Trailing zeros are
// dropped on construction, so partitions differing only in zero parts compare equal.
class Partition {
 public:
  using Part = std::uint64_t;

  Partition() = default;
  // Throws InvalidPartition unless `parts` is weakly decreasing.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  // Sorts decreasingly first.
  static Partition fromUnsorted(std::vector<Part> parts);
  template <typename Int>
  static Partition fromUnsorted(std::span<const Int> parts) {
    return fromUnsorted(std::vector<Part>(parts.begin(), parts.end()));
  }

  std::span<const Part> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Part weight() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

// lambda^T_j = #{ i : lambda_i >= j }
Partition conjugatePartition(const Partition& p);

// Multiset union of parts.
Partition partitionUnion(const Partition& a, const Partition& b);

std::string formatPartition(const Partition& p);

// The non-zero part of `s` equals `p` (within tol of each integer part).
bool matchesUpToZeros(const Partition& p, const Spectrum& s, double tol = kCompareTolerance);

struct FormulaOptions {
  std::optional<VariableOrder> order;  // natural when unset
  bool force = false;                  // skip the shiftedness check
};

// Conjugate of the degree sequence d_k of a shifted simplicial complex.
Partition formulaSpectrumSimplicial(const Multicomplex& complex, Degree k,
                                    const FormulaOptions& options = {});

// Conjugate of the sorted sum of parity vectors over M_k. Equals the non-zero
// eigenvalues of d_k d_k^T (the up-Laplacian L'_{k-1}) for shifted M.
Partition formulaSpectrum(const Multicomplex& m, Degree k, const FormulaOptions& options = {});

// Union over constituents with 2 deg p <= k of conj(d_{k - 2 deg p}(M^(p^2))).
Partition masterSpectrum(const Multicomplex& m, Degree k, const FormulaOptions& options = {});

// Sum of parity vectors over M_k, indexed by variable (not sorted).
std::vector<std::uint64_t> paritySum(const Multicomplex& m, Degree k);

}  // namespace multilap
