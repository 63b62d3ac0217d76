#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference used by the tests as ground truth, and an OpenMP version that the
// library calls. Both must return identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "multilap/matrix.hpp"
#include "multilap/monomial.hpp"

namespace multilap::kernels {

// Smallest-prime-factor table: spf[m] for 0 <= m <= N (spf[0] = spf[1] = 0),
// plus primeIndex[p] = position of prime p in the ascending prime list.
struct FactorTables {
  std::span<const std::uint32_t> smallestPrimeFactor;
  std::span<const std::uint32_t> primeIndex;
  std::size_t primeCount = 0;
};

namespace serial {

// B^T B, i.e. all pairwise column dot products.
IntMatrix columnGram(const SparseIntMatrix& b);

// True iff a * b is the zero matrix (a.cols() must equal b.rows()).
bool productIsZero(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Componentwise sum of parity vectors over a list of monomials.
std::vector<std::uint64_t> paritySum(std::span<const Monomial> monomials, std::size_t ambientDim);

// For 2 <= m <= n with Omega(m) == k: count, per prime, how often it occurs to
// an odd power in m.
std::vector<std::uint64_t> oddPrimeCounts(const FactorTables& tables, std::size_t n, int k);

}  // namespace serial

namespace parallel {

IntMatrix columnGram(const SparseIntMatrix& b);
bool productIsZero(const SparseIntMatrix& a, const SparseIntMatrix& b);
std::vector<std::uint64_t> paritySum(std::span<const Monomial> monomials, std::size_t ambientDim);
std::vector<std::uint64_t> oddPrimeCounts(const FactorTables& tables, std::size_t n, int k);

}  // namespace parallel

// Number of OpenMP threads available (1 without OpenMP).
int maxThreads();

}  // namespace multilap::kernels
