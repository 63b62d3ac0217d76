#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "multilap/kernels.hpp"
#include "multilap/matrix.hpp"
#include "multilap/multicomplex.hpp"

namespace multilap {

inline constexpr std::size_t kMaxDirichletBound = 100'000'000;

// Smallest-prime-factor sieve on 0..N.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::size_t bound);

  std::size_t bound() const noexcept { return bound_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::uint32_t smallestPrimeFactor(std::size_t m) const { return spf_.at(m); }
  // Index of p in primes(); p must be a prime <= bound.
  std::size_t primeIndex(std::size_t p) const { return index_.at(p); }

  // (prime, exponent) pairs of m, ascending primes. m in 1..bound.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::size_t m) const;

  kernels::FactorTables tables() const noexcept {
    return {spf_, index_, primes_.size()};
  }

 private:
  std::size_t bound_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> index_;
  std::vector<std::uint32_t> primes_;
};

std::vector<std::uint32_t> primesUpTo(std::size_t n);

// Exponents of the prime factorisation of m over 2, 3, 5, ...; length equals
// the index of the largest prime factor (empty for m = 1).
Monomial logMap(std::uint64_t m);
// Same, padded with zeros to `ambientDim` variables.
Monomial logMap(std::uint64_t m, std::size_t ambientDim);
// p_1^{a_1} p_2^{a_2} ...; throws ArithmeticOverflow past 2^64 - 1.
std::uint64_t expMap(const Monomial& exponents);

// Omega(m): prime factors counted with multiplicity.
std::uint64_t bigOmega(std::uint64_t m);
// Square-free part: product of the primes dividing m to an odd power.
std::uint64_t squareFreePart(std::uint64_t m);

// The multicomplex of exponent vectors of 1..N over the primes <= N.
struct DirichletTruncation {
  std::size_t bound = 0;
  std::vector<std::uint32_t> primes;
  Multicomplex multicomplex;
};

DirichletTruncation buildMN(std::size_t n);

// t_k^i(N) = #{ 1 < m <= N : Omega(m) = k, p_i | sfp(m) }, trimmed of trailing zeros.
std::vector<std::uint64_t> tVector(std::size_t n, int k);
// Same, reusing a sieve whose bound is at least n.
std::vector<std::uint64_t> tVector(const PrimeSieve& sieve, std::size_t n, int k);
// Conjugate partition of the sorted t-vector.
std::vector<std::uint64_t> sVector(std::size_t n, int k);
std::vector<std::uint64_t> sVector(const PrimeSieve& sieve, std::size_t n, int k);

// Side length of Y_2(N)/U_2(N): max{ a : p_a * 2 <= N }, at least 1.
std::size_t y2Side(std::size_t n);
// y_ab = 1 iff a != b and p_a p_b <= N.
DenseMatrix<int> y2Matrix(std::size_t n);
// u_ab = y_ab for b < a, y_{a,b+1} for b >= a (y outside the table is 0).
DenseMatrix<int> u2Matrix(std::size_t n);

// An arithmetical function restricted to 1..N.
class TruncatedFunction {
 public:
  explicit TruncatedFunction(std::size_t bound) : values_(bound + 1, 0.0) {}

  static TruncatedFunction indicator(std::size_t m, std::size_t bound);
  static TruncatedFunction constant(double c, std::size_t bound);

  std::size_t bound() const noexcept { return values_.size() - 1; }
  // f(m) for 1 <= m <= bound, 0 above.
  double operator()(std::size_t m) const;
  void set(std::size_t m, double value);

  friend bool operator==(const TruncatedFunction&, const TruncatedFunction&) = default;
  friend TruncatedFunction truncatedConvolve(const TruncatedFunction& f,
                                             const TruncatedFunction& g, std::size_t n);

 private:
  std::vector<double> values_;  // index 0 unused
};

// (f *_N g)(m) = sum_{d | m} f(d) g(m/d) for m <= N, zero above.
TruncatedFunction truncatedConvolve(const TruncatedFunction& f, const TruncatedFunction& g,
                                    std::size_t n);

}  // namespace multilap
