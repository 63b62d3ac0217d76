#include "multilap/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace multilap::kernels {

namespace {

std::int64_t sparseDot(std::span<const SparseEntry> x, std::span<const SparseEntry> y) {
  std::int64_t s = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (i->index < j->index) {
      ++i;
    } else if (j->index < i->index) {
      ++j;
    } else {
      s += i->value * j->value;
      ++i;
      ++j;
    }
  }
  return s;
}

// Column c of a * b, scattered into `acc` (length a.rows()); returns true if all zero.
bool productColumnIsZero(const SparseIntMatrix& a, const SparseIntMatrix& b, std::size_t c,
                         std::vector<std::int64_t>& acc) {
  std::fill(acc.begin(), acc.end(), 0);
  for (const auto& e : b.column(c)) {
    for (const auto& f : a.column(e.index)) acc[f.index] += f.value * e.value;
  }
  return std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
}

void checkProductShape(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes do not agree");
}

// Omega(m) and the parity of every prime exponent; calls visit(primeIndex) for odd ones.
template <typename Visit>
void forOddPrimes(const FactorTables& t, std::size_t m, int k, Visit&& visit) {
  std::uint32_t buf[64];
  int nodd = 0;
  int omega = 0;
  auto rest = m;
  while (rest > 1) {
    const std::uint32_t p = t.smallestPrimeFactor[rest];
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    omega += e;
    if (omega > k) return;
    if (e % 2 == 1) buf[nodd++] = p;
  }
  if (omega != k) return;
  for (int i = 0; i < nodd; ++i) visit(t.primeIndex[buf[i]]);
}

}  // namespace

namespace serial {

IntMatrix columnGram(const SparseIntMatrix& b) {
  const auto n = b.cols();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto v = sparseDot(b.column(i), b.column(j));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

bool productIsZero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  checkProductShape(a, b);
  std::vector<std::int64_t> acc(a.rows());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    if (!productColumnIsZero(a, b, c, acc)) return false;
  }
  return true;
}

std::vector<std::uint64_t> paritySum(std::span<const Monomial> monomials, std::size_t ambientDim) {
  std::vector<std::uint64_t> sum(ambientDim, 0);
  for (const auto& m : monomials) {
    if (m.ambientDim() != ambientDim) throw DimensionMismatch("monomial has wrong length");
    for (std::size_t i = 0; i < ambientDim; ++i) sum[i] += m[i] % 2;
  }
  return sum;
}

std::vector<std::uint64_t> oddPrimeCounts(const FactorTables& tables, std::size_t n, int k) {
  std::vector<std::uint64_t> counts(tables.primeCount, 0);
  for (std::size_t m = 2; m <= n; ++m) {
    forOddPrimes(tables, m, k, [&](std::uint32_t idx) { ++counts[idx]; });
  }
  return counts;
}

}  // namespace serial

namespace parallel {

IntMatrix columnGram(const SparseIntMatrix& b) {
  const auto n = static_cast<std::int64_t>(b.cols());
  IntMatrix g(b.cols(), b.cols());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i; j < n; ++j) {
      const auto v = sparseDot(b.column(i), b.column(j));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

bool productIsZero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  checkProductShape(a, b);
  const auto cols = static_cast<std::int64_t>(b.cols());
  bool zero = true;
#pragma omp parallel reduction(&& : zero)
  {
    std::vector<std::int64_t> acc(a.rows());
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < cols; ++c) {
      zero = productColumnIsZero(a, b, static_cast<std::size_t>(c), acc) && zero;
    }
  }
  return zero;
}

std::vector<std::uint64_t> paritySum(std::span<const Monomial> monomials, std::size_t ambientDim) {
  for (const auto& m : monomials) {
    if (m.ambientDim() != ambientDim) throw DimensionMismatch("monomial has wrong length");
  }
  std::vector<std::uint64_t> sum(ambientDim, 0);
  if (ambientDim == 0) return sum;
  std::uint64_t* s = sum.data();
  const auto count = static_cast<std::int64_t>(monomials.size());
#pragma omp parallel for reduction(+ : s[:ambientDim])
  for (std::int64_t t = 0; t < count; ++t) {
    const auto& m = monomials[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < ambientDim; ++i) s[i] += m[i] % 2;
  }
  return sum;
}

std::vector<std::uint64_t> oddPrimeCounts(const FactorTables& tables, std::size_t n, int k) {
  std::vector<std::uint64_t> counts(tables.primeCount, 0);
  if (tables.primeCount == 0 || n < 2) return counts;
  std::uint64_t* c = counts.data();
  const std::size_t len = tables.primeCount;
  const auto last = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static, 4096) reduction(+ : c[:len])
  for (std::int64_t m = 2; m <= last; ++m) {
    forOddPrimes(tables, static_cast<std::size_t>(m), k, [&](std::uint32_t idx) { ++c[idx]; });
  }
  return counts;
}

}  // namespace parallel

int maxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace multilap::kernels
