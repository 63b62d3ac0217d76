#include "multilap/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "multilap/formula.hpp"

namespace multilap {

namespace {

constexpr std::uint32_t kNotPrime = std::numeric_limits<std::uint32_t>::max();

void checkBound(std::size_t n) {
  if (n > kMaxDirichletBound) {
    throw InvalidArgument("bound " + std::to_string(n) + " exceeds the configured cap " +
                          std::to_string(kMaxDirichletBound));
  }
}

// Prime factors of m by trial division, ascending, with multiplicity merged.
std::vector<std::pair<std::uint64_t, std::uint32_t>> trialFactor(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d <= m / d; ++d) {
    if (m % d != 0) continue;
    std::uint32_t e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

}  // namespace

PrimeSieve::PrimeSieve(std::size_t bound)
    : bound_(bound), spf_(bound + 1, 0), index_(bound + 1, kNotPrime) {
  checkBound(bound);
  // linear sieve: every composite is crossed out once, by its smallest prime factor
  for (std::size_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      index_[i] = static_cast<std::uint32_t>(primes_.size());
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      if (p > spf_[i] || i * p > bound) break;
      spf_[i * p] = p;
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> PrimeSieve::factorize(std::size_t m) const {
  if (m == 0 || m > bound_) throw InvalidArgument("factorize: argument outside 1..bound");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  while (m > 1) {
    const auto p = spf_[m];
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint32_t> primesUpTo(std::size_t n) {
  const PrimeSieve sieve(n);
  return {sieve.primes().begin(), sieve.primes().end()};
}

Monomial logMap(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("log is defined for positive integers only");
  const auto factors = trialFactor(m);
  if (factors.empty()) return Monomial{};
  const auto largest = factors.back().first;
  checkBound(largest);
  const PrimeSieve sieve(largest);
  std::vector<Exponent> e(sieve.primes().size(), 0);
  for (auto [p, a] : factors) e[sieve.primeIndex(p)] = a;
  return Monomial(std::move(e));
}

Monomial logMap(std::uint64_t m, std::size_t ambientDim) {
  const auto raw = logMap(m);
  if (raw.ambientDim() > ambientDim) {
    throw DimensionMismatch(std::to_string(m) + " has a prime factor beyond variable " +
                            std::to_string(ambientDim));
  }
  std::vector<Exponent> e(raw.exponents().begin(), raw.exponents().end());
  e.resize(ambientDim, 0);
  return Monomial(std::move(e));
}

std::uint64_t expMap(const Monomial& exponents) {
  std::size_t used = exponents.ambientDim();
  while (used > 0 && exponents[used - 1] == 0) --used;
  if (used == 0) return 1;
  // the r-th prime is below r (ln r + ln ln r) for r >= 6
  const double r = static_cast<double>(used);
  const auto estimate =
      used < 6 ? std::size_t{15} : static_cast<std::size_t>(r * (std::log(r) + std::log(std::log(r)))) + 1;
  const PrimeSieve sieve(estimate);
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < used; ++i) {
    const std::uint64_t p = sieve.primes()[i];
    for (Exponent k = 0; k < exponents[i]; ++k) {
      if (__builtin_mul_overflow(value, p, &value)) {
        throw ArithmeticOverflow("expMap overflows 64 bits");
      }
    }
  }
  return value;
}

std::uint64_t bigOmega(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("Omega is defined for positive integers only");
  std::uint64_t total = 0;
  for (auto [p, e] : trialFactor(m)) total += e;
  return total;
}

std::uint64_t squareFreePart(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("sfp is defined for positive integers only");
  std::uint64_t out = 1;
  for (auto [p, e] : trialFactor(m)) {
    if (e % 2 == 1) out *= p;
  }
  return out;
}

DirichletTruncation buildMN(std::size_t n) {
  if (n == 0) throw InvalidArgument("N must be positive");
  const PrimeSieve sieve(n);
  const auto dim = sieve.primes().size();
  std::vector<Monomial> monomials;
  monomials.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Exponent> e(dim, 0);
    for (auto [p, a] : sieve.factorize(m)) e[sieve.primeIndex(p)] = a;
    monomials.emplace_back(std::move(e));
  }
  return {n, {sieve.primes().begin(), sieve.primes().end()},
          Multicomplex::fromMonomials(monomials, dim)};
}

std::vector<std::uint64_t> tVector(const PrimeSieve& sieve, std::size_t n, int k) {
  if (k < 1) throw InvalidArgument("t_k is defined for k >= 1");
  if (n > sieve.bound()) throw InvalidArgument("sieve bound is below N");
  auto t = kernels::parallel::oddPrimeCounts(sieve.tables(), n, k);
  while (!t.empty() && t.back() == 0) t.pop_back();
  return t;
}

std::vector<std::uint64_t> tVector(std::size_t n, int k) {
  return tVector(PrimeSieve(n), n, k);
}

std::vector<std::uint64_t> sVector(const PrimeSieve& sieve, std::size_t n, int k) {
  const auto s = conjugatePartition(Partition::fromUnsorted(tVector(sieve, n, k)));
  return {s.parts().begin(), s.parts().end()};
}

std::vector<std::uint64_t> sVector(std::size_t n, int k) { return sVector(PrimeSieve(n), n, k); }

std::size_t y2Side(std::size_t n) {
  if (n < 2) throw InvalidArgument("Y_2(N) needs N >= 2");
  return std::max<std::size_t>(1, primesUpTo(n / 2).size());
}

DenseMatrix<int> y2Matrix(std::size_t n) {
  const auto side = y2Side(n);
  const auto primes = primesUpTo(n);
  DenseMatrix<int> y(side, side, 0);
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      if (a != b && std::uint64_t{primes[a]} * primes[b] <= n) y(a, b) = 1;
    }
  }
  return y;
}

DenseMatrix<int> u2Matrix(std::size_t n) {
  const auto y = y2Matrix(n);
  const auto side = y.rows();
  DenseMatrix<int> u(side, side, 0);
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      if (b < a) {
        u(a, b) = y(a, b);
      } else if (b + 1 < side) {
        u(a, b) = y(a, b + 1);
      }
    }
  }
  return u;
}

TruncatedFunction TruncatedFunction::indicator(std::size_t m, std::size_t bound) {
  TruncatedFunction f(bound);
  f.set(m, 1.0);
  return f;
}

TruncatedFunction TruncatedFunction::constant(double c, std::size_t bound) {
  TruncatedFunction f(bound);
  std::fill(f.values_.begin() + 1, f.values_.end(), c);
  return f;
}

double TruncatedFunction::operator()(std::size_t m) const {
  if (m == 0) throw InvalidArgument("arithmetical functions start at 1");
  return m < values_.size() ? values_[m] : 0.0;
}

void TruncatedFunction::set(std::size_t m, double value) {
  if (m == 0 || m >= values_.size()) {
    throw InvalidArgument("index " + std::to_string(m) + " outside 1.." + std::to_string(bound()));
  }
  values_[m] = value;
}

TruncatedFunction truncatedConvolve(const TruncatedFunction& f, const TruncatedFunction& g,
                                    std::size_t n) {
  TruncatedFunction h(n);
  for (std::size_t d = 1; d <= n; ++d) {
    const double fd = f(d);
    if (fd == 0.0) continue;
    for (std::size_t e = 1; d * e <= n; ++e) {
      const double ge = g(e);
      if (ge != 0.0) h.values_[d * e] += fd * ge;
    }
  }
  return h;
}

}  // namespace multilap
