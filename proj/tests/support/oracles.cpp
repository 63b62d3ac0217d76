#include "support/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::uint64_t degreeOf(const Monomial& m) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < m.ambientDim(); ++i) s += m[i];
  return s;
}

std::size_t rankModulo(const IntMatrix& a, std::uint64_t p) {
  const auto rows = a.rows(), cols = a.cols();
  std::vector<std::uint64_t> w(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = a(r, c) % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      w[r * cols + c] = static_cast<std::uint64_t>(v);
    }
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  auto inverse = [&](std::uint64_t x) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = mulmod(result, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && w[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(w[pivot * cols + k], w[rank * cols + k]);
    const auto inv = inverse(w[rank * cols + c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || w[r * cols + c] == 0) continue;
      const auto f = mulmod(w[r * cols + c], inv);
      for (std::size_t k = 0; k < cols; ++k)
        w[r * cols + k] = (w[r * cols + k] + p - mulmod(f, w[rank * cols + k])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Monomial> allMonomials(std::size_t n, std::uint32_t maxDeg) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  // odometer over the box [0, maxDeg]^n
  while (true) {
    std::uint64_t s = 0;
    for (auto x : e) s += x;
    if (s <= maxDeg) out.emplace_back(std::vector<multilap::Exponent>(e.begin(), e.end()));
    std::size_t i = 0;
    while (i < n && e[i] == maxDeg) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

Multicomplex fullMulticomplex(std::size_t n, std::uint32_t maxDeg) {
  const auto all = allMonomials(n, maxDeg);
  return Multicomplex::fromMonomials(all, n);
}

Multicomplex loadData(const std::string& name) {
  std::ifstream in(std::string(MULTILAP_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  return multilap::readMulticomplex(in);
}

std::vector<Monomial> degreePart(const Multicomplex& m, int d) {
  std::vector<Monomial> out;
  for (const auto& x : m.monomials())
    if (degreeOf(x) == static_cast<std::uint64_t>(d)) out.push_back(x);
  return out;
}

IntMatrix boundary(const std::vector<Monomial>& rows, const std::vector<Monomial>& cols) {
  IntMatrix b(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& lo = rows[r];
      const auto& hi = cols[c];
      // hi must equal lo * x_j for exactly one j
      std::size_t diffAt = hi.ambientDim(), diffs = 0;
      bool ok = true;
      for (std::size_t i = 0; i < hi.ambientDim(); ++i) {
        if (hi[i] == lo[i]) continue;
        if (hi[i] != lo[i] + 1) ok = false;
        diffAt = i;
        ++diffs;
      }
      if (!ok || diffs != 1 || hi[diffAt] % 2 == 0) continue;
      std::uint64_t before = 0;
      for (std::size_t i = 0; i < diffAt; ++i) before += hi[i];
      b(r, c) = before % 2 == 0 ? 1 : -1;
    }
  }
  return b;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix upLaplacian(const Multicomplex& m, int d) {
  const auto here = degreePart(m, d);
  const auto above = d + 1 >= 0 ? degreePart(m, d + 1) : std::vector<Monomial>{};
  const auto b = boundary(here, above);
  return multiply(b, transpose(b));
}

IntMatrix downLaplacian(const Multicomplex& m, int d) {
  const auto here = degreePart(m, d);
  const auto below = d >= 1 ? degreePart(m, d - 1) : std::vector<Monomial>{};
  const auto b = boundary(below, here);
  return multiply(transpose(b), b);
}

std::vector<double> eigenvalues(const IntMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  if (n == 0) return {};
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = static_cast<double>(a(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<double> nonzero(const std::vector<double>& values, double tol) {
  std::vector<double> out;
  for (double v : values)
    if (std::abs(v) > tol) out.push_back(v);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool sameUpToZeros(std::vector<double> a, std::vector<double> b, double tol) {
  a = nonzero(a, tol);
  b = nonzero(b, tol);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

bool allNearIntegers(const std::vector<double>& values, double tol) {
  return std::all_of(values.begin(), values.end(),
                     [tol](double v) { return std::abs(v - std::round(v)) <= tol; });
}

std::size_t rank(const IntMatrix& a) {
  return std::max(rankModulo(a, 2305843009213693951ULL), rankModulo(a, 1000000007ULL));
}

std::vector<std::uint64_t> conjugate(std::vector<std::uint64_t> parts) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 1;; ++j) {
    std::uint64_t count = 0;
    for (auto p : parts) count += p >= j ? 1 : 0;
    if (count == 0) break;
    out.push_back(count);
  }
  return out;
}

std::vector<std::uint64_t> paritySum(const Multicomplex& m, int k) {
  std::vector<std::uint64_t> s(m.ambientDim(), 0);
  for (const auto& x : degreePart(m, k))
    for (std::size_t i = 0; i < x.ambientDim(); ++i) s[i] += x[i] & 1U;
  return s;
}

std::vector<double> asDoubles(const std::vector<std::uint64_t>& v) {
  return {v.begin(), v.end()};
}

bool shifted(const Multicomplex& m, const std::vector<std::size_t>& order) {
  const auto n = m.ambientDim();
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  const auto all = m.monomials();
  std::set<std::vector<multilap::Exponent>> members;
  for (const auto& x : all) members.insert({x.exponents().begin(), x.exponents().end()});
  auto has = [&](std::vector<multilap::Exponent> e) { return members.contains(e); };
  for (const auto& x : all) {
    std::vector<multilap::Exponent> e(x.exponents().begin(), x.exponents().end());
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      // x = x_j * q
      auto q = e;
      --q[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] >= rank[j]) continue;
        std::vector<multilap::Exponent> xi(n, 0);
        xi[i] = 1;
        if (!has(xi)) continue;
        auto target = q;
        ++target[i];
        if (!has(target)) return false;
      }
    }
  }
  return true;
}

bool stronglyStable(const std::vector<Monomial>& gens, const std::vector<std::size_t>& order) {
  if (gens.empty()) return true;
  const auto n = gens.front().ambientDim();
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  std::uint64_t top = 0;
  for (const auto& g : gens) top = std::max(top, degreeOf(g));
  auto inIdeal = [&](const std::vector<multilap::Exponent>& e) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > e[i]) return false;
      return true;
    });
  };
  for (const auto& x : allMonomials(n, static_cast<std::uint32_t>(top + 1))) {
    std::vector<multilap::Exponent> e(x.exponents().begin(), x.exponents().end());
    if (!inIdeal(e)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rank[j] >= rank[i]) continue;
        auto moved = e;
        --moved[i];
        ++moved[j];
        if (!inIdeal(moved)) return false;
      }
    }
  }
  return true;
}

std::vector<ConstituentOracle> constituents(const Multicomplex& m) {
  const auto n = m.ambientDim();
  std::map<std::vector<multilap::Exponent>, std::vector<Monomial>> groups;
  for (const auto& x : m.monomials()) {
    std::vector<multilap::Exponent> root(n), rest(n);
    for (std::size_t i = 0; i < n; ++i) {
      root[i] = x[i] / 2;
      rest[i] = x[i] % 2;
    }
    groups[root].emplace_back(std::move(rest));
  }
  std::vector<ConstituentOracle> out;
  for (auto& [root, members] : groups)
    out.push_back({Monomial(root), Multicomplex::fromMonomials(members, n)});
  return out;
}

std::vector<std::uint64_t> primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 2; c <= n; ++c) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= c && prime; ++d) prime = c % d != 0;
    if (prime) out.push_back(c);
  }
  return out;
}

std::vector<std::uint32_t> factorExponents(std::uint64_t m, const std::vector<std::uint64_t>& ps) {
  std::vector<std::uint32_t> e(ps.size(), 0);
  for (std::size_t i = 0; i < ps.size(); ++i)
    while (m % ps[i] == 0) {
      m /= ps[i];
      ++e[i];
    }
  if (m != 1) throw std::invalid_argument("prime list too short");
  return e;
}

std::vector<std::uint64_t> tVector(std::uint64_t n, int k) {
  const auto ps = primes(n);
  std::vector<std::uint64_t> t(ps.size(), 0);
  for (std::uint64_t m = 2; m <= n; ++m) {
    const auto e = factorExponents(m, ps);
    std::uint64_t omega = 0;
    for (auto x : e) omega += x;
    if (omega != static_cast<std::uint64_t>(k)) continue;
    for (std::size_t i = 0; i < e.size(); ++i) t[i] += e[i] % 2;
  }
  while (!t.empty() && t.back() == 0) t.pop_back();
  return t;
}

}  // namespace oracle
