#include "multilap/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "multilap/error.hpp"

namespace multilap {

namespace {

void requireSameDim(const Monomial& a, const Monomial& b) {
  if (a.ambientDim() != b.ambientDim()) {
    throw DimensionMismatch("monomials live in " + std::to_string(a.ambientDim()) + " and " +
                            std::to_string(b.ambientDim()) + " variables");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parseUnsigned(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

Exponent toExponent(std::uint64_t v) {
  if (v > std::numeric_limits<Exponent>::max()) {
    throw InvalidArgument("exponent " + std::to_string(v) + " out of range");
  }
  return static_cast<Exponent>(v);
}

}  // namespace

Monomial Monomial::variable(std::size_t ambientDim, std::size_t index) {
  if (index >= ambientDim) throw DimensionMismatch("variable index out of range");
  Monomial m(ambientDim);
  m.exps_[index] = 1;
  return m;
}

bool Monomial::isUnit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::timesVariable(std::size_t i) const {
  if (i >= exps_.size()) throw DimensionMismatch("variable index out of range");
  if (exps_[i] == std::numeric_limits<Exponent>::max()) throw DegreeOverflow("exponent overflow");
  Monomial r = *this;
  ++r.exps_[i];
  return r;
}

Monomial Monomial::dividedByVariable(std::size_t i) const {
  if (i >= exps_.size()) throw DimensionMismatch("variable index out of range");
  if (exps_[i] == 0) throw InvalidArgument("variable does not divide monomial");
  Monomial r = *this;
  --r.exps_[i];
  return r;
}

std::uint64_t totalDegree(const Monomial& m) {
  const auto e = m.exponents();
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool divides(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b);
  for (std::size_t i = 0; i < a.ambientDim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b);
  std::vector<Exponent> e(a.ambientDim());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::uint64_t s = std::uint64_t{a[i]} + b[i];
    if (s > std::numeric_limits<Exponent>::max()) throw DegreeOverflow("exponent overflow");
    e[i] = static_cast<Exponent>(s);
  }
  return Monomial(std::move(e));
}

SquareDecomposition squareDecompose(const Monomial& m) {
  std::vector<Exponent> p(m.ambientDim()), q(m.ambientDim());
  for (std::size_t i = 0; i < m.ambientDim(); ++i) {
    p[i] = m[i] / 2;
    q[i] = m[i] % 2;
  }
  return {Monomial(std::move(p)), Monomial(std::move(q))};
}

Monomial parityVector(const Monomial& m) { return squareDecompose(m).squareFree; }

bool isSquareFree(const Monomial& m) {
  const auto e = m.exponents();
  return std::all_of(e.begin(), e.end(), [](Exponent x) { return x <= 1; });
}

std::strong_ordering compareBasisOrder(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b);
  if (auto c = totalDegree(a) <=> totalDegree(b); c != 0) return c;
  // larger exponent vector first
  for (std::size_t i = 0; i < a.ambientDim(); ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::string formatExponents(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.ambientDim(); ++i) {
    if (i) out += ' ';
    out += std::to_string(m[i]);
  }
  return out;
}

std::string formatSymbolic(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.ambientDim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial parseExponents(std::string_view text) {
  std::vector<Exponent> e;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(" \t\r\n", pos);
    if (start == std::string_view::npos) break;
    auto stop = text.find_first_of(" \t\r\n", start);
    if (stop == std::string_view::npos) stop = text.size();
    e.push_back(toExponent(parseUnsigned(text.substr(start, stop - start), "exponent")));
    pos = stop;
  }
  return Monomial(std::move(e));
}

Monomial parseSymbolic(std::string_view text, std::size_t ambientDim) {
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty monomial");
  std::vector<std::pair<std::size_t, Exponent>> factors;
  std::size_t largest = 0;
  if (text != "1") {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto stop = text.find('*', pos);
      if (stop == std::string_view::npos) stop = text.size();
      auto factor = trim(text.substr(pos, stop - pos));
      if (factor.size() < 2 || factor[0] != 'x') {
        throw InvalidArgument("bad factor '" + std::string(factor) + "'");
      }
      factor.remove_prefix(1);
      Exponent power = 1;
      if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
        power = toExponent(parseUnsigned(trim(factor.substr(caret + 1)), "power"));
        factor = trim(factor.substr(0, caret));
      }
      const auto index = parseUnsigned(factor, "variable index");
      if (index == 0) throw InvalidArgument("variables are numbered from x1");
      factors.emplace_back(static_cast<std::size_t>(index - 1), power);
      largest = std::max<std::size_t>(largest, index);
      pos = stop + 1;
    }
  }
  if (ambientDim == 0) ambientDim = largest;
  if (largest > ambientDim) {
    throw DimensionMismatch("variable x" + std::to_string(largest) + " exceeds " +
                            std::to_string(ambientDim) + " variables");
  }
  std::vector<Exponent> e(ambientDim, 0);
  for (auto [i, p] : factors) {
    const std::uint64_t s = std::uint64_t{e[i]} + p;
    e[i] = toExponent(s);
  }
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ m.ambientDim();
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace multilap
