#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace multilap {

using Exponent = std::uint32_t;

// Total degrees above this are rejected when building a multicomplex.
inline constexpr std::uint64_t kDefaultDegreeCap = 1'000'000;

// Exponent vector x_1^{a_1} ... x_n^{a_n} over a fixed ambient variable count n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t ambientDim) : exps_(ambientDim, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial unit(std::size_t ambientDim) { return Monomial(ambientDim); }
  static Monomial variable(std::size_t ambientDim, std::size_t index);

  std::size_t ambientDim() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool isUnit() const noexcept;

  // x_i * this
  Monomial timesVariable(std::size_t i) const;
  // this / x_i; throws InvalidArgument when x_i does not divide.
  Monomial dividedByVariable(std::size_t i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

std::uint64_t totalDegree(const Monomial& m);

// a | b, componentwise a[i] <= b[i]. Throws DimensionMismatch on length mismatch.
bool divides(const Monomial& a, const Monomial& b);

Monomial multiply(const Monomial& a, const Monomial& b);

struct SquareDecomposition {
  Monomial root;        // p, with m = p^2 q
  Monomial squareFree;  // q
};

SquareDecomposition squareDecompose(const Monomial& m);

// Componentwise reduction mod 2 (the exponent vector of the square-free part).
Monomial parityVector(const Monomial& m);

bool isSquareFree(const Monomial& m);

// Basis order: total degree ascending, then exponent vectors lexicographically
// descending, so x1^3 < x1^2x2 < ... < x3^3 within degree three.
std::strong_ordering compareBasisOrder(const Monomial& a, const Monomial& b);

struct BasisLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compareBasisOrder(a, b) < 0;
  }
};

// "2 1 0"
std::string formatExponents(const Monomial& m);
// "x1^2*x2", "1" for the unit
std::string formatSymbolic(const Monomial& m);

// Parse whitespace separated exponents. Throws InvalidArgument on bad tokens.
Monomial parseExponents(std::string_view text);
// Parse "x1^2*x2" (or "1") into a monomial of the given ambient dimension.
// ambientDim == 0 means "as many variables as the largest index used".
Monomial parseSymbolic(std::string_view text, std::size_t ambientDim = 0);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace multilap

template <>
struct std::hash<multilap::Monomial> : multilap::MonomialHash {};
