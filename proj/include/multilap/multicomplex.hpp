#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "multilap/error.hpp"
#include "multilap/monomial.hpp"

namespace multilap {

using Degree = int;

// Raised when a monomial set is not closed under taking divisors. The witness
// is an immediate divisor `missing` of a member `member`.
class NotDivisorClosed : public Error {
 public:
  NotDivisorClosed(Monomial missing, Monomial member);

  const Monomial& missing() const noexcept { return missing_; }
  const Monomial& member() const noexcept { return member_; }

 private:
  Monomial missing_;
  Monomial member_;
};

// Variables listed from smallest to largest. The natural order is 0,1,...,n-1.
using VariableOrder = std::vector<std::size_t>;

VariableOrder naturalOrder(std::size_t n);
VariableOrder reverseOrder(std::size_t n);

// A finite divisor-closed set of monomials over a fixed number of variables,
// stored as graded layers in basis order. Immutable once built.
class Multicomplex {
 public:
  // The empty multicomplex on zero variables.
  Multicomplex() = default;

  // Validates divisor closure; duplicates are dropped.
  static Multicomplex fromMonomials(std::span<const Monomial> monomials, std::size_t ambientDim,
                                    std::uint64_t degreeCap = kDefaultDegreeCap);
  static Multicomplex divisorClosure(std::span<const Monomial> monomials, std::size_t ambientDim,
                                     std::uint64_t degreeCap = kDefaultDegreeCap);

  std::size_t ambientDim() const noexcept { return ambientDim_; }
  std::size_t size() const noexcept { return index_.size(); }
  bool empty() const noexcept { return index_.empty(); }
  // -1 for the empty multicomplex.
  Degree maxDegree() const noexcept { return static_cast<Degree>(layers_.size()) - 1; }

  // M_d in basis order; empty outside 0..maxDegree.
  std::span<const Monomial> layer(Degree d) const;

  bool contains(const Monomial& m) const { return index_.contains(m); }
  // Position of m inside its layer.
  std::optional<std::size_t> indexInLayer(const Monomial& m) const;

  // All monomials, degree by degree.
  std::vector<Monomial> monomials() const;

  bool isSimplicial() const;

 private:
  Multicomplex(std::vector<std::vector<Monomial>> layers, std::size_t ambientDim);

  std::size_t ambientDim_ = 0;
  std::vector<std::vector<Monomial>> layers_;
  std::unordered_map<Monomial, std::size_t> index_;
};

std::span<const Monomial> layer(const Multicomplex& m, Degree d);

// f_i = #M_i
std::vector<std::size_t> fVector(const Multicomplex& m);

// x_j m in M, x_i before x_j in `order`, x_i in M  =>  x_i m in M.
bool isShifted(const Multicomplex& m, const VariableOrder& order);
bool isShifted(const Multicomplex& m);

// The simplicial-complex version: only exchanges x_j -> x_i with x_i not
// dividing m are required (x_i m would not be square-free otherwise).
bool isShiftedSimplicial(const Multicomplex& m, const VariableOrder& order);

// Shifted in the sense the spectrum formulas need: the multicomplex rule, or
// the simplicial rule for square-free input.
bool admitsShiftedFormula(const Multicomplex& m, const VariableOrder& order);

struct Constituent {
  Monomial root;       // p, the key p^2 in M
  Multicomplex complex;  // M^(p^2) = { q square-free : p^2 q in M }
};

// Keys in basis order of p.
using ConstituentDecomposition = std::vector<Constituent>;

ConstituentDecomposition constituents(const Multicomplex& m);

// d_j = #{ monomials of N_k divisible by x_j }
std::vector<std::size_t> degreeSequence(const Multicomplex& n, Degree k);

// Minimal monomials (under divisibility) outside M of degree <= throughDegree.
// Requires throughDegree >= maxDegree + 1.
std::vector<Monomial> complementIdealGenerators(const Multicomplex& m, Degree throughDegree);
std::vector<Monomial> complementIdealGenerators(const Multicomplex& m);

// g in gens, x_i | g, x_j before x_i in `order`  =>  (x_j / x_i) g lies in the ideal.
bool isStronglyStable(std::span<const Monomial> gens, const VariableOrder& order);
bool isStronglyStable(std::span<const Monomial> gens);

// Variable i becomes variable perm[i].
Monomial relabel(const Monomial& m, std::span<const std::size_t> perm);
Multicomplex relabel(const Multicomplex& m, std::span<const std::size_t> perm);
VariableOrder relabel(const VariableOrder& order, std::span<const std::size_t> perm);

// Smallest superset of `seed` closed under divisors and under the shifted
// exchange rule for `order`.
Multicomplex shiftedClosure(std::span<const Monomial> seed, std::size_t ambientDim,
                            const VariableOrder& order);

enum class InputSyntax { Exponents, Symbolic };

struct ParsedMonomials {
  std::size_t ambientDim = 0;
  std::vector<Monomial> monomials;
};

// "vars <n>" (optional first line), one monomial per line, '#' comments.
ParsedMonomials parseMonomialList(std::istream& in, InputSyntax syntax);
Multicomplex readMulticomplex(std::istream& in, InputSyntax syntax = InputSyntax::Exponents);
void writeMulticomplex(std::ostream& out, const Multicomplex& m);

}  // namespace multilap
