#pragma once

// Random instance generators shared by the property tests, the acceptance
// suite and the benchmarks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "multilap/multicomplex.hpp"

namespace multilap {

using Rng = std::mt19937_64;

struct RandomShape {
  std::size_t maxVariables = 4;
  Degree maxDegree = 4;
  std::size_t maxMonomials = 60;
  std::size_t maxGenerators = 4;
  // Put every variable into the complex (full support).
  bool fullSupport = false;
};

// Up to `maxGenerators` random monomials of degree 1..maxDegree, pairwise
// incomparable under divisibility.
std::vector<Monomial> randomAntichain(Rng& rng, std::size_t ambientDim, const RandomShape& shape);

// Divisor closure of a random antichain; redraws until it fits maxMonomials.
Multicomplex randomDivisorClosed(Rng& rng, const RandomShape& shape);

// Random antichain, divisor closure, then closure under the shifted exchange
// rule for the natural (or reverse) variable order; redraws until it fits maxMonomials.
Multicomplex randomShifted(Rng& rng, const RandomShape& shape, bool reverse = false);

std::vector<std::size_t> randomPermutation(Rng& rng, std::size_t n);

}  // namespace multilap
