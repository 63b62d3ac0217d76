#include "multilap/random.hpp"

#include <algorithm>
#include <numeric>

namespace multilap {

namespace {

Monomial randomMonomial(Rng& rng, std::size_t n, Degree degree) {
  std::vector<Exponent> e(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (Degree k = 0; k < degree; ++k) ++e[pick(rng)];
  return Monomial(std::move(e));
}

template <typename Build>
Multicomplex drawUntilFits(Rng& rng, const RandomShape& shape, Build&& build) {
  if (shape.maxVariables == 0) return Multicomplex::fromMonomials({}, 0);
  std::uniform_int_distribution<std::size_t> dims(1, shape.maxVariables);
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const auto n = dims(rng);
    auto seed = randomAntichain(rng, n, shape);
    if (shape.fullSupport) {
      for (std::size_t i = 0; i < n; ++i) seed.push_back(Monomial::variable(n, i));
    }
    auto m = build(seed, n);
    if (m.size() <= shape.maxMonomials) return m;
  }
  throw InvalidArgument("random shape admits no instance within the monomial budget");
}

}  // namespace

std::vector<Monomial> randomAntichain(Rng& rng, std::size_t ambientDim, const RandomShape& shape) {
  std::vector<Monomial> out;
  if (ambientDim == 0) return out;
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, shape.maxGenerators));
  std::uniform_int_distribution<Degree> degree(std::min(1, shape.maxDegree), std::max(0, shape.maxDegree));
  const auto want = count(rng);
  for (std::size_t tries = 0; out.size() < want && tries < 50 * want; ++tries) {
    auto m = randomMonomial(rng, ambientDim, degree(rng));
    const bool comparable = std::any_of(out.begin(), out.end(), [&](const Monomial& g) {
      return divides(g, m) || divides(m, g);
    });
    if (!comparable) out.push_back(std::move(m));
  }
  return out;
}

Multicomplex randomDivisorClosed(Rng& rng, const RandomShape& shape) {
  return drawUntilFits(rng, shape, [](const std::vector<Monomial>& seed, std::size_t n) {
    return Multicomplex::divisorClosure(seed, n);
  });
}

Multicomplex randomShifted(Rng& rng, const RandomShape& shape, bool reverse) {
  return drawUntilFits(rng, shape, [&](const std::vector<Monomial>& seed, std::size_t n) {
    return shiftedClosure(seed, n, reverse ? reverseOrder(n) : naturalOrder(n));
  });
}

std::vector<std::size_t> randomPermutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace multilap
