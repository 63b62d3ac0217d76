#include <doctest.h>

#include <algorithm>
#include <random>
#include <unordered_set>

#include "multilap/error.hpp"
#include "multilap/monomial.hpp"
#include "support/oracles.hpp"

using namespace multilap;

namespace {

Monomial randomMonomial(std::mt19937_64& rng, std::size_t n, std::uint32_t maxExp) {
  std::uniform_int_distribution<std::uint32_t> e(0, maxExp);
  std::vector<Exponent> v(n);
  for (auto& x : v) x = e(rng);
  return Monomial(v);
}

}  // namespace

TEST_CASE("total degree") {
  CHECK(totalDegree({2, 1, 0}) == 3);
  CHECK(totalDegree({0, 0, 0}) == 0);
  CHECK(totalDegree(Monomial::unit(4)) == 0);
  CHECK(totalDegree(Monomial::variable(3, 2)) == 1);
}

TEST_CASE("divides") {
  CHECK(divides({1, 1, 0}, {2, 1, 0}));
  CHECK_FALSE(divides({0, 0, 1}, {2, 1, 0}));
  CHECK(divides({0, 0, 0}, {5, 0, 2}));
  CHECK_THROWS_AS(divides({1, 0}, {1, 0, 0}), DimensionMismatch);
}

TEST_CASE("divides is a partial order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = randomMonomial(rng, 3, 2), b = randomMonomial(rng, 3, 2),
               c = randomMonomial(rng, 3, 2);
    CHECK(divides(a, a));
    if (divides(a, b) && divides(b, a)) CHECK(a == b);
    if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
  }
}

TEST_CASE("square decomposition") {
  auto d = squareDecompose({3, 2, 1});
  CHECK(d.root == Monomial{1, 1, 0});
  CHECK(d.squareFree == Monomial{1, 0, 1});
  d = squareDecompose({1, 0, 0});
  CHECK(d.root == Monomial{0, 0, 0});
  CHECK(d.squareFree == Monomial{1, 0, 0});
  d = squareDecompose({0, 0, 0});
  CHECK(d.root.isUnit());
  CHECK(d.squareFree.isUnit());
}

TEST_CASE("square decomposition is a bijection") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = randomMonomial(rng, 4, 7);
    const auto [p, q] = squareDecompose(m);
    CHECK(isSquareFree(q));
    CHECK(multiply(multiply(p, p), q) == m);

    const auto p2 = randomMonomial(rng, 4, 3);
    const auto q2 = randomMonomial(rng, 4, 1);
    const auto back = squareDecompose(multiply(multiply(p2, p2), q2));
    CHECK(back.root == p2);
    CHECK(back.squareFree == q2);
  }
}

TEST_CASE("parity vector") {
  CHECK(parityVector({2, 1, 0}) == Monomial{0, 1, 0});
  CHECK(parityVector({0, 0, 0}) == Monomial{0, 0, 0});
  CHECK(parityVector({3, 2, 5}) == Monomial{1, 0, 1});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = randomMonomial(rng, 5, 9);
    CHECK(parityVector(parityVector(m)) == parityVector(m));
    CHECK(parityVector(m) == squareDecompose(m).squareFree);
  }
}

TEST_CASE("basis order within degree three") {
  auto layer = oracle::allMonomials(3, 3);
  layer.erase(std::remove_if(layer.begin(), layer.end(),
                             [](const Monomial& m) { return totalDegree(m) != 3; }),
              layer.end());
  std::sort(layer.begin(), layer.end(), BasisLess{});
  std::vector<std::string> names;
  for (const auto& m : layer) names.push_back(formatSymbolic(m));
  const std::vector<std::string> expected{"x1^3",     "x1^2*x2", "x1^2*x3", "x1*x2^2",
                                          "x1*x2*x3", "x1*x3^2", "x2^3",    "x2^2*x3",
                                          "x2*x3^2",  "x3^3"};
  CHECK(names == expected);
}

TEST_CASE("basis order examples") {
  CHECK(compareBasisOrder({3, 0, 0}, {2, 1, 0}) < 0);
  CHECK(compareBasisOrder({1, 0, 2}, {0, 3, 0}) < 0);
  CHECK(compareBasisOrder({1, 1, 1}, {1, 1, 1}) == 0);
  CHECK(compareBasisOrder({0, 0, 1}, {2, 0, 0}) < 0);  // lower degree first
}

TEST_CASE("basis order is a strict total order") {
  const auto all = oracle::allMonomials(3, 4);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto ab = compareBasisOrder(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (compareBasisOrder(b, a) > 0));
    }
}

TEST_CASE("formatting and parsing round trip") {
  CHECK(formatExponents({2, 1, 0}) == "2 1 0");
  CHECK(formatSymbolic({2, 1, 0}) == "x1^2*x2");
  CHECK(formatSymbolic({0, 0}) == "1");
  CHECK(parseExponents(" 2 1   0 ") == Monomial{2, 1, 0});
  CHECK(parseSymbolic("x1^2*x2", 3) == Monomial{2, 1, 0});
  CHECK(parseSymbolic("x3", 0) == Monomial{0, 0, 1});
  CHECK(parseSymbolic("1", 2) == Monomial{0, 0});
  CHECK_THROWS_AS(parseExponents("1 a 2"), InvalidArgument);
  CHECK_THROWS_AS(parseExponents("1 -2"), InvalidArgument);
  CHECK_THROWS(parseSymbolic("y1^2", 2));

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = randomMonomial(rng, 4, 6);
    CHECK(parseExponents(formatExponents(m)) == m);
    CHECK(parseSymbolic(formatSymbolic(m), 4) == m);
  }
}

TEST_CASE("variable arithmetic") {
  const Monomial m{1, 0, 2};
  CHECK(m.timesVariable(1) == Monomial{1, 1, 2});
  CHECK(m.dividedByVariable(2) == Monomial{1, 0, 1});
  CHECK_THROWS_AS(m.dividedByVariable(1), InvalidArgument);
  CHECK(Monomial::variable(3, 1) == Monomial{0, 1, 0});
}

TEST_CASE("hash agrees with equality") {
  std::unordered_set<Monomial> set;
  for (const auto& m : oracle::allMonomials(3, 3)) set.insert(m);
  for (const auto& m : oracle::allMonomials(3, 3)) set.insert(m);
  CHECK(set.size() == 20);
}
