#include <doctest.h>

#include <cmath>
#include <numeric>

#include "multilap/error.hpp"
#include "multilap/random.hpp"
#include "multilap/spectra.hpp"
#include "support/oracles.hpp"

using namespace multilap;

namespace {

std::vector<double> values(const Spectrum& s) { return {s.values().begin(), s.values().end()}; }

// Q diag(d) Q^T with Q a Householder reflection, so the spectrum is known.
DenseMatrix<double> withSpectrum(Rng& rng, const std::vector<double>& d) {
  const auto n = d.size();
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  double norm = 0;
  for (auto& x : v) {
    x = g(rng);
    norm += x * x;
  }
  DenseMatrix<double> q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = (i == j ? 1.0 : 0.0) - 2 * v[i] * v[j] / norm;
  DenseMatrix<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * d[k] * q(j, k);
      a(i, j) = s;
    }
  // exact symmetry
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
  return a;
}

std::vector<Degree> degrees(const Multicomplex& m) {
  std::vector<Degree> out;
  for (Degree d = 0; d <= m.maxDegree() + 1; ++d) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("spectrum value type") {
  const auto s = Spectrum::fromValues({1.0, 3.0, -1e-10, 2.0});
  CHECK(values(s) == std::vector<double>{3.0, 2.0, 1.0, 0.0});
  CHECK(s.zeroCount() == 1);
  CHECK(s.nonzero() == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(s.snapped().value() == std::vector<std::int64_t>{3, 2, 1, 0});
  CHECK_FALSE(Spectrum::fromValues({2.5}).snapped().has_value());
  CHECK_THROWS_AS(Spectrum::fromValues({-0.5}), InvalidArgument);

  const auto a = Spectrum::fromValues({3, 3, 0, 0});
  const auto b = Spectrum::fromValues({3, 3});
  CHECK(equalUpToZeros(a, b));
  CHECK_FALSE(equalUpToZeros(a, Spectrum::fromValues({3, 2})));
  CHECK(values(multisetUnion(b, Spectrum::fromValues({1}))) == std::vector<double>{3, 3, 1});
  const auto diff = multisetDifference(Spectrum::fromValues({3, 2, 1}), Spectrum::fromValues({2}));
  CHECK(equalUpToZeros(diff.value(), Spectrum::fromValues({3, 1})));
  CHECK_FALSE(multisetDifference(b, Spectrum::fromValues({5})).has_value());
}

TEST_CASE("jacobi small examples") {
  DenseMatrix<double> d(2, 2);
  d(0, 0) = 3;
  d(1, 1) = 1;
  CHECK(jacobiEigenvalues(d) == std::vector<double>{3, 1});

  DenseMatrix<double> r(3, 3);
  const int sgn[3] = {1, -1, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = sgn[i] * sgn[j];
  const auto ev = jacobiEigenvalues(r);
  CHECK(ev[0] == doctest::Approx(3).epsilon(1e-12));
  CHECK(std::abs(ev[1]) < 1e-12);
  CHECK(std::abs(ev[2]) < 1e-12);

  DenseMatrix<double> empty;
  CHECK(jacobiEigenvalues(empty).empty());

  DenseMatrix<double> skew(2, 2);
  skew(0, 1) = 1;
  CHECK_THROWS_AS(jacobiEigenvalues(skew), NotSymmetric);

  DenseMatrix<double> rect(2, 3);
  CHECK_THROWS_AS(jacobiEigenvalues(rect), DimensionMismatch);
}

TEST_CASE("jacobi recovers planted spectra") {
  Rng rng(41);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 25;
    std::vector<double> d(n);
    for (auto& x : d) x = u(rng);
    if (n > 3) d[1] = d[0];  // a repeated eigenvalue
    auto ev = jacobiEigenvalues(withSpectrum(rng, d));
    std::sort(d.rbegin(), d.rend());
    REQUIRE(ev.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ev[i] - d[i]) < 1e-9);
  }
}

TEST_CASE("jacobi agrees with eigen and the trace") {
  Rng rng(42);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 30;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
    DenseMatrix<double> f(n, n);
    double trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += static_cast<double>(a(i, i));
      for (std::size_t j = 0; j < n; ++j) f(i, j) = static_cast<double>(a(i, j));
    }
    const auto ours = jacobiEigenvalues(f);
    const auto ref = oracle::eigenvalues(a);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-8);
    CHECK(std::abs(std::accumulate(ours.begin(), ours.end(), 0.0) - trace) < 1e-8);
  }
}

TEST_CASE("laplacian examples") {
  const auto full = oracle::fullMulticomplex(3, 3);
  const auto up2 = laplacianUp(full, 2);
  CHECK(up2.matrix.rows() == 6);
  CHECK(values(symmetricEigenvalues(up2.matrix)).size() == 6);
  CHECK(spectrumUp(full, 2).snapped().value() == std::vector<std::int64_t>{3, 3, 3, 3, 0, 0});
  CHECK(laplacianUp(full, 3).matrix == IntMatrix(10, 10));

  const std::vector<Monomial> sq{{2}};
  const auto line = Multicomplex::divisorClosure(sq, 1);
  CHECK(laplacianUp(line, 0).matrix == IntMatrix(1, 1, 1));

  CHECK(laplacianDown(full, 0).matrix == IntMatrix(1, 1));
  const std::vector<Monomial> x{{1}};
  CHECK(laplacianDown(Multicomplex::divisorClosure(x, 1), 1).matrix == IntMatrix(1, 1, 1));
  CHECK(equalUpToZeros(spectrumDown(full, 3), spectrumUp(full, 2)));

  CHECK(laplacianTotal(full, 0).matrix == laplacianUp(full, 0).matrix);
  CHECK(laplacianTotal(full, 3).matrix == laplacianDown(full, 3).matrix);

  CHECK(spectrumUp(oracle::loadData("shifted7.txt"), 2).nonzero() ==
        std::vector<double>{3, 3, 3});
  const auto right = spectrumUp(oracle::loadData("shifted6.txt"), 2).nonzero();
  REQUIRE(right.size() == 3);
  CHECK(right[0] == doctest::Approx(3));
  CHECK(right[2] == doctest::Approx(2));
}

TEST_CASE("laplacians match the oracle matrices and eigen") {
  Rng rng(43);
  RandomShape shape;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = randomDivisorClosed(rng, shape);
    for (Degree d : degrees(m)) {
      const auto up = laplacianUp(m, d).matrix;
      const auto down = laplacianDown(m, d).matrix;
      CHECK(up == oracle::upLaplacian(m, d));
      CHECK(down == oracle::downLaplacian(m, d));
      CHECK(laplacianTotal(m, d).matrix == oracle::add(up, down));
      const auto total = spectrumTotal(m, d);
      CHECK(oracle::sameUpToZeros(values(total), oracle::eigenvalues(oracle::add(up, down))));
      CHECK(oracle::sameUpToZeros(values(spectrumUp(m, d)), oracle::eigenvalues(up)));
      for (double v : total.values()) CHECK(v >= 0.0);
    }
  }
}

TEST_CASE("spectrum relations") {
  CHECK(verifySpectrumRelations(Multicomplex(), 0).ok);
  for (const auto& m : {oracle::fullMulticomplex(3, 3), oracle::loadData("shifted7.txt"),
                        oracle::loadData("shifted6.txt")})
    for (Degree d : degrees(m)) CHECK(verifySpectrumRelations(m, d).ok);

  Rng rng(44);
  RandomShape shape;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = randomDivisorClosed(rng, shape);
    for (Degree d : degrees(m)) {
      const auto report = verifySpectrumRelations(m, d);
      CHECK(report.ok);
      CHECK(report.failures.empty());
    }
  }
}

TEST_CASE("constituent spectra split") {
  const auto full = oracle::fullMulticomplex(3, 3);
  CHECK(equalUpToZeros(constituentSpectrumSum(full, 2, LaplacianKind::Up),
                       Spectrum::fromValues({3, 3, 3, 3})));

  Rng rng(45);
  RandomShape shape;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = randomDivisorClosed(rng, shape);
    const auto parts = oracle::constituents(m);
    for (Degree d : degrees(m)) {
      for (auto kind : {LaplacianKind::Up, LaplacianKind::Down, LaplacianKind::Total}) {
        // oracle side: eigen on each constituent's own oracle Laplacian
        std::vector<double> expected;
        for (const auto& p : parts) {
          const auto shift = static_cast<Degree>(2 * totalDegree(p.root));
          if (shift > d) continue;
          const auto up = oracle::upLaplacian(p.complex, d - shift);
          const auto down = oracle::downLaplacian(p.complex, d - shift);
          const auto mat = kind == LaplacianKind::Up     ? up
                           : kind == LaplacianKind::Down ? down
                                                         : oracle::add(up, down);
          for (double v : oracle::eigenvalues(mat)) expected.push_back(v);
        }
        CHECK(oracle::sameUpToZeros(values(constituentSpectrumSum(m, d, kind)), expected));
        CHECK(oracle::sameUpToZeros(values(spectrum(m, d, kind)), expected));
      }
    }
  }
}

TEST_CASE("betti numbers") {
  CHECK(bettiNumbers(oracle::fullMulticomplex(3, 3)) == std::vector<std::size_t>{0, 0, 0, 6});
  const std::vector<Monomial> one{{0}};
  CHECK(bettiNumbers(Multicomplex::fromMonomials(one, 1)) == std::vector<std::size_t>{1});
  const std::vector<Monomial> x{{1}};
  CHECK(bettiNumbers(Multicomplex::divisorClosure(x, 1)) == std::vector<std::size_t>{0, 0});
  CHECK(bettiNumbers(Multicomplex()).empty());

  Rng rng(46);
  RandomShape shape;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = randomDivisorClosed(rng, shape);
    const auto betti = bettiNumbers(m);
    CHECK(betti == harmonicDimensions(m));
    CHECK(betti == bettiFromConstituents(m));
    REQUIRE(betti.size() == static_cast<std::size_t>(m.maxDegree() + 1));
    for (Degree l = 0; l <= m.maxDegree(); ++l) {
      const auto f = layer(m, l).size();
      const auto below = l >= 1 ? oracle::rank(oracle::boundary(
                                      {layer(m, l - 1).begin(), layer(m, l - 1).end()},
                                      {layer(m, l).begin(), layer(m, l).end()}))
                                : 0;
      const auto above = oracle::rank(
          oracle::boundary({layer(m, l).begin(), layer(m, l).end()},
                           {layer(m, l + 1).begin(), layer(m, l + 1).end()}));
      CHECK(boundaryRank(m, l + 1) == above);
      CHECK(betti[l] == f - below - above);
    }
  }
}

TEST_CASE("boundary spectrum index pinning") {
  const auto full = oracle::fullMulticomplex(3, 3);
  CHECK(equalUpToZeros(boundarySpectrum(full, 3), Spectrum::fromValues({3, 3, 3, 3})));
  CHECK(boundarySpectrum(full, 3).size() == 6);
}
