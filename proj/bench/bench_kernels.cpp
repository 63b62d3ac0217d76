// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "multilap/chain.hpp"
#include "multilap/dirichlet.hpp"
#include "multilap/kernels.hpp"

namespace {

using namespace multilap;

// All monomials of degree <= maxDeg in n variables.
Multicomplex fullMulticomplex(std::size_t n, std::uint32_t maxDeg) {
  std::vector<Monomial> top;
  std::vector<Exponent> e(n, 0);
  // enumerate compositions of maxDeg into n parts
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      top.emplace_back(e);
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, maxDeg);
  return Multicomplex::divisorClosure(top, n);
}

const BoundaryMatrix& sharedBoundary() {
  static const auto m = fullMulticomplex(6, 6);
  static const auto b = boundaryMatrix(m, 6);
  return b;
}

const BoundaryMatrix& sharedLowerBoundary() {
  static const auto m = fullMulticomplex(6, 6);
  static const auto b = boundaryMatrix(m, 5);
  return b;
}

const PrimeSieve& sharedSieve() {
  static const PrimeSieve sieve(2'000'000);
  return sieve;
}

template <auto Kernel>
void BM_ColumnGram(benchmark::State& state) {
  const auto t = sharedBoundary().entries.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(t));
}

template <auto Kernel>
void BM_ProductIsZero(benchmark::State& state) {
  const auto& lower = sharedLowerBoundary().entries;
  const auto& upper = sharedBoundary().entries;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(lower, upper));
}

template <auto Kernel>
void BM_ParitySum(benchmark::State& state) {
  const auto& cols = sharedBoundary().colBasis;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cols, 6));
}

template <auto Kernel>
void BM_OddPrimeCounts(benchmark::State& state) {
  const auto& sieve = sharedSieve();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(sieve.tables(), sieve.bound(), 2));
}

BENCHMARK(BM_ColumnGram<kernels::serial::columnGram>)->Name("columnGram/serial");
BENCHMARK(BM_ColumnGram<kernels::parallel::columnGram>)->Name("columnGram/omp")->UseRealTime();
BENCHMARK(BM_ProductIsZero<kernels::serial::productIsZero>)->Name("productIsZero/serial");
BENCHMARK(BM_ProductIsZero<kernels::parallel::productIsZero>)->Name("productIsZero/omp")->UseRealTime();
BENCHMARK(BM_ParitySum<kernels::serial::paritySum>)->Name("paritySum/serial");
BENCHMARK(BM_ParitySum<kernels::parallel::paritySum>)->Name("paritySum/omp")->UseRealTime();
BENCHMARK(BM_OddPrimeCounts<kernels::serial::oddPrimeCounts>)->Name("oddPrimeCounts/serial");
BENCHMARK(BM_OddPrimeCounts<kernels::parallel::oddPrimeCounts>)->Name("oddPrimeCounts/omp")->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
