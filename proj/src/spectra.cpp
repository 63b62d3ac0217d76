#include "multilap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "multilap/chain.hpp"
#include "multilap/kernels.hpp"

namespace multilap {

Spectrum Spectrum::fromValues(std::vector<double> values, double tolerance) {
  if (!(tolerance > 0)) throw InvalidArgument("spectrum tolerance must be positive");
  for (auto& v : values) {
    if (v < -tolerance) {
      throw InvalidArgument("negative eigenvalue " + std::to_string(v) +
                            " in a positive semidefinite spectrum");
    }
    if (std::abs(v) <= tolerance) v = 0.0;
  }
  std::sort(values.begin(), values.end(), std::greater<>{});
  Spectrum s;
  s.values_ = std::move(values);
  s.tolerance_ = tolerance;
  return s;
}

std::vector<double> Spectrum::nonzero(double threshold) const {
  std::vector<double> out;
  for (double v : values_) {
    if (v > threshold) out.push_back(v);
  }
  return out;
}

std::size_t Spectrum::zeroCount(double threshold) const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [&](double v) { return v <= threshold; }));
}

std::optional<std::vector<std::int64_t>> Spectrum::snapped(double tol) const {
  std::vector<std::int64_t> out;
  out.reserve(values_.size());
  for (double v : values_) {
    const double r = std::round(v);
    if (std::abs(v - r) > tol) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

bool equalUpToZeros(const Spectrum& a, std::span<const double> b, double tol) {
  const auto x = a.nonzero();
  std::vector<double> y;
  for (double v : b) {
    if (v > kZeroThreshold) y.push_back(v);
  }
  std::sort(y.begin(), y.end(), std::greater<>{});
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

bool equalUpToZeros(const Spectrum& a, const Spectrum& b, double tol) {
  return equalUpToZeros(a, b.values(), tol);
}

Spectrum multisetUnion(const Spectrum& a, const Spectrum& b) {
  std::vector<double> v(a.values().begin(), a.values().end());
  v.insert(v.end(), b.values().begin(), b.values().end());
  return Spectrum::fromValues(std::move(v), std::max(a.tolerance(), b.tolerance()));
}

std::optional<Spectrum> multisetDifference(const Spectrum& a, const Spectrum& b, double tol) {
  auto rest = a.nonzero();
  for (double v : b.nonzero()) {
    auto best = rest.end();
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      if (std::abs(*it - v) <= tol && (best == rest.end() || std::abs(*it - v) < std::abs(*best - v))) {
        best = it;
      }
    }
    if (best == rest.end()) return std::nullopt;
    rest.erase(best);
  }
  return Spectrum::fromValues(std::move(rest), a.tolerance());
}

std::string formatSpectrum(const Spectrum& s) {
  std::ostringstream out;
  out.precision(12);
  out << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << s.values()[i];
  }
  out << ')';
  return out.str();
}

const char* toString(LaplacianKind kind) {
  switch (kind) {
    case LaplacianKind::Up:
      return "up";
    case LaplacianKind::Down:
      return "down";
    case LaplacianKind::Total:
      return "total";
  }
  return "?";
}

LaplacianMatrix laplacianUp(const Multicomplex& m, Degree d) {
  if (d < -1) throw InvalidArgument("Laplacian degree must be >= -1");
  const auto b = boundaryMatrix(m, d + 1);
  return {LaplacianKind::Up, d, b.rowBasis, kernels::parallel::columnGram(b.entries.transpose())};
}

LaplacianMatrix laplacianDown(const Multicomplex& m, Degree d) {
  if (d < 0) {
    if (d < -1) throw InvalidArgument("Laplacian degree must be >= -1");
    return {LaplacianKind::Down, d, {}, IntMatrix()};
  }
  const auto b = boundaryMatrix(m, d);
  return {LaplacianKind::Down, d, b.colBasis, kernels::parallel::columnGram(b.entries)};
}

LaplacianMatrix laplacianTotal(const Multicomplex& m, Degree d) {
  auto up = laplacianUp(m, d);
  const auto down = laplacianDown(m, d);
  auto sum = up.matrix.data();
  const auto add = down.matrix.data();
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += add[i];
  up.kind = LaplacianKind::Total;
  return up;
}

LaplacianMatrix laplacian(const Multicomplex& m, Degree d, LaplacianKind kind) {
  switch (kind) {
    case LaplacianKind::Up:
      return laplacianUp(m, d);
    case LaplacianKind::Down:
      return laplacianDown(m, d);
    case LaplacianKind::Total:
      return laplacianTotal(m, d);
  }
  throw InvalidArgument("unknown Laplacian kind");
}

std::vector<double> jacobiEigenvalues(DenseMatrix<double> a, double symmetryTol,
                                      const JacobiOptions& options) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > symmetryTol) {
        throw NotSymmetric("entries (" + std::to_string(i) + "," + std::to_string(j) +
                           ") differ from their transpose");
      }
      a(j, i) = a(i, j);
    }
  }
  auto converged = [&] {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += a(i, i) * a(i, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(off) < options.relativeTolerance * (1.0 + std::sqrt(diag));
  };

  int sweep = 0;
  for (; !converged(); ++sweep) {
    if (sweep == options.maxSweeps) {
      throw ConvergenceError("Jacobi iteration did not converge in " +
                             std::to_string(options.maxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>{});
  return eig;
}

Spectrum symmetricEigenvalues(const DenseMatrix<double>& a, double tol) {
  return Spectrum::fromValues(jacobiEigenvalues(a, tol), tol);
}

Spectrum symmetricEigenvalues(const IntMatrix& a, double tol) {
  DenseMatrix<double> d(a.rows(), a.cols());
  auto out = d.data();
  const auto in = a.data();
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = static_cast<double>(in[i]);
  return symmetricEigenvalues(d, tol);
}

Spectrum spectrum(const Multicomplex& m, Degree d, LaplacianKind kind) {
  return symmetricEigenvalues(laplacian(m, d, kind).matrix);
}

Spectrum spectrumUp(const Multicomplex& m, Degree d) { return spectrum(m, d, LaplacianKind::Up); }
Spectrum spectrumDown(const Multicomplex& m, Degree d) {
  return spectrum(m, d, LaplacianKind::Down);
}
Spectrum spectrumTotal(const Multicomplex& m, Degree d) {
  return spectrum(m, d, LaplacianKind::Total);
}

Spectrum boundarySpectrum(const Multicomplex& m, Degree k) {
  if (k < 0) throw InvalidArgument("chain degree must be non-negative");
  return spectrumUp(m, k - 1);
}

RelationsReport verifySpectrumRelations(const Multicomplex& m, Degree d, double tol) {
  RelationsReport report;
  const auto up = spectrumUp(m, d);
  const auto down = spectrumDown(m, d);
  const auto total = spectrumTotal(m, d);
  const auto upBelow = spectrumUp(m, d - 1);
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back("degree " + std::to_string(d) + ": " + std::move(msg));
  };
  if (!equalUpToZeros(down, upBelow, tol)) {
    fail("s''_d " + formatSpectrum(down) + " != s'_{d-1} " + formatSpectrum(upBelow));
  }
  const auto joined = multisetUnion(up, down);
  if (!equalUpToZeros(total, joined, tol)) {
    fail("s_d " + formatSpectrum(total) + " != s'_d u s''_d " + formatSpectrum(joined));
  }
  const auto diff = multisetDifference(total, down, tol);
  if (!diff) {
    fail("s''_d " + formatSpectrum(down) + " is not contained in s_d " + formatSpectrum(total));
  } else if (!equalUpToZeros(*diff, up, tol)) {
    fail("s_d - s''_d " + formatSpectrum(*diff) + " != s'_d " + formatSpectrum(up));
  }
  return report;
}

Spectrum constituentSpectrumSum(const Multicomplex& m, Degree d, LaplacianKind kind) {
  Spectrum sum;
  for (const auto& c : constituents(m)) {
    const auto shift = static_cast<Degree>(2 * totalDegree(c.root));
    if (shift > d) continue;
    sum = multisetUnion(sum, spectrum(c.complex, d - shift, kind));
  }
  return sum;
}

std::size_t boundaryRank(const Multicomplex& m, Degree d) {
  if (d <= 0 || d > m.maxDegree()) return 0;
  const auto b = boundaryMatrix(m, d);
  // the smaller Gram matrix has the same non-zero eigenvalues
  const auto gram = b.rows() <= b.cols() ? kernels::parallel::columnGram(b.entries.transpose())
                                         : kernels::parallel::columnGram(b.entries);
  const auto s = symmetricEigenvalues(gram);
  return static_cast<std::size_t>(std::count_if(s.values().begin(), s.values().end(),
                                                [](double v) { return std::sqrt(v) > kRankThreshold; }));
}

std::vector<std::size_t> bettiNumbers(const Multicomplex& m) {
  std::vector<std::size_t> beta;
  std::vector<std::size_t> ranks;
  for (Degree d = 0; d <= m.maxDegree() + 1; ++d) ranks.push_back(boundaryRank(m, d));
  for (Degree d = 0; d <= m.maxDegree(); ++d) {
    const auto f = m.layer(d).size();
    beta.push_back(f - ranks[d] - ranks[d + 1]);
  }
  return beta;
}

std::vector<std::size_t> harmonicDimensions(const Multicomplex& m) {
  std::vector<std::size_t> out;
  for (Degree d = 0; d <= m.maxDegree(); ++d) out.push_back(spectrumTotal(m, d).zeroCount());
  return out;
}

std::vector<std::size_t> bettiFromConstituents(const Multicomplex& m) {
  std::vector<std::size_t> beta(static_cast<std::size_t>(m.maxDegree() + 1), 0);
  for (const auto& c : constituents(m)) {
    const auto shift = static_cast<std::size_t>(2 * totalDegree(c.root));
    const auto part = bettiNumbers(c.complex);
    for (std::size_t l = 0; l < part.size(); ++l) {
      if (l + shift < beta.size()) beta[l + shift] += part[l];
    }
  }
  return beta;
}

}  // namespace multilap
