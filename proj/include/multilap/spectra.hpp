#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multilap/matrix.hpp"
#include "multilap/multicomplex.hpp"

namespace multilap {

// Eigenvalues at or below this are treated as zero parts.
inline constexpr double kZeroThreshold = 1e-8;
// A spectrum is reported in integer form only if every value is this close to an integer.
inline constexpr double kIntegerSnapTolerance = 1e-6;
// Singular values above this count towards the rank.
inline constexpr double kRankThreshold = 1e-6;
// Default tolerance when comparing the non-zero parts of two spectra.
inline constexpr double kCompareTolerance = 1e-6;

// Multiset of non-negative reals kept weakly decreasing.
class Spectrum {
 public:
  Spectrum() = default;

  // Sorts, clamps values within `tolerance` of zero to 0, and rejects values
  // below -tolerance.
  static Spectrum fromValues(std::vector<double> values, double tolerance = kZeroThreshold);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double tolerance() const noexcept { return tolerance_; }

  // Values above `threshold`, still decreasing.
  std::vector<double> nonzero(double threshold = kZeroThreshold) const;
  std::size_t zeroCount(double threshold = kZeroThreshold) const;

  // Integer form, or nullopt if some value is further than `tol` from an integer.
  std::optional<std::vector<std::int64_t>> snapped(double tol = kIntegerSnapTolerance) const;

 private:
  std::vector<double> values_;
  double tolerance_ = kZeroThreshold;
};

// The non-zero parts agree as multisets within `tol`.
bool equalUpToZeros(const Spectrum& a, const Spectrum& b, double tol = kCompareTolerance);
bool equalUpToZeros(const Spectrum& a, std::span<const double> b, double tol = kCompareTolerance);

Spectrum multisetUnion(const Spectrum& a, const Spectrum& b);
// a - b on the non-zero parts; nullopt if some value of b has no partner in a.
std::optional<Spectrum> multisetDifference(const Spectrum& a, const Spectrum& b,
                                           double tol = kCompareTolerance);

std::string formatSpectrum(const Spectrum& s);

enum class LaplacianKind { Up, Down, Total };

const char* toString(LaplacianKind kind);

struct LaplacianMatrix {
  LaplacianKind kind = LaplacianKind::Total;
  Degree degree = 0;
  std::vector<Monomial> basis;
  IntMatrix matrix;
};

// L'_d = d_{d+1} d_{d+1}^*  (d = -1 gives the empty matrix)
LaplacianMatrix laplacianUp(const Multicomplex& m, Degree d);
// L''_d = d_d^* d_d
LaplacianMatrix laplacianDown(const Multicomplex& m, Degree d);
// L_d = L'_d + L''_d
LaplacianMatrix laplacianTotal(const Multicomplex& m, Degree d);
LaplacianMatrix laplacian(const Multicomplex& m, Degree d, LaplacianKind kind);

struct JacobiOptions {
  double relativeTolerance = 1e-12;
  int maxSweeps = 100;
};

// Cyclic Jacobi rotations. Returns all eigenvalues in decreasing order.
// Throws NotSymmetric if |a_ij - a_ji| > symmetryTol and ConvergenceError if
// the off-diagonal norm has not dropped below the threshold after maxSweeps.
std::vector<double> jacobiEigenvalues(DenseMatrix<double> a, double symmetryTol = 1e-9,
                                      const JacobiOptions& options = {});

Spectrum symmetricEigenvalues(const DenseMatrix<double>& a, double tol = kZeroThreshold);
Spectrum symmetricEigenvalues(const IntMatrix& a, double tol = kZeroThreshold);

Spectrum spectrumUp(const Multicomplex& m, Degree d);
Spectrum spectrumDown(const Multicomplex& m, Degree d);
Spectrum spectrumTotal(const Multicomplex& m, Degree d);
Spectrum spectrum(const Multicomplex& m, Degree d, LaplacianKind kind);

// Eigenvalues of d_k d_k^T, i.e. of L'_{k-1}; the spectrum attached to chain degree k.
Spectrum boundarySpectrum(const Multicomplex& m, Degree k);

struct RelationsReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Up to zeros: s''_d = s'_{d-1}, s_d = s'_d u s''_d, s'_d = s_d - s''_d.
RelationsReport verifySpectrumRelations(const Multicomplex& m, Degree d,
                                        double tol = kCompareTolerance);

// Multiset union over p^2 in M with 2 deg p <= d of the spectra of M^(p^2) at d - 2 deg p.
Spectrum constituentSpectrumSum(const Multicomplex& m, Degree d, LaplacianKind kind);

// Real Betti numbers beta_0 .. beta_maxDegree from ranks of the boundary maps.
std::vector<std::size_t> bettiNumbers(const Multicomplex& m);
// Zero multiplicity of the total Laplacian at every degree.
std::vector<std::size_t> harmonicDimensions(const Multicomplex& m);
// beta_l(M) assembled as sum over constituents of beta_{l - 2 deg p}(M^(p^2)).
std::vector<std::size_t> bettiFromConstituents(const Multicomplex& m);

std::size_t boundaryRank(const Multicomplex& m, Degree d);

}  // namespace multilap
