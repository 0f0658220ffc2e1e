#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qes/operator_matrix.hpp"

namespace qes {

/// Square double-precision matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const std::vector<double>& data() const { return data_; }

  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Nearest-double image; throws Error when an entry overflows.
DenseMatrix to_float(const RationalMatrix& m);
DenseMatrix to_float(const OperatorMatrix& m);

struct ConvergenceReport {
  std::size_t iterations = 0;
  /// Bound on the size of the subdiagonal entries dropped during deflation.
  double residual_bound = 0.0;
  /// |sum(eigenvalues) - trace| / max(1, ||m||_F).
  double trace_error = 0.0;
};

struct Spectrum {
  /// Sorted by real part, then imaginary part.
  std::vector<std::complex<double>> eigenvalues;
  ConvergenceReport report;

  std::complex<double> sum() const;
  std::complex<double> product() const;
};

/// Relative threshold below which a subdiagonal entry is treated as zero.
inline constexpr double kDeflationTolerance = 1e-14;
/// Iteration budget per unit of dimension.
inline constexpr std::size_t kIterationsPerDim = 100;

/// All eigenvalues of a real square matrix: balancing, Householder reduction
/// to Hessenberg form, then Francis double-shift QR with exceptional shifts.
/// Throws NoConvergence after kIterationsPerDim * dim sweeps.
Spectrum eigenvalues(const DenseMatrix& m);

/// Unit-norm eigenvector for an (approximate) eigenvalue by inverse
/// iteration from a fixed pseudo-random start; the largest component is
/// made real and positive. Throws NoConvergence when the residual
/// ||m v - lambda v|| does not reach 1e-8 ||m||_F.
std::vector<std::complex<double>> eigenvector(const DenseMatrix& m, std::complex<double> lambda);

/// True when non-real eigenvalues come in adjacent conjugate pairs.
bool conjugate_paired(const Spectrum& s, double tol = 0.0);

}  // namespace qes
