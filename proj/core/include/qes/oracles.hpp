#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qes/gauged_operator.hpp"
#include "qes/operator_matrix.hpp"
#include "qes/spectral.hpp"

namespace qes {

/// Per-mask invariant-space dimensions against the closed-form count of
/// completely symmetric algebraic solutions (b = 0).
struct CountReport {
  std::vector<std::pair<GaugeMask, std::size_t>> per_mask;
  std::size_t total = 0;
  std::size_t formula = 0;
  bool match = false;
};

/// m integer:       C(m+N, N) + 3 C(m-1+N, N)
/// m half-integer:  3 C(m-1/2+N, N) + C(m-3/2+N, N)
/// Throws InvalidParams unless 2m is a non-negative integer.
std::size_t symmetric_solution_formula(std::size_t n, const Rational& m);
CountReport count_symmetric_solutions(std::size_t n, const Rational& m);

/// Closed-form N = m = 2 reference matrices: the 6x6 for the ungauged operator on
/// {1, t1, t2, t1^2, t1 t2, t2^2} and h_1, h_2, h_3 (b = 0) on {1, t1, t2}.
struct ReferenceMatrices {
  RationalMatrix six;
  std::array<RationalMatrix, 3> h;
};
ReferenceMatrices reference_matrix_templates(const Rational& a, const Rational& b, const Rational& g2, const Rational& g3,
                                     const std::array<Rational, 3>& roots);

/// h_i corresponds to the mask {1,2,3} \ {i}.
GaugeMask h_mask(int i);

/// Closed-form eigenvalues at roots (2, -1, -1), b = 0, N = m = 2.
struct DegenerateForms {
  /// Eigenvalues of the 6x6 not shared with any 3x3.
  std::array<Rational, 3> six_only;
  /// Shared by the 6x6 and h_1.
  std::array<Rational, 3> shared_h1;
  /// Spectrum of both h_2 and h_3.
  std::array<Rational, 3> h23;
};
DegenerateForms degenerate_closed_forms(const Rational& a);

struct OscillatorWitness {
  GaugeMask mask;
  std::complex<double> eigenvalue;
  /// (j1, j2) with 3(j1^2 + j2^2) - 40 == eigenvalue, when found.
  std::optional<std::pair<int, int>> j;
};

struct OscillatorReport {
  bool passed = false;
  std::vector<OscillatorWitness> witnesses;
};

/// Integers 0 <= j1 <= j2 with j1 + j2 even and |3(j1^2+j2^2) - 40 - value| <= tol.
std::optional<std::pair<int, int>> oscillator_level(std::complex<double> value, double tol);

/// Every eigenvalue over all valid masks at N = m = 2, a = b = 0,
/// roots (2, -1, -1) lies on the oscillator ladder 3(j1^2 + j2^2) - 40.
OscillatorReport oscillator_membership(double tol = 1e-8);

struct DecouplingReport {
  bool passed = false;
  std::vector<std::complex<double>> single;
  std::vector<std::complex<double>> pair;
  double max_error = 0.0;
};

/// At a = 0 the N = 2 ungauged spectrum is {l_i + l_j, i <= j} over the N = 1
/// spectrum with the same b, m and roots. Uses params.a == 0 (enforced).
DecouplingReport decoupling_check(const ModelParams& params, double tol = 1e-8);

}  // namespace qes
