#include "qes/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "qes/error.hpp"

namespace qes {

namespace {

long as_long(const Rational& r) { return r.to_long(); }

}  // namespace

std::size_t symmetric_solution_formula(std::size_t n, const Rational& m) {
  const Rational twice = m * Rational(2);
  if (!twice.is_integer() || m.sign() < 0) throw InvalidParams("m must be a non-negative integer or half-integer");
  const long nn = static_cast<long>(n);
  if (m.is_integer()) {
    const long mi = as_long(m);
    return binomial(mi + nn, nn) + 3 * binomial(mi - 1 + nn, nn);
  }
  const long lower = as_long(m - Rational(1, 2));
  return 3 * binomial(lower + nn, nn) + binomial(lower - 1 + nn, nn);
}

CountReport count_symmetric_solutions(std::size_t n, const Rational& m) {
  CountReport report;
  ModelParams params;
  params.n = n;
  params.m = m;
  params.b = Rational(0);
  for (GaugeMask mask : list_valid_masks(params)) {
    const std::size_t dim = binomial(shifted_degree(params, mask).to_long() + static_cast<long>(n), static_cast<long>(n));
    report.per_mask.emplace_back(mask, dim);
    report.total += dim;
  }
  report.formula = symmetric_solution_formula(n, m);
  report.match = report.formula == report.total;
  return report;
}

GaugeMask h_mask(int i) { return GaugeMask::from_indices({i}).complement(); }

ReferenceMatrices reference_matrix_templates(const Rational& a, const Rational& b, const Rational& g2, const Rational& g3,
                                     const std::array<Rational, 3>& roots) {
  const Rational half(1, 2);
  ReferenceMatrices out;
  // clang-format off
  out.six = RationalMatrix{
      {0, g2 * (2 * a + 2 * b + 1), Rational(-2) * a * g3, 4 * g3, 0, 0},
      {16 * a + 24 * b + 20, 0, g2 * (b + half), 4 * g2 * (a + b + 1), 2 * g3 * (1 - a), 0},
      {0, 8 * a + 24 * b + 12, 0, 0, g2 * (2 * a + 2 * b + 5), Rational(-4) * g3 * (a + 1)},
      {0, 8 * a + 12 * b + 14, 0, 0, g2 * (b + half), 2 * g3},
      {0, 0, 8 * a + 12 * b + 14, 16 * (a + 3 * b + 3), 0, g2 * (2 * b + 3)},
      {0, 0, 0, 0, 8 * a + 24 * b + 28, 0},
  };
  for (int i = 0; i < 3; ++i) {
    const Rational& e = roots[i];
    out.h[i] = RationalMatrix{
        {(6 + 4 * a) * e, g2 * (2 * a + 1) + 8 * e * e, Rational(-2) * a * g3},
        {14 + 8 * a, (10 + 4 * a) * e, g2 / 2 + 4 * e * e},
        {0, 28 + 8 * a, (14 + 4 * a) * e},
    };
  }
  // clang-format on
  return out;
}

DegenerateForms degenerate_closed_forms(const Rational& a) {
  return DegenerateForms{
      {Rational(-8) * (5 + 4 * a), Rational(-4) * (7 + 2 * a), 8 * (1 + 2 * a)},
      {Rational(-8) * (2 + a), 4 * (5 + 4 * a), 8 * (7 + 2 * a)},
      {Rational(-2) * (17 + 10 * a), Rational(-2) * (5 - 2 * a), 2 * (7 + 2 * a)},
  };
}

std::optional<std::pair<int, int>> oscillator_level(std::complex<double> value, double tol) {
  if (std::fabs(value.imag()) > tol) return std::nullopt;
  const double target = (value.real() + 40.0) / 3.0;
  if (target < -tol) return std::nullopt;
  const int top = static_cast<int>(std::sqrt(std::max(target, 0.0))) + 1;
  for (int j1 = 0; j1 <= top; ++j1)
    for (int j2 = j1; j2 <= top; ++j2) {
      if ((j1 + j2) % 2 != 0) continue;
      if (std::fabs(3.0 * (j1 * j1 + j2 * j2) - 40.0 - value.real()) <= tol) return std::make_pair(j1, j2);
    }
  return std::nullopt;
}

OscillatorReport oscillator_membership(double tol) {
  ModelParams params;
  params.n = 2;
  params.m = Rational(2);
  params.roots = {Rational(2), Rational(-1), Rational(-1)};
  OscillatorReport report;
  report.passed = true;
  for (GaugeMask mask : list_valid_masks(params)) {
    const Spectrum spectrum = eigenvalues(to_float(build_matrix(build_gauged_operator(params, mask))));
    for (auto lambda : spectrum.eigenvalues) {
      OscillatorWitness w{mask, lambda, oscillator_level(lambda, tol)};
      if (!w.j) report.passed = false;
      report.witnesses.push_back(w);
    }
  }
  return report;
}

DecouplingReport decoupling_check(const ModelParams& params, double tol) {
  if (!params.a.is_zero()) throw InvalidParams("decoupling_check requires a = 0");
  ModelParams single = params;
  single.n = 1;
  ModelParams pair = params;
  pair.n = 2;
  DecouplingReport report;
  report.single = eigenvalues(to_float(build_matrix(build_gauged_operator(single, GaugeMask())))).eigenvalues;
  report.pair = eigenvalues(to_float(build_matrix(build_gauged_operator(pair, GaugeMask())))).eigenvalues;

  std::vector<std::complex<double>> sums;
  for (std::size_t i = 0; i < report.single.size(); ++i)
    for (std::size_t j = i; j < report.single.size(); ++j) sums.push_back(report.single[i] + report.single[j]);
  if (sums.size() != report.pair.size()) return report;

  // Greedy nearest matching; the multisets must agree element by element.
  std::vector<bool> used(sums.size(), false);
  report.passed = true;
  for (const auto& lambda : report.pair) {
    std::size_t best = sums.size();
    double best_err = 0.0;
    for (std::size_t k = 0; k < sums.size(); ++k) {
      if (used[k]) continue;
      const double err = std::abs(sums[k] - lambda) / std::max(1.0, std::abs(lambda));
      if (best == sums.size() || err < best_err) {
        best = k;
        best_err = err;
      }
    }
    used[best] = true;
    report.max_error = std::max(report.max_error, best_err);
    if (best_err > tol) report.passed = false;
  }
  return report;
}

}  // namespace qes
