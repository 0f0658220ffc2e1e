#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qes/gauged_operator.hpp"
#include "qes/rational.hpp"
#include "qes/symmetric.hpp"

namespace qes {

/// Dense square matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational trace() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational determinant(const RationalMatrix& m);

/// det(m - t I).
Rational characteristic_value(const RationalMatrix& m, const Rational& t);

RationalMatrix multiply(const RationalMatrix& l, const RationalMatrix& r);

/// Exact inverse by Gauss-Jordan; throws Error on a singular matrix.
RationalMatrix inverse(const RationalMatrix& m);

/// Matrix of a gauged operator on the tau-monomial basis of M_{m~}.
/// Entry (i, j) is the coefficient of basis element i in H(basis element j).
struct OperatorMatrix {
  BasisIndex basis{1, 0};
  RationalMatrix entries;
  GaugeMask mask;
  Rational m_tilde;

  std::size_t dim() const { return entries.dim(); }
};

/// Throws OperatorNotClosed when an image leaves the basis span.
OperatorMatrix build_matrix(const GaugedOperator& op);

/// Coefficient -4 (d - m~)(d + m + 2a(N-1) + (3 - n_f) b + (1 + n_f)/2)
/// multiplying tau_1 t in the degree d+1 part of H t, for deg t = d.
Rational raising_coefficient(const GaugedOperator& op, unsigned d);

/// True iff the degree-(d+1) part of H t equals raising_coefficient * tau_1 t
/// for every tau-monomial t of degree d.
bool raising_coefficient_check(const GaugedOperator& op, unsigned d);

enum class ExportFormat { json, csv };

/// JSON: {"dim", "mask", "m_tilde", "basis": [[l...]...], "entries": [["p/q"...]...]}
/// (row-major, exact). CSV: one row per matrix row, shortest round-trip doubles.
std::string export_matrix(const OperatorMatrix& mat, ExportFormat format);

/// Inverse of the JSON export.
OperatorMatrix import_matrix_json(const std::string& text);

}  // namespace qes
