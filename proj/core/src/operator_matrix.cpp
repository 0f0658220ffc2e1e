#include "qes/operator_matrix.hpp"

#include <fmt/format.h>

#include <nlohmann/json.hpp>

#include "qes/error.hpp"
#include "qes/serialize.hpp"

namespace qes {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : dim_(rows.size()), entries_() {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("RationalMatrix: rows must form a square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Rational RationalMatrix::trace() const {
  Rational t(0);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return Rational(1);
  RationalMatrix a = m;
  Rational sign(1);
  Rational previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      a(i, k) = Rational(0);
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational characteristic_value(const RationalMatrix& m, const Rational& t) {
  RationalMatrix shifted = m;
  for (std::size_t i = 0; i < m.dim(); ++i) shifted(i, i) -= t;
  return determinant(shifted);
}

RationalMatrix multiply(const RationalMatrix& l, const RationalMatrix& r) {
  if (l.dim() != r.dim()) throw DimensionMismatch("multiply: dimensions differ");
  const std::size_t n = l.dim();
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (l(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l(i, k) * r(k, j);
    }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  RationalMatrix a = m;
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Rational(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw Error("inverse: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(pivot, j));
      std::swap(inv(k, j), inv(pivot, j));
    }
    const Rational scale = Rational(1) / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

OperatorMatrix build_matrix(const GaugedOperator& op) {
  const std::size_t n = op.params().n;
  OperatorMatrix mat{BasisIndex(n, op.degree()), RationalMatrix(), op.mask(), op.m_tilde()};
  mat.entries = RationalMatrix(mat.basis.size());
  TauExpander expander(n);
  for (std::size_t j = 0; j < mat.basis.size(); ++j) {
    const TauPolynomial image = op.apply(TauPolynomial::monomial(mat.basis[j]), expander);
    for (const auto& [monomial, coeff] : image.terms()) {
      const auto row = mat.basis.position(monomial);
      if (!row)
        throw OperatorNotClosed("image of basis element " + std::to_string(j) + " contains a monomial of degree " +
                                std::to_string(monomial.degree()) + " > " + op.m_tilde().str());
      mat.entries(*row, j) = coeff;
    }
  }
  return mat;
}

Rational raising_coefficient(const GaugedOperator& op, unsigned d) {
  const ModelParams& params = op.params();
  const Rational nf(op.mask().size());
  const Rational deg(static_cast<long>(d));
  return Rational(-4) * (deg - op.m_tilde()) *
         (deg + params.m + Rational(2) * params.a * Rational(static_cast<long>(params.n) - 1) +
          (Rational(3) - nf) * params.b + (Rational(1) + nf) / Rational(2));
}

bool raising_coefficient_check(const GaugedOperator& op, unsigned d) {
  const std::size_t n = op.params().n;
  const Rational coeff = raising_coefficient(op, d);
  TauExpander expander(n);
  const BasisIndex basis(n, d);
  for (const TauMonomial& t : basis.monomials()) {
    if (t.degree() != d) continue;
    const TauPolynomial image = op.apply(TauPolynomial::monomial(t), expander);
    TauMonomial raised(t);
    raised[0] += 1;
    for (const auto& [monomial, c] : image.terms()) {
      if (monomial.degree() <= d) continue;
      if (monomial.degree() > d + 1) return false;
      if (!(monomial == raised)) return false;
    }
    if (image.coefficient(raised) != coeff) return false;
  }
  return true;
}

std::string export_matrix(const OperatorMatrix& mat, ExportFormat format) {
  if (format == ExportFormat::json) return to_json(mat).dump(2) + "\n";
  std::string out;
  for (std::size_t i = 0; i < mat.dim(); ++i) {
    for (std::size_t j = 0; j < mat.dim(); ++j) {
      if (j) out += ',';
      out += fmt::format("{}", mat.entries(i, j).to_double());
    }
    out += '\n';
  }
  return out;
}

OperatorMatrix import_matrix_json(const std::string& text) {
  try {
    return operator_matrix_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

}  // namespace qes
