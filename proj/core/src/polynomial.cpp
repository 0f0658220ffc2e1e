#include "qes/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qes/error.hpp"

namespace qes {

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] < other.exps_[k]) return false;
  return true;
}

Monomial operator*(const Monomial& l, const Monomial& r) {
  Monomial out(l);
  for (std::size_t k = 0; k < out.exps_.size(); ++k) out.exps_[k] += r.exps_[k];
  return out;
}

Monomial operator/(const Monomial& l, const Monomial& r) {
  Monomial out(l);
  for (std::size_t k = 0; k < out.exps_.size(); ++k) out.exps_[k] -= r.exps_[k];
  return out;
}

bool GrlexGreater::operator()(const Monomial& l, const Monomial& r) const {
  const unsigned dl = l.degree();
  const unsigned dr = r.degree();
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(r.exponents().begin(), r.exponents().end(), l.exponents().begin(),
                                      l.exponents().end());
}

template <class Tag>
SparsePolynomial<Tag> SparsePolynomial<Tag>::constant(std::size_t nvars, const Rational& c) {
  SparsePolynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

template <class Tag>
SparsePolynomial<Tag> SparsePolynomial<Tag>::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw DimensionMismatch("variable index out of range");
  Monomial m(nvars);
  m[k] = 1;
  return monomial(m);
}

template <class Tag>
SparsePolynomial<Tag> SparsePolynomial<Tag>::monomial(const Monomial& m, const Rational& c) {
  SparsePolynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

template <class Tag>
int SparsePolynomial<Tag>::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

template <class Tag>
Rational SparsePolynomial<Tag>::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

template <class Tag>
void SparsePolynomial<Tag>::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionMismatch("monomial has wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class Tag>
void SparsePolynomial<Tag>::check_same(const SparsePolynomial& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionMismatch("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) +
                            " variables");
}

template <class Tag>
SparsePolynomial<Tag>& SparsePolynomial<Tag>::operator+=(const SparsePolynomial& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

template <class Tag>
SparsePolynomial<Tag>& SparsePolynomial<Tag>::operator-=(const SparsePolynomial& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

template <class Tag>
SparsePolynomial<Tag>& SparsePolynomial<Tag>::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

template <class Tag>
SparsePolynomial<Tag> SparsePolynomial<Tag>::multiply(const SparsePolynomial& l, const SparsePolynomial& r) {
  l.check_same(r);
  SparsePolynomial out(l.nvars_);
  for (const auto& [ml, cl] : l.terms_)
    for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
  return out;
}

template class SparsePolynomial<ZTag>;
template class SparsePolynomial<TauTag>;

ZPolynomial poly_add(const ZPolynomial& p, const ZPolynomial& q) { return p + q; }

ZPolynomial poly_mul(const ZPolynomial& p, const ZPolynomial& q) { return p * q; }

ZPolynomial poly_pow(const ZPolynomial& p, unsigned exponent) {
  ZPolynomial result = ZPolynomial::constant(p.nvars(), 1);
  for (unsigned i = 0; i < exponent; ++i) result = result * p;
  return result;
}

ZPolynomial poly_diff(const ZPolynomial& p, std::size_t k) {
  if (k >= p.nvars()) throw DimensionMismatch("derivative variable out of range");
  ZPolynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[k] == 0) continue;
    Monomial d(m);
    d[k] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(m[k])));
  }
  return out;
}

ZPolynomial poly_divide_exact(const ZPolynomial& num, const ZPolynomial& den) {
  if (num.nvars() != den.nvars()) throw DimensionMismatch("poly_divide_exact: variable count differs");
  if (den.is_zero()) throw Error("poly_divide_exact: division by the zero polynomial");
  const auto& [lead_m, lead_c] = den.leading_term();
  ZPolynomial quotient(num.nvars());
  ZPolynomial rest = num;
  // With a single divisor the remainder is unique, so the first leading term
  // that lead_m does not divide proves the division inexact.
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading_term();
    if (!m.divisible_by(lead_m)) throw NonZeroRemainder("poly_divide_exact: non-zero remainder");
    const ZPolynomial step = ZPolynomial::monomial(m / lead_m, c / lead_c);
    quotient += step;
    rest -= step * den;
  }
  return quotient;
}

Rational poly_eval(const ZPolynomial& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw DimensionMismatch("poly_eval: point has wrong dimension");
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t k = 0; k < m.nvars(); ++k) term *= pow(point[k], m[k]);
    sum += term;
  }
  return sum;
}

ZPolynomial embed_univariate(const ZPolynomial& univariate, std::size_t k, std::size_t nvars) {
  if (univariate.nvars() != 1) throw DimensionMismatch("embed_univariate: input is not univariate");
  if (k >= nvars) throw DimensionMismatch("embed_univariate: target variable out of range");
  ZPolynomial out(nvars);
  for (const auto& [m, c] : univariate.terms()) {
    Monomial e(nvars);
    e[k] = m[0];
    out.add_term(e, c);
  }
  return out;
}

template <class Tag>
std::string to_string(const SparsePolynomial<Tag>& p, const std::string& stem) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const Rational magnitude = abs(c);
    const bool constant = m.degree() == 0;
    if (constant || magnitude != Rational(1)) os << magnitude << (constant ? "" : "*");
    bool first_factor = true;
    for (std::size_t k = 0; k < m.nvars(); ++k) {
      if (m[k] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << stem << (k + 1);
      if (m[k] > 1) os << "^" << m[k];
    }
  }
  return os.str();
}

template std::string to_string(const SparsePolynomial<ZTag>&, const std::string&);
template std::string to_string(const SparsePolynomial<TauTag>&, const std::string&);

}  // namespace qes
