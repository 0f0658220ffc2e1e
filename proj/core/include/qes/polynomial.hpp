#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qes/rational.hpp"

namespace qes {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const;
  unsigned operator[](std::size_t k) const { return exps_[k]; }
  unsigned& operator[](std::size_t k) { return exps_[k]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  /// True when every exponent of `other` is <= the matching one here.
  bool divisible_by(const Monomial& other) const;

  friend Monomial operator*(const Monomial& l, const Monomial& r);
  /// Requires divisible_by(r).
  friend Monomial operator/(const Monomial& l, const Monomial& r);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order, largest first: total degree, then x1 > x2 > ...
struct GrlexGreater {
  bool operator()(const Monomial& l, const Monomial& r) const;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are held in graded-lex order (leading term first) and zero
/// coefficients are never stored. The tag keeps polynomials in the z
/// variables and in the elementary symmetric variables apart at compile time.
template <class Tag>
class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::size_t nvars) : nvars_(nvars) {}

  static SparsePolynomial constant(std::size_t nvars, const Rational& c);
  /// The variable with zero-based index k.
  static SparsePolynomial variable(std::size_t nvars, std::size_t k);
  static SparsePolynomial monomial(const Monomial& m, const Rational& c = Rational(1));

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;
  /// Requires !is_zero().
  const std::pair<const Monomial, Rational>& leading_term() const { return *terms_.begin(); }

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(SparsePolynomial l, const SparsePolynomial& r) { return l += r; }
  friend SparsePolynomial operator-(SparsePolynomial l, const SparsePolynomial& r) { return l -= r; }
  friend SparsePolynomial operator*(SparsePolynomial l, const Rational& c) { return l *= c; }
  friend SparsePolynomial operator*(const Rational& c, SparsePolynomial r) { return r *= c; }
  friend SparsePolynomial operator*(const SparsePolynomial& l, const SparsePolynomial& r) {
    return multiply(l, r);
  }
  SparsePolynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  static SparsePolynomial multiply(const SparsePolynomial& l, const SparsePolynomial& r);

 private:
  void check_same(const SparsePolynomial& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

struct ZTag {};
struct TauTag {};

using ZMonomial = Monomial;
using ZPolynomial = SparsePolynomial<ZTag>;

extern template class SparsePolynomial<ZTag>;
extern template class SparsePolynomial<TauTag>;

ZPolynomial poly_add(const ZPolynomial& p, const ZPolynomial& q);
ZPolynomial poly_mul(const ZPolynomial& p, const ZPolynomial& q);
ZPolynomial poly_pow(const ZPolynomial& p, unsigned exponent);

/// Partial derivative with respect to the zero-based variable k.
ZPolynomial poly_diff(const ZPolynomial& p, std::size_t k);

/// Returns q with num == q * den. Throws NonZeroRemainder otherwise.
ZPolynomial poly_divide_exact(const ZPolynomial& num, const ZPolynomial& den);

Rational poly_eval(const ZPolynomial& p, std::span<const Rational> point);

/// Re-expresses a univariate polynomial in variable k of an nvars-variable ring.
ZPolynomial embed_univariate(const ZPolynomial& univariate, std::size_t k, std::size_t nvars);

/// Human readable form using the given variable stem ("z" gives z1, z2, ...).
template <class Tag>
std::string to_string(const SparsePolynomial<Tag>& p, const std::string& stem);

}  // namespace qes
