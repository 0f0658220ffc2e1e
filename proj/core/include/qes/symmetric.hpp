#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qes/polynomial.hpp"

namespace qes {

/// Exponents (l_1, ..., l_N) of tau_1^l_1 ... tau_N^l_N; degree() is sum l_k.
using TauMonomial = Monomial;
/// Polynomial in the elementary symmetric functions tau_1, ..., tau_N.
using TauPolynomial = SparsePolynomial<TauTag>;

/// Ordered tau-monomial basis of the polynomials of tau-degree <= max_degree.
///
/// Ordering is graded lexicographic with increasing degree, so position 0 is
/// the constant monomial: for N = 2 and degree 2 the basis reads
/// 1, tau1, tau2, tau1^2, tau1*tau2, tau2^2.
class BasisIndex {
 public:
  BasisIndex(std::size_t nvars, unsigned max_degree);

  std::size_t nvars() const { return nvars_; }
  unsigned max_degree() const { return max_degree_; }
  std::size_t size() const { return monomials_.size(); }
  const TauMonomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<TauMonomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> position(const TauMonomial& m) const;

 private:
  std::size_t nvars_;
  unsigned max_degree_;
  std::vector<TauMonomial> monomials_;
};

BasisIndex enumerate_basis(std::size_t nvars, unsigned max_degree);

/// Binomial coefficient C(n, k); zero when n < k or n < 0.
std::size_t binomial(long n, long k);

/// Elementary symmetric polynomial tau_k in z_1..z_N (k is one-based).
ZPolynomial elementary_symmetric(std::size_t nvars, std::size_t k);

/// Expands t by substituting tau_k = sum_{i1<...<ik} z_i1 ... z_ik.
ZPolynomial tau_to_z(const TauPolynomial& t);

/// Invariance under every adjacent transposition of the variables.
bool is_symmetric(const ZPolynomial& p);

/// Unique t with tau_to_z(t) == p, by graded-lex leading-term reduction.
/// Throws NotSymmetric for input that is not symmetric.
TauPolynomial z_to_tau(const ZPolynomial& p);

/// Caches the z-expansions of tau powers for one variable count.
///
/// Not thread-safe; every thread should own its own expander.
class TauExpander {
 public:
  explicit TauExpander(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  ZPolynomial expand(const TauMonomial& m);
  ZPolynomial expand(const TauPolynomial& t);
  TauPolynomial reduce(const ZPolynomial& p);

 private:
  const ZPolynomial& tau_power(std::size_t k, unsigned e);

  std::size_t nvars_;
  std::vector<std::vector<ZPolynomial>> powers_;
};

}  // namespace qes
