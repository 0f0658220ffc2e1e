#pragma once

#include <random>

#include "qes/polynomial.hpp"
#include "qes/symmetric.hpp"

namespace qes::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    return Rational(std::uniform_int_distribution<long>(-9, 9)(rng_), std::uniform_int_distribution<long>(1, 5)(rng_));
  }

  Rational nonzero_rational() {
    Rational r = rational();
    while (r.is_zero()) r = rational();
    return r;
  }

  template <class Tag>
  SparsePolynomial<Tag> polynomial(std::size_t nvars, unsigned max_degree, int max_terms) {
    SparsePolynomial<Tag> p(nvars);
    std::uniform_int_distribution<unsigned> exp(0, max_degree);
    const int terms = std::uniform_int_distribution<int>(1, max_terms)(rng_);
    for (int t = 0; t < terms; ++t) {
      Monomial m(nvars);
      unsigned left = max_degree;
      for (std::size_t k = 0; k < nvars; ++k) {
        m[k] = std::uniform_int_distribution<unsigned>(0, left)(rng_);
        left -= m[k];
      }
      p.add_term(m, rational());
    }
    return p;
  }

  ZPolynomial zpoly(std::size_t nvars, unsigned max_degree = 3, int max_terms = 5) {
    return polynomial<ZTag>(nvars, max_degree, max_terms);
  }

  ZPolynomial nonzero_zpoly(std::size_t nvars, unsigned max_degree = 3, int max_terms = 5) {
    ZPolynomial p = zpoly(nvars, max_degree, max_terms);
    while (p.is_zero()) p = zpoly(nvars, max_degree, max_terms);
    return p;
  }

  TauPolynomial taupoly(std::size_t nvars, unsigned max_degree = 3, int max_terms = 5) {
    return polynomial<TauTag>(nvars, max_degree, max_terms);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline ZPolynomial z(std::size_t nvars, std::size_t k) { return ZPolynomial::variable(nvars, k); }
inline ZPolynomial zc(std::size_t nvars, const Rational& c) { return ZPolynomial::constant(nvars, c); }

}  // namespace qes::testing
