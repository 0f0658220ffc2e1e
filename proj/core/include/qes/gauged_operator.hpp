#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qes/polynomial.hpp"
#include "qes/rational.hpp"
#include "qes/symmetric.hpp"

namespace qes {

/// One problem instance: particle count, couplings a and b, degree
/// parameter m and the three roots of p(z) = 4(z-e1)(z-e2)(z-e3).
struct ModelParams {
  std::size_t n = 1;
  Rational a;
  Rational b;
  Rational m;
  std::array<Rational, 3> roots;

  /// g2 = -4(e1e2 + e1e3 + e2e3).
  Rational g2() const;
  /// g3 = 4 e1 e2 e3.
  Rational g3() const;

  /// Throws InvalidParams unless n >= 1 and the roots sum to zero.
  void validate() const;
};

/// Subset of the root indices {1, 2, 3} carrying the exponent 1/2 - b in
/// the gauge factor prod_k prod_i (z_k - e_i)^nu_i.
class GaugeMask {
 public:
  constexpr GaugeMask() = default;
  static GaugeMask from_indices(std::initializer_list<int> indices);
  /// "none", or digits drawn from 1..3 such as "23".
  static GaugeMask parse(std::string_view text);
  /// All eight masks ordered by size, then by index string.
  static std::array<GaugeMask, 8> all();

  bool contains(int index) const { return (bits_ >> (index - 1)) & 1u; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  /// Root indices in increasing order.
  std::vector<int> indices() const;
  GaugeMask complement() const { return GaugeMask(static_cast<unsigned>(~bits_ & 7u)); }
  /// Inverse of parse: "none", "1", "23", ...
  std::string str() const;

  friend bool operator==(GaugeMask, GaugeMask) = default;

 private:
  explicit constexpr GaugeMask(unsigned bits) : bits_(bits) {}
  unsigned bits_ = 0;
};

/// c_m = [2m + 2a(N-1) + 4b][2m + 1 + 2a(N-1) + 2b].
Rational coupling_c_m(const ModelParams& params);

/// m + b n_f - n_f / 2 with n_f = |mask|.
Rational shifted_degree(const ModelParams& params, GaugeMask mask);

/// Masks whose shifted degree is a non-negative integer. At b = 1/2 every
/// mask reproduces the ungauged operator and only the empty mask is listed.
std::vector<GaugeMask> list_valid_masks(const ModelParams& params);

/// The gauged Hamiltonian restricted to symmetric polynomials.
///
/// With lambda(z) = sum_{i in mask} nu / (z - e_i), the conjugation by the
/// gauge factor is folded into two single-variable polynomials
///   q(z) = p(z) lambda(z)
///   s(z) = p(z) (lambda^2 + lambda') + (b + 1/2) p'(z) lambda(z)
/// and a symmetric F is mapped to
///   sum_k [ -p_k F_kk - (2 q_k + (b + 1/2) p'_k) F_k - s_k F ]
///   - 2a sum_{k<l} [ p_k F_k - p_l F_l + (q_k - q_l) F ] / (z_k - z_l)
///   + m (12b + 8a(N-1) + 4m + 2) tau_1 F.
class GaugedOperator {
 public:
  const ModelParams& params() const { return params_; }
  GaugeMask mask() const { return mask_; }
  const Rational& exponent() const { return exponent_; }
  const Rational& m_tilde() const { return m_tilde_; }
  unsigned degree() const { return static_cast<unsigned>(m_tilde_.to_long()); }
  const Rational& c_m() const { return c_m_; }

  /// Univariate pieces, in a one-variable ring.
  const ZPolynomial& p() const { return p_; }
  const ZPolynomial& p_prime() const { return p_prime_; }
  const ZPolynomial& q() const { return q_; }
  const ZPolynomial& s() const { return s_; }

  /// Exact image of f, which must live in params().n variables.
  TauPolynomial apply(const TauPolynomial& f) const;
  /// Same, reusing the caller's expansion cache.
  TauPolynomial apply(const TauPolynomial& f, TauExpander& expander) const;
  /// z-space image of a symmetric z-polynomial.
  ZPolynomial apply_z(const ZPolynomial& f) const;

 private:
  friend GaugedOperator build_gauged_operator(const ModelParams&, GaugeMask, std::optional<Rational>);
  GaugedOperator() = default;

  ModelParams params_;
  GaugeMask mask_;
  Rational exponent_;
  Rational m_tilde_;
  Rational c_m_;
  ZPolynomial p_, p_prime_, q_, s_;
  // Per-variable embeddings.
  std::vector<ZPolynomial> p_k_, drift_k_, s_k_, q_k_, pair_den_;
  ZPolynomial potential_;
};

/// Precomputes the gauged operator for one mask.
///
/// exponent_override replaces nu = 1/2 - b; it exists to exercise the
/// failure path. Throws InvalidParams, InvalidDegree (shifted degree not in
/// N_0) or NonCancellingPole (q or s not polynomial).
GaugedOperator build_gauged_operator(const ModelParams& params, GaugeMask mask,
                                     std::optional<Rational> exponent_override = std::nullopt);

}  // namespace qes
