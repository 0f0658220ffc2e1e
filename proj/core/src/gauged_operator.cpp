#include "qes/gauged_operator.hpp"

#include <algorithm>
#include <bit>

#include "qes/error.hpp"

namespace qes {

Rational ModelParams::g2() const {
  const auto& [e1, e2, e3] = roots;
  return Rational(-4) * (e1 * e2 + e1 * e3 + e2 * e3);
}

Rational ModelParams::g3() const {
  const auto& [e1, e2, e3] = roots;
  return Rational(4) * e1 * e2 * e3;
}

void ModelParams::validate() const {
  if (n < 1) throw InvalidParams("particle count must be at least 1");
  if (!(roots[0] + roots[1] + roots[2]).is_zero())
    throw InvalidParams("roots must sum to zero, got " + roots[0].str() + ", " + roots[1].str() + ", " +
                        roots[2].str());
}

GaugeMask GaugeMask::from_indices(std::initializer_list<int> indices) {
  unsigned bits = 0;
  for (int i : indices) {
    if (i < 1 || i > 3) throw InvalidParams("gauge mask index must be 1, 2 or 3");
    bits |= 1u << (i - 1);
  }
  return GaugeMask(bits);
}

GaugeMask GaugeMask::parse(std::string_view text) {
  if (text == "none" || text == "0" || text.empty()) return GaugeMask();
  unsigned bits = 0;
  for (char ch : text) {
    if (ch < '1' || ch > '3') throw ParseError("invalid gauge mask '" + std::string(text) + "'");
    const unsigned bit = 1u << (ch - '1');
    if (bits & bit) throw ParseError("repeated index in gauge mask '" + std::string(text) + "'");
    bits |= bit;
  }
  return GaugeMask(bits);
}

std::array<GaugeMask, 8> GaugeMask::all() {
  return {GaugeMask(0b000), GaugeMask(0b001), GaugeMask(0b010), GaugeMask(0b100),
          GaugeMask(0b011), GaugeMask(0b101), GaugeMask(0b110), GaugeMask(0b111)};
}

int GaugeMask::size() const { return std::popcount(bits_); }

std::vector<int> GaugeMask::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 3; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string GaugeMask::str() const {
  if (empty()) return "none";
  std::string out;
  for (int i : indices()) out += static_cast<char>('0' + i);
  return out;
}

Rational coupling_c_m(const ModelParams& params) {
  const Rational pair = Rational(2) * params.a * Rational(static_cast<long>(params.n) - 1);
  return (Rational(2) * params.m + pair + Rational(4) * params.b) *
         (Rational(2) * params.m + Rational(1) + pair + Rational(2) * params.b);
}

Rational shifted_degree(const ModelParams& params, GaugeMask mask) {
  const Rational nf(mask.size());
  return params.m + params.b * nf - nf / Rational(2);
}

std::vector<GaugeMask> list_valid_masks(const ModelParams& params) {
  if (params.b == Rational(1, 2)) {
    if (params.m.is_integer() && params.m.sign() >= 0) return {GaugeMask()};
    return {};
  }
  std::vector<GaugeMask> out;
  for (GaugeMask mask : GaugeMask::all()) {
    const Rational mt = shifted_degree(params, mask);
    if (mt.is_integer() && mt.sign() >= 0) out.push_back(mask);
  }
  return out;
}

namespace {

ZPolynomial linear_factor(const Rational& root) {
  ZPolynomial f = ZPolynomial::variable(1, 0);
  f.add_term(Monomial{0}, -root);
  return f;
}

}  // namespace

GaugedOperator build_gauged_operator(const ModelParams& params, GaugeMask mask,
                                     std::optional<Rational> exponent_override) {
  params.validate();
  GaugedOperator op;
  op.params_ = params;
  op.mask_ = mask;
  op.m_tilde_ = shifted_degree(params, mask);
  if (!op.m_tilde_.is_integer() || op.m_tilde_.sign() < 0)
    throw InvalidDegree("shifted degree " + op.m_tilde_.str() + " for mask " + mask.str() +
                        " is not a non-negative integer");
  op.c_m_ = coupling_c_m(params);
  op.exponent_ = exponent_override.value_or(Rational(1, 2) - params.b);

  const Rational g2 = params.g2();
  const Rational g3 = params.g3();
  const ZPolynomial z = ZPolynomial::variable(1, 0);
  op.p_ = poly_pow(z, 3) * Rational(4) - z * g2 - ZPolynomial::constant(1, g3);
  op.p_prime_ = poly_diff(op.p_, 0);

  // lambda = A / L, lambda' = -B / L^2 with L = prod (z - e_i),
  // A = nu sum_i L/(z - e_i), B = nu sum_i (L/(z - e_i))^2.
  const Rational& nu = op.exponent_;
  const Rational half_b = params.b + Rational(1, 2);
  ZPolynomial L = ZPolynomial::constant(1, 1);
  ZPolynomial A(1), B(1);
  for (int i : mask.indices()) {
    ZPolynomial cofactor = ZPolynomial::constant(1, 1);
    for (int j : mask.indices())
      if (j != i) cofactor = cofactor * linear_factor(params.roots[j - 1]);
    L = L * linear_factor(params.roots[i - 1]);
    A += cofactor * nu;
    B += cofactor * cofactor * nu;
  }
  try {
    op.q_ = poly_divide_exact(op.p_ * A, L);
    const ZPolynomial numerator = op.p_ * (A * A - B) + op.p_prime_ * A * L * half_b;
    op.s_ = poly_divide_exact(numerator, L * L);
  } catch (const NonZeroRemainder&) {
    throw NonCancellingPole("gauge exponent " + nu.str() + " with mask " + mask.str() +
                            " leaves a pole at a root of p(z)");
  }

  const std::size_t n = params.n;
  for (std::size_t k = 0; k < n; ++k) {
    op.p_k_.push_back(embed_univariate(op.p_, k, n));
    op.q_k_.push_back(embed_univariate(op.q_, k, n));
    op.s_k_.push_back(embed_univariate(op.s_, k, n));
    op.drift_k_.push_back(embed_univariate(op.q_ * Rational(2) + op.p_prime_ * half_b, k, n));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      op.pair_den_.push_back(ZPolynomial::variable(n, k) - ZPolynomial::variable(n, l));

  const Rational strength = params.m * (Rational(12) * params.b +
                                        Rational(8) * params.a * Rational(static_cast<long>(n) - 1) +
                                        Rational(4) * params.m + Rational(2));
  op.potential_ = elementary_symmetric(n, 1) * strength;
  return op;
}

ZPolynomial GaugedOperator::apply_z(const ZPolynomial& f) const {
  const std::size_t n = params_.n;
  if (f.nvars() != n) throw DimensionMismatch("operand lives in the wrong number of variables");
  std::vector<ZPolynomial> first;
  first.reserve(n);
  ZPolynomial out = potential_ * f;
  for (std::size_t k = 0; k < n; ++k) {
    first.push_back(poly_diff(f, k));
    out -= p_k_[k] * poly_diff(first[k], k);
    out -= drift_k_[k] * first[k];
    out -= s_k_[k] * f;
  }
  if (!params_.a.is_zero()) {
    std::size_t pair = 0;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = k + 1; l < n; ++l, ++pair) {
        const ZPolynomial numerator = p_k_[k] * first[k] - p_k_[l] * first[l] + (q_k_[k] - q_k_[l]) * f;
        try {
          out -= poly_divide_exact(numerator, pair_den_[pair]) * (Rational(2) * params_.a);
        } catch (const NonZeroRemainder&) {
          throw NonCancellingPole("pair term (z" + std::to_string(k + 1) + " - z" + std::to_string(l + 1) +
                                  ") does not cancel");
        }
      }
    }
  }
  return out;
}

TauPolynomial GaugedOperator::apply(const TauPolynomial& f, TauExpander& expander) const {
  if (f.nvars() != params_.n || expander.nvars() != params_.n)
    throw DimensionMismatch("operand lives in the wrong number of variables");
  return expander.reduce(apply_z(expander.expand(f)));
}

TauPolynomial GaugedOperator::apply(const TauPolynomial& f) const {
  TauExpander expander(params_.n);
  return apply(f, expander);
}

}  // namespace qes
