#include "qes/symmetric.hpp"

#include <algorithm>
#include <functional>

#include "qes/error.hpp"

namespace qes {

namespace {

void compositions(std::size_t nvars, unsigned degree, std::vector<TauMonomial>& out) {
  // Largest-first lexicographic order of exponent vectors of a fixed degree.
  TauMonomial current(nvars);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t k, unsigned left) {
    if (k + 1 == nvars) {
      current[k] = left;
      out.push_back(current);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      current[k] = e;
      fill(k + 1, left - e);
    }
  };
  fill(0, degree);
}

}  // namespace

BasisIndex::BasisIndex(std::size_t nvars, unsigned max_degree) : nvars_(nvars), max_degree_(max_degree) {
  if (nvars == 0) throw InvalidParams("basis needs at least one variable");
  for (unsigned d = 0; d <= max_degree; ++d) compositions(nvars, d, monomials_);
}

std::optional<std::size_t> BasisIndex::position(const TauMonomial& m) const {
  if (m.nvars() != nvars_ || m.degree() > max_degree_) return std::nullopt;
  // Ascending degree, descending lex within a degree.
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m, [](const TauMonomial& l, const TauMonomial& r) {
    if (l.degree() != r.degree()) return l.degree() < r.degree();
    return GrlexGreater{}(l, r);
  });
  if (it == monomials_.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - monomials_.begin());
}

BasisIndex enumerate_basis(std::size_t nvars, unsigned max_degree) { return BasisIndex(nvars, max_degree); }

std::size_t binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (long i = 1; i <= k; ++i) result = result * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return result;
}

ZPolynomial elementary_symmetric(std::size_t nvars, std::size_t k) {
  if (k == 0 || k > nvars) throw DimensionMismatch("elementary_symmetric: index out of range");
  ZPolynomial out(nvars);
  std::vector<bool> chosen(nvars, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<long>(k), true);
  do {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m[i] = chosen[i] ? 1 : 0;
    out.add_term(m, 1);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

TauExpander::TauExpander(std::size_t nvars) : nvars_(nvars), powers_(nvars) {
  for (std::size_t k = 0; k < nvars; ++k) {
    powers_[k].push_back(ZPolynomial::constant(nvars, 1));
    powers_[k].push_back(elementary_symmetric(nvars, k + 1));
  }
}

const ZPolynomial& TauExpander::tau_power(std::size_t k, unsigned e) {
  auto& cache = powers_[k];
  while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
  return cache[e];
}

ZPolynomial TauExpander::expand(const TauMonomial& m) {
  if (m.nvars() != nvars_) throw DimensionMismatch("tau monomial has wrong number of variables");
  ZPolynomial out = ZPolynomial::constant(nvars_, 1);
  for (std::size_t k = 0; k < nvars_; ++k)
    if (m[k] > 0) out = out * tau_power(k, m[k]);
  return out;
}

ZPolynomial TauExpander::expand(const TauPolynomial& t) {
  if (t.nvars() != nvars_) throw DimensionMismatch("tau polynomial has wrong number of variables");
  ZPolynomial out(nvars_);
  for (const auto& [m, c] : t.terms()) out += expand(m) * c;
  return out;
}

TauPolynomial TauExpander::reduce(const ZPolynomial& p) {
  if (p.nvars() != nvars_) throw DimensionMismatch("z polynomial has wrong number of variables");
  if (!is_symmetric(p)) throw NotSymmetric("z_to_tau: input is not symmetric");
  TauPolynomial out(nvars_);
  ZPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto [lead, c] = rest.leading_term();
    // tau_1^(a1-a2) ... tau_N^aN has leading monomial z^a with coefficient 1.
    TauMonomial t(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) {
      const unsigned next = k + 1 < nvars_ ? lead[k + 1] : 0;
      if (lead[k] < next) throw NotSymmetric("z_to_tau: reduction stalled");
      t[k] = lead[k] - next;
    }
    out.add_term(t, c);
    rest -= expand(t) * c;
  }
  return out;
}

ZPolynomial tau_to_z(const TauPolynomial& t) { return TauExpander(t.nvars()).expand(t); }

bool is_symmetric(const ZPolynomial& p) {
  for (std::size_t k = 0; k + 1 < p.nvars(); ++k) {
    for (const auto& [m, c] : p.terms()) {
      if (m[k] == m[k + 1]) continue;
      Monomial swapped(m);
      std::swap(swapped[k], swapped[k + 1]);
      if (p.coefficient(swapped) != c) return false;
    }
  }
  return true;
}

TauPolynomial z_to_tau(const ZPolynomial& p) { return TauExpander(p.nvars()).reduce(p); }

}  // namespace qes
