#include "qes/serialize.hpp"

#include "qes/error.hpp"

namespace qes {

nlohmann::json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

template <class Tag>
nlohmann::json to_json(const SparsePolynomial<Tag>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({m.exponents(), c.str()});
  return out;
}

template nlohmann::json to_json(const SparsePolynomial<ZTag>&);
template nlohmann::json to_json(const SparsePolynomial<TauTag>&);

namespace {

template <class Tag>
SparsePolynomial<Tag> poly_from_json(const nlohmann::json& j, std::size_t nvars) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  SparsePolynomial<Tag> p(nvars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("polynomial term must be [exponents, coefficient]");
    auto exps = term[0].get<std::vector<unsigned>>();
    if (exps.size() != nvars) throw ParseError("exponent vector has wrong length");
    p.add_term(Monomial(std::move(exps)), rational_from_json(term[1]));
  }
  return p;
}

}  // namespace

ZPolynomial zpoly_from_json(const nlohmann::json& j, std::size_t nvars) { return poly_from_json<ZTag>(j, nvars); }

TauPolynomial taupoly_from_json(const nlohmann::json& j, std::size_t nvars) {
  return poly_from_json<TauTag>(j, nvars);
}

nlohmann::json to_json(const BasisIndex& basis) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : basis.monomials()) out.push_back(m.exponents());
  return out;
}

nlohmann::json to_json(const OperatorMatrix& mat) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < mat.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < mat.dim(); ++j) row.push_back(mat.entries(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"dim", mat.dim()},
          {"mask", mat.mask.str()},
          {"m_tilde", mat.m_tilde.str()},
          {"basis", to_json(mat.basis)},
          {"entries", std::move(rows)}};
}

OperatorMatrix operator_matrix_from_json(const nlohmann::json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& basis_json = j.at("basis");
  if (basis_json.size() != dim || dim == 0) throw ParseError("basis size does not match dim");
  const std::size_t nvars = basis_json[0].size();
  unsigned max_degree = 0;
  for (const auto& l : basis_json) {
    unsigned d = 0;
    for (const auto& e : l) d += e.get<unsigned>();
    max_degree = std::max(max_degree, d);
  }
  OperatorMatrix mat{BasisIndex(nvars, max_degree), RationalMatrix(dim), GaugeMask(), Rational(max_degree)};
  if (mat.basis.size() != dim) throw ParseError("basis is not a complete tau-monomial basis");
  for (std::size_t i = 0; i < dim; ++i)
    if (basis_json[i].get<std::vector<unsigned>>() != mat.basis[i].exponents())
      throw ParseError("basis is not in graded-lex order");
  if (j.contains("mask")) mat.mask = GaugeMask::parse(j.at("mask").get<std::string>());
  if (j.contains("m_tilde")) mat.m_tilde = rational_from_json(j.at("m_tilde"));
  const auto& rows = j.at("entries");
  if (rows.size() != dim) throw ParseError("entries has wrong number of rows");
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows[i].size() != dim) throw ParseError("entries row has wrong length");
    for (std::size_t k = 0; k < dim; ++k) mat.entries(i, k) = rational_from_json(rows[i][k]);
  }
  return mat;
}

}  // namespace qes
