#pragma once

#include <nlohmann/json.hpp>

#include "qes/operator_matrix.hpp"
#include "qes/polynomial.hpp"
#include "qes/rational.hpp"
#include "qes/symmetric.hpp"

// JSON forms:
//   Rational        "p/q" ("p" when q == 1)
//   polynomial      [[exponents...], "p/q"] pairs in graded-lex order
//   BasisIndex      ordered list of exponent vectors
namespace qes {

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

template <class Tag>
nlohmann::json to_json(const SparsePolynomial<Tag>& p);
ZPolynomial zpoly_from_json(const nlohmann::json& j, std::size_t nvars);
TauPolynomial taupoly_from_json(const nlohmann::json& j, std::size_t nvars);

nlohmann::json to_json(const BasisIndex& basis);

nlohmann::json to_json(const OperatorMatrix& mat);
OperatorMatrix operator_matrix_from_json(const nlohmann::json& j);

}  // namespace qes
