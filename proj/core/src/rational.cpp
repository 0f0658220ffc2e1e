#include "qes/rational.hpp"

#include <mpfr.h>

#include <climits>
#include <ostream>
#include <regex>

#include "qes/error.hpp"

namespace qes {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw Error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  const std::string s(text);
  std::smatch match;
  if (std::regex_match(s, match, fraction)) {
    mpz_class num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
    mpz_class den(match[2].str());
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(mpq_class(num, den));
  }
  if (std::regex_match(s, match, decimal)) {
    const std::string whole = match[2].str();
    const std::string frac = match[3].matched ? match[3].str() : std::string();
    if (whole.empty() && frac.empty()) throw ParseError("not a number: '" + s + "'");
    long exponent = 0;
    if (match[4].matched) {
      try {
        exponent = std::stol(match[4].str());
      } catch (const std::exception&) {
        throw ParseError("exponent out of range in '" + s + "'");
      }
      if (exponent > 4096 || exponent < -4096) throw ParseError("exponent out of range in '" + s + "'");
    }
    mpz_class digits((whole + frac).empty() ? "0" : whole + frac);
    exponent -= static_cast<long>(frac.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class value = exponent < 0 ? mpq_class(digits, scale) : mpq_class(digits * scale);
    if (match[1].str() == "-") value = -value;
    return Rational(value);
  }
  throw ParseError("not a rational number: '" + s + "'");
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::to_double() const {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, value_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) throw Error("Rational: not a machine integer: " + str());
  return value_.get_num().get_si();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qes
