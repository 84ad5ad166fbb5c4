#include "gtheta/rational.hpp"

#include "gtheta/errors.hpp"

namespace gtheta {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational '" + s + "'");
  }
}

mpz_class Rational::to_integer() const {
  if (!is_integer()) throw DomainError("rational " + to_string() + " is not an integer");
  return q_.get_num();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::pretty() const {
  return is_integer() ? q_.get_num().get_str() : to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

}  // namespace gtheta
