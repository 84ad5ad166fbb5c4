#include "gtheta/quad_ext5.hpp"

#include "gtheta/errors.hpp"

namespace gtheta {

QuadExt5& QuadExt5::operator+=(const QuadExt5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt5& QuadExt5::operator-=(const QuadExt5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt5& QuadExt5::operator*=(const QuadExt5& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt5 QuadExt5::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt5)");
  const Rational n = norm();
  return {a_ / n, -b_ / n};
}

QuadExt5& QuadExt5::operator/=(const QuadExt5& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(sqrt5)");
  return *this *= o.inverse();
}

QuadExt5 QuadExt5::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QuadExt5 result(1);
  QuadExt5 base = *this;
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1UL) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

std::string QuadExt5::to_string() const {
  if (b_.is_zero()) return a_.pretty();
  std::string s = a_.is_zero() ? "" : a_.pretty();
  const Rational mag = b_.abs();
  if (b_.sign() < 0) s += "-";
  else if (!s.empty()) s += "+";
  if (mag != Rational(1)) s += mag.pretty() + "*";
  return s + "sqrt5";
}

std::ostream& operator<<(std::ostream& os, const QuadExt5& x) { return os << x.to_string(); }

}  // namespace gtheta
