#pragma once

#include <ostream>
#include <string>

#include "gtheta/rational.hpp"

namespace gtheta {

// Element a + b·√5 of the real quadratic field Q(√5).
class QuadExt5 {
 public:
  QuadExt5() = default;
  QuadExt5(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt5(long a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
  QuadExt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt5 sqrt5() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // Galois conjugate √5 ↦ −√5.
  QuadExt5 conjugate() const { return {a_, -b_}; }
  // Field norm a² − 5b².
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

  QuadExt5 operator-() const { return {-a_, -b_}; }
  QuadExt5& operator+=(const QuadExt5& o);
  QuadExt5& operator-=(const QuadExt5& o);
  QuadExt5& operator*=(const QuadExt5& o);
  QuadExt5& operator/=(const QuadExt5& o);

  friend QuadExt5 operator+(QuadExt5 x, const QuadExt5& y) { return x += y; }
  friend QuadExt5 operator-(QuadExt5 x, const QuadExt5& y) { return x -= y; }
  friend QuadExt5 operator*(QuadExt5 x, const QuadExt5& y) { return x *= y; }
  friend QuadExt5 operator/(QuadExt5 x, const QuadExt5& y) { return x /= y; }
  friend bool operator==(const QuadExt5&, const QuadExt5&) = default;

  QuadExt5 inverse() const;
  // Repeated squaring; negative exponents require a nonzero base.
  QuadExt5 pow(long exponent) const;

  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt5& x);

}  // namespace gtheta
